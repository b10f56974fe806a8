#pragma once

#include <json.hpp>

#include "hyperspec/eigenvariety.hpp"
#include "hyperspec/hypergraph.hpp"
#include "hyperspec/macaulay.hpp"
#include "hyperspec/multiplicity.hpp"

namespace hyperspec {

using Json = nlohmann::ordered_json;

/// A JSON number when it fits in 64 bits, a decimal string otherwise.
Json integer_json(const Integer& x);
/// "p/q", or "p" when q = 1.
std::string rational_text(const Rational& x);

Json info_json(const Hypergraph& h);
/// Coefficients ascending from the constant term, exact, as strings.
Json polynomial_json(const UniPoly& p);
Json charpoly_json(const TensorCharpoly& c, Operator op);
Json eigenvariety_json(const EigenvarietyDescription& d, const std::vector<PhaseVector>* phases = nullptr);
Json report_json(const VerificationReport& r);

}  // namespace hyperspec
