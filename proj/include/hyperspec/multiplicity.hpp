#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hyperspec/eigenvariety.hpp"
#include "hyperspec/families.hpp"
#include "hyperspec/macaulay.hpp"
#include "hyperspec/spectral.hpp"
#include "hyperspec/roots.hpp"

namespace hyperspec {

/// Number of trailing zero coefficients of phi_{L(H)}.
int am_zero_laplacian(const Hypergraph& h, std::size_t cap = default_monomial_cap);

struct RhoMultiplicity {
  int multiplicity = 0;
  RootInterval interval;  // isolates rho among the roots of phi_A
  UniPoly factor;         // square-free factor vanishing at rho
};

/// Locates rho as the largest real root of phi_{A(H)} and returns the
/// exponent of the square-free factor vanishing there. Throws
/// InvariantViolation if the factor is not unique.
RhoMultiplicity am_rho_adjacency_detailed(const UniPoly& phi_a, const Rational& precision);
RhoMultiplicity am_rho_adjacency_detailed(const Hypergraph& h, std::size_t cap = default_monomial_cap);
int am_rho_adjacency(const Hypergraph& h, std::size_t cap = default_monomial_cap);

struct VerifyOptions {
  std::size_t monomial_cap = default_monomial_cap;
  std::size_t streaming_cap = default_streaming_cap;  // raised to monomial_cap when smaller
  std::uint64_t enumeration_cap = default_enumeration_cap;
  double tol = 1e-12;
  bool timings = false;
};

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  std::string instance;
  int k = 0;
  int n = 0;
  int m = 0;
  bool connected = false;
  std::optional<int> am_rho;
  std::optional<int> am_zero_laplacian;
  Integer ev_cardinality;
  std::optional<std::size_t> macaulay_nullity;
  std::optional<std::size_t> phase_count;
  std::optional<Integer> family_oracle;
  std::optional<double> rho_numeric;
  std::optional<RootInterval> rho_interval;
  std::vector<Integer> group;
  std::string signless_zero;  // "eigenvalue", "not-eigenvalue" (odd k) or "no-phase-solution" (even k)
  std::vector<std::string> skipped;
  std::vector<Check> checks;
  std::map<std::string, double> timings;  // seconds, only with VerifyOptions::timings
  bool all_equal = false;

  /// all_equal and every structural check passed.
  bool ok() const;
};

/// Computes every quantity that fits the caps and compares them. Skips are
/// recorded, never raised. The hypergraph must be connected.
VerificationReport verify_main_theorem(const Hypergraph& h, const VerifyOptions& options = {},
                                       const std::string& label = "");
VerificationReport verify_family(const FamilyDescriptor& family, const VerifyOptions& options = {});

/// Closed-form am(rho, A(H)) = am(0, L(H)) for a generated family.
Integer am_family_oracle(const FamilyDescriptor& family);

enum class Composite { coalesce, cartesian };

/// Multiplicity of the composite predicted from the parts: the product of
/// the parts' multiplicities for a coalescence, the SNF formula for a
/// Cartesian product.
Integer composite_multiplicity(const Hypergraph& h1, const Hypergraph& h2, Composite op,
                               std::size_t cap = default_monomial_cap);

}  // namespace hyperspec
