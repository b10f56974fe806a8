#include "hyperspec/report_json.hpp"

namespace hyperspec {

Json integer_json(const Integer& x) {
  if (mpz_sizeinbase(x.get_mpz_t(), 2) <= 62) return Json(x.get_si());
  return Json(x.get_str());
}

std::string rational_text(const Rational& x) { return x.get_str(); }

Json info_json(const Hypergraph& h) {
  Json j;
  j["k"] = h.uniformity();
  j["n"] = h.num_vertices();
  j["m"] = h.num_edges();
  j["degrees"] = degrees(h);
  j["connected"] = is_connected(h);
  j["edges"] = h.edges_one_based();
  return j;
}

Json polynomial_json(const UniPoly& p) {
  Json coefficients = Json::array();
  for (const auto& c : p.coefficients()) coefficients.push_back(rational_text(c));
  Json j;
  j["degree"] = p.degree();
  j["coefficients"] = std::move(coefficients);
  j["text"] = p.to_string("x");
  return j;
}

Json charpoly_json(const TensorCharpoly& c, Operator op) {
  Json j;
  j["operator"] = to_string(op);
  j["basis_size"] = c.basis_size;
  j["degree"] = c.phi.degree();
  j["trailing_zeros"] = c.phi.trailing_zeros();
  j["polynomial"] = polynomial_json(c.phi);
  return j;
}

Json eigenvariety_json(const EigenvarietyDescription& d, const std::vector<PhaseVector>* phases) {
  Json j;
  j["k"] = d.k;
  j["n"] = d.n;
  Json invariants = Json::array();
  for (const auto& x : d.divisors) invariants.push_back(integer_json(x));
  j["invariants"] = std::move(invariants);
  j["r"] = d.rank;
  j["cardinality"] = integer_json(d.cardinality);
  Json group = Json::array();
  for (const auto& x : d.group) group.push_back(integer_json(x));
  j["group"] = std::move(group);
  if (phases) j["phases"] = *phases;
  return j;
}

Json report_json(const VerificationReport& r) {
  auto optional_int = [](const auto& v) { return v ? Json(*v) : Json(nullptr); };
  Json j;
  j["instance"] = r.instance;
  j["k"] = r.k;
  j["n"] = r.n;
  j["m"] = r.m;
  j["connected"] = r.connected;
  j["am_rho"] = optional_int(r.am_rho);
  j["am_zero_laplacian"] = optional_int(r.am_zero_laplacian);
  j["ev_cardinality"] = integer_json(r.ev_cardinality);
  j["macaulay_nullity"] = optional_int(r.macaulay_nullity);
  j["phase_count"] = optional_int(r.phase_count);
  j["family_oracle"] = r.family_oracle ? integer_json(*r.family_oracle) : Json(nullptr);
  Json group = Json::array();
  for (const auto& x : r.group) group.push_back(integer_json(x));
  j["group"] = std::move(group);
  j["rho_numeric"] = r.rho_numeric ? Json(*r.rho_numeric) : Json(nullptr);
  if (r.rho_interval) {
    j["rho_interval"] = {rational_text(r.rho_interval->lo), rational_text(r.rho_interval->hi)};
  } else {
    j["rho_interval"] = nullptr;
  }
  j["signless_zero"] = r.signless_zero;
  j["all_equal"] = r.all_equal;
  j["ok"] = r.ok();
  j["skipped"] = r.skipped;
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  j["checks"] = std::move(checks);
  if (!r.timings.empty()) j["timings"] = r.timings;
  return j;
}

}  // namespace hyperspec
