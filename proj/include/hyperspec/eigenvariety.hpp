#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hyperspec/families.hpp"
#include "hyperspec/hypergraph.hpp"
#include "hyperspec/scalar.hpp"
#include "hyperspec/smith.hpp"
#include "hyperspec/tensor.hpp"

namespace hyperspec {

inline constexpr std::uint64_t default_enumeration_cap = 10'000'000;

/// Residues c_v mod k with c_1 = 0; x_v = u_v exp(2 pi i c_v / k).
using PhaseVector = std::vector<int>;

struct ModKSnf {
  std::vector<Integer> divisors;  // gcd(s_i, k) for the s_i with gcd(s_i, k) != k
  int rank = 0;
};

/// Smith normal form over Z_k through the integer SNF of B.
ModKSnf snf_mod_k(const IncidenceMatrix& b, int k);

struct EigenvarietyDescription {
  int k = 0;
  int n = 0;
  std::vector<Integer> divisors;
  int rank = 0;
  Integer cardinality;       // k^{n-r-1} prod d_i
  std::vector<Integer> group;  // cyclic orders: the d_i != 1, then n-r-1 copies of k
};

/// Throws DisconnectedError for a disconnected hypergraph.
EigenvarietyDescription describe(const Hypergraph& h);
Integer cardinality(const Hypergraph& h);

/// Every c with c_1 = 0 and each edge sum divisible by k, by scanning all
/// k^{n-1} candidates. Work is split into fixed blocks scanned in parallel
/// and concatenated in block order, so the output is sorted. Throws
/// GuardExceeded when k^n > cap.
std::vector<PhaseVector> enumerate_phases_brute_force(const Hypergraph& h,
                                                      std::uint64_t cap = default_enumeration_cap);

/// Same set from the integer SNF: c = V y with s_i y_i = 0 mod k. Throws
/// GuardExceeded when the number of kernel elements exceeds cap.
std::vector<PhaseVector> enumerate_phases_kernel(const Hypergraph& h, std::uint64_t cap = default_enumeration_cap);

/// Brute force when k^n <= cap, otherwise the SNF kernel unless disabled.
std::vector<PhaseVector> enumerate_phases(const Hypergraph& h, std::uint64_t cap = default_enumeration_cap,
                                          bool allow_kernel = true);

/// Checks termwise, in exponent arithmetic mod k, that x_v = u_v zeta^{c_v}
/// solves the eigen-equation: for every v and every edge e containing v,
/// sum_{w in e, w != v} c_w = (k-1) c_v (adjacency at rho, Laplacian at 0)
/// or (k-1) c_v + k/2 (signless Laplacian at 0, k even).
bool verify_phase(const Hypergraph& h, const PhaseVector& c, Operator op);

struct PhaseEigenvector {
  std::vector<Complex> x;
  double lambda = 0.0;
  double residual = 0.0;  // max_i |(T x^{k-1})_i - lambda x_i^{k-1}|
};

/// For the adjacency operator u is the Perron vector of A(H) and lambda its
/// spectral radius; for the Laplacians u is all ones and lambda = 0.
PhaseEigenvector phase_to_eigenvector(const Hypergraph& h, const PhaseVector& c, Operator op);
PhaseEigenvector phase_to_eigenvector(const Hypergraph& h, const PhaseVector& c, Operator op,
                                      const std::vector<double>& u, double lambda);

/// Closed-form |V_rho(A(H))| for a generated family.
Integer family_oracle(const FamilyDescriptor& family);

/// |V(H1)| |V(H2)| for the coalescence of nontrivial connected parts.
Integer coalescence_formula(const Hypergraph& h1, const Hypergraph& h2);

/// k^{(n1-r1)(n2-r2)-1} prod gcd(d_i, e_j) prod d_i^{n2-r2} prod e_j^{n1-r1}.
Integer cartesian_formula(const Hypergraph& h1, const Hypergraph& h2);

struct SignlessZero {
  bool zero_is_eigenvalue = false;
  std::optional<EigenvarietyDescription> description;  // coset shape when solvable
  std::vector<PhaseVector> phases;                     // filled when enumerate is set
};

/// Solves sum_{v in e} c_v = k/2 (mod k) for every edge. For odd k there is
/// no such phase vector.
SignlessZero signless_zero(const Hypergraph& h, bool enumerate = false,
                           std::uint64_t cap = default_enumeration_cap);

namespace reference {

/// Serial odometer scan over all k^{n-1} candidates.
std::vector<PhaseVector> enumerate_phases(const Hypergraph& h, std::uint64_t cap = default_enumeration_cap);

}  // namespace reference

}  // namespace hyperspec
