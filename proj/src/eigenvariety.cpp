#include "hyperspec/eigenvariety.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hyperspec/error.hpp"
#include "hyperspec/spectral.hpp"

namespace hyperspec {

namespace {

Integer power(int base, long exponent) {
  if (exponent < 0) throw InvariantViolation("negative exponent in a cardinality formula");
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exponent));
  return out;
}

Integer gcd_int(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

int mod(long long x, int k) {
  long long r = x % k;
  return static_cast<int>(r < 0 ? r + k : r);
}

int mod(const Integer& x, int k) { return static_cast<int>(mpz_fdiv_ui(x.get_mpz_t(), static_cast<unsigned long>(k))); }

void require_connected(const Hypergraph& h, const char* what) {
  if (!is_connected(h)) throw DisconnectedError(std::string(what) + " requires a connected hypergraph");
}

bool edges_vanish(const Hypergraph& h, const std::vector<int>& c, int target) {
  const int k = h.uniformity();
  for (const auto& e : h.edges()) {
    int sum = 0;
    for (int v : e) sum += c[v];
    if (sum % k != target) return false;
  }
  return true;
}

std::uint64_t checked_power(int k, int n, std::uint64_t cap) {
  // k^n, saturated just above cap.
  std::uint64_t value = 1;
  for (int i = 0; i < n; ++i) {
    if (value > cap / static_cast<std::uint64_t>(k)) return cap + 1;
    value *= static_cast<std::uint64_t>(k);
  }
  return value;
}

void check_enumeration_cap(int k, int n, std::uint64_t cap) {
  if (checked_power(k, n, cap) > cap)
    throw GuardExceeded("phase enumeration over k^n = " + std::to_string(k) + "^" + std::to_string(n) +
                            " states exceeds the cap of " + std::to_string(cap),
                        static_cast<std::size_t>(-1), static_cast<std::size_t>(cap));
}

// Enumerates c = V (offset + y) mod k over y_i in multiples of k / g_i
// (g_i choices each) and keeps the representatives with c_1 = 0.
std::vector<PhaseVector> enumerate_coset(const SnfResult& snf, int k, int n, const std::vector<int>& offset,
                                         std::uint64_t cap) {
  const std::size_t diag = snf.invariants.size();
  std::vector<int> choices(n), step(n);
  Integer total = 1;
  for (int i = 0; i < n; ++i) {
    int g = static_cast<std::size_t>(i) < diag ? static_cast<int>(gcd_int(snf.invariants[i], k).get_si()) : k;
    choices[i] = g;
    step[i] = k / g;
    total *= g;
  }
  if (total > Integer(static_cast<unsigned long>(cap)))
    throw GuardExceeded("SNF kernel enumeration over " + total.get_str() + " elements exceeds the cap of " +
                            std::to_string(cap),
                        static_cast<std::size_t>(-1), static_cast<std::size_t>(cap));
  std::vector<std::vector<int>> v(n, std::vector<int>(n));
  for (int r = 0; r < n; ++r)
    for (int col = 0; col < n; ++col) v[r][col] = mod(snf.v(r, col), k);

  std::vector<PhaseVector> out;
  std::vector<int> digit(n, 0);
  std::vector<int> c(n);
  while (true) {
    for (int r = 0; r < n; ++r) {
      long long acc = 0;
      for (int col = 0; col < n; ++col) acc += static_cast<long long>(v[r][col]) * (offset[col] + digit[col] * step[col]);
      c[r] = mod(acc, k);
    }
    if (c[0] == 0) out.push_back(c);
    int pos = n - 1;
    while (pos >= 0 && ++digit[pos] == choices[pos]) digit[pos--] = 0;
    if (pos < 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

ModKSnf snf_mod_k(const IncidenceMatrix& b, int k) {
  if (k < 2) throw InputError("snf_mod_k needs k >= 2");
  ModKSnf out;
  for (const auto& s : snf_integer(to_integer_matrix(b)).invariants) {
    Integer g = gcd_int(s, k);
    if (g != k) out.divisors.push_back(g);
  }
  out.rank = static_cast<int>(out.divisors.size());
  return out;
}

EigenvarietyDescription describe(const Hypergraph& h) {
  require_connected(h, "eigenvariety description");
  const int k = h.uniformity();
  const int n = h.num_vertices();
  auto snf = snf_mod_k(incidence_matrix(h), k);
  EigenvarietyDescription d;
  d.k = k;
  d.n = n;
  d.divisors = snf.divisors;
  d.rank = snf.rank;
  d.cardinality = power(k, n - d.rank - 1);
  for (const auto& di : d.divisors) {
    d.cardinality *= di;
    if (di != 1) d.group.push_back(di);
  }
  for (int i = 0; i < n - d.rank - 1; ++i) d.group.emplace_back(k);
  return d;
}

Integer cardinality(const Hypergraph& h) { return describe(h).cardinality; }

std::vector<PhaseVector> enumerate_phases_brute_force(const Hypergraph& h, std::uint64_t cap) {
  const int k = h.uniformity();
  const int n = h.num_vertices();
  check_enumeration_cap(k, n, cap);
  const std::uint64_t total = checked_power(k, n - 1, cap);
  const std::uint64_t blocks = std::min<std::uint64_t>(total, 256);
  std::vector<std::vector<PhaseVector>> found(blocks);

#pragma omp parallel for schedule(dynamic, 1)
  for (std::uint64_t b = 0; b < blocks; ++b) {
    const std::uint64_t lo = total * b / blocks;
    const std::uint64_t hi = total * (b + 1) / blocks;
    std::vector<int> c(n, 0);
    std::uint64_t rest = lo;
    for (int pos = n - 1; pos >= 1; --pos) {
      c[pos] = static_cast<int>(rest % k);
      rest /= k;
    }
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      if (edges_vanish(h, c, 0)) found[b].push_back(c);
      for (int pos = n - 1; pos >= 1 && ++c[pos] == k; --pos) c[pos] = 0;
    }
  }

  std::vector<PhaseVector> out;
  for (auto& part : found) std::move(part.begin(), part.end(), std::back_inserter(out));
  return out;
}

std::vector<PhaseVector> enumerate_phases_kernel(const Hypergraph& h, std::uint64_t cap) {
  const int n = h.num_vertices();
  return enumerate_coset(snf_integer(to_integer_matrix(incidence_matrix(h))), h.uniformity(), n,
                         std::vector<int>(n, 0), cap);
}

std::vector<PhaseVector> enumerate_phases(const Hypergraph& h, std::uint64_t cap, bool allow_kernel) {
  require_connected(h, "phase enumeration");
  if (checked_power(h.uniformity(), h.num_vertices(), cap) <= cap) return enumerate_phases_brute_force(h, cap);
  if (!allow_kernel) check_enumeration_cap(h.uniformity(), h.num_vertices(), cap);
  return enumerate_phases_kernel(h, cap);
}

bool verify_phase(const Hypergraph& h, const PhaseVector& c, Operator op) {
  const int k = h.uniformity();
  if (static_cast<int>(c.size()) != h.num_vertices()) throw InputError("phase vector length does not match n");
  int offset = 0;
  if (op == Operator::signless_laplacian) {
    if (k % 2 != 0) return false;
    offset = k / 2;
  }
  for (const auto& e : h.edges()) {
    long long total = 0;
    for (int w : e) total += c[w];
    for (int v : e)
      if (mod(total - c[v] - static_cast<long long>(k - 1) * c[v] - offset, k) != 0) return false;
  }
  return true;
}

PhaseEigenvector phase_to_eigenvector(const Hypergraph& h, const PhaseVector& c, Operator op,
                                      const std::vector<double>& u, double lambda) {
  const int n = h.num_vertices();
  const int k = h.uniformity();
  if (static_cast<int>(c.size()) != n || static_cast<int>(u.size()) != n)
    throw InputError("phase vector length does not match n");
  PhaseEigenvector out;
  out.lambda = lambda;
  out.x.resize(n);
  for (int v = 0; v < n; ++v) {
    // Exact unit for c_v = 0 keeps the all-ones point exact.
    Complex zeta = c[v] % k == 0 ? Complex(1.0, 0.0) : std::polar(1.0, 2.0 * std::numbers::pi * c[v] / k);
    out.x[v] = u[v] * zeta;
  }
  auto t = hypergraph_tensor(h, op).cast<Complex>();
  auto y = hyperspec::apply(t, std::span<const Complex>(out.x));
  auto xp = power_vector(std::span<const Complex>(out.x), k - 1);
  for (int v = 0; v < n; ++v) out.residual = std::max(out.residual, std::abs(y[v] - lambda * xp[v]));
  return out;
}

PhaseEigenvector phase_to_eigenvector(const Hypergraph& h, const PhaseVector& c, Operator op) {
  if (op == Operator::adjacency) {
    auto p = perron(adjacency_tensor(h).cast<double>());
    return phase_to_eigenvector(h, c, op, p.u, p.rho);
  }
  return phase_to_eigenvector(h, c, op, std::vector<double>(h.num_vertices(), 1.0), 0.0);
}

Integer family_oracle(const FamilyDescriptor& f) {
  const std::string& kind = f.kind;
  if (kind == "edge") return power(f.param("k"), f.param("k") - 2);
  if (kind == "hypertree") return power(f.param("k"), static_cast<long>(f.param("m")) * (f.param("k") - 2));
  if (kind == "complete") return f.param("n") > f.param("k") ? Integer(1) : power(f.param("k"), f.param("k") - 2);
  if (kind == "squid") return power(f.param("k"), static_cast<long>(f.param("t") + 1) * (f.param("k") - 2));
  if (kind == "sunflower") {
    const int k = f.param("k"), s = f.param("s"), p = f.param("p");
    const int n = s + p * (k - s);
    return power(k, n - p - 1);  // cored: k^{n-m-1}
  }
  if (kind == "power") {
    auto g = graph_by_name(f.graph);
    const int k = f.param("k");
    const long m = static_cast<long>(g.edges.size());
    return power(k, g.n + m * (k - 3) - 1);
  }
  if (kind == "graph") return 1;  // simple spectral radius of a connected graph
  if (kind == "coalesce") return family_oracle(f.parts.at(0)) * family_oracle(f.parts.at(1));
  if (kind == "cartesian") return cartesian_formula(build_family(f.parts.at(0)), build_family(f.parts.at(1)));
  throw InputError("no closed form for family '" + kind + "'");
}

Integer coalescence_formula(const Hypergraph& h1, const Hypergraph& h2) {
  if (h1.uniformity() != h2.uniformity()) throw InputError("coalescence needs equal uniformity");
  if (h1.num_edges() == 0 || h2.num_edges() == 0) throw InputError("coalescence needs nontrivial hypergraphs");
  return cardinality(h1) * cardinality(h2);
}

Integer cartesian_formula(const Hypergraph& h1, const Hypergraph& h2) {
  if (h1.uniformity() != h2.uniformity()) throw InputError("Cartesian product needs equal uniformity");
  const int k = h1.uniformity();
  auto a = describe(h1);
  auto b = describe(h2);
  const long free1 = a.n - a.rank;
  const long free2 = b.n - b.rank;
  Integer out = power(k, free1 * free2 - 1);
  for (const auto& d : a.divisors)
    for (const auto& e : b.divisors) out *= gcd_int(d, e);
  for (const auto& d : a.divisors) {
    Integer p;
    mpz_pow_ui(p.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(free2));
    out *= p;
  }
  for (const auto& e : b.divisors) {
    Integer p;
    mpz_pow_ui(p.get_mpz_t(), e.get_mpz_t(), static_cast<unsigned long>(free1));
    out *= p;
  }
  return out;
}

SignlessZero signless_zero(const Hypergraph& h, bool enumerate, std::uint64_t cap) {
  require_connected(h, "signless zero test");
  const int k = h.uniformity();
  const int n = h.num_vertices();
  const int m = h.num_edges();
  SignlessZero out;
  if (k % 2 != 0) return out;

  // With U B V = D and c = V y the system B c = (k/2) 1 becomes D y = U (k/2) 1.
  auto snf = snf_integer(to_integer_matrix(incidence_matrix(h)));
  std::vector<Integer> rhs(m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) rhs[i] += snf.u(i, j) * (k / 2);
  const int diag = static_cast<int>(snf.invariants.size());
  std::vector<int> offset(n, 0);
  for (int i = 0; i < m; ++i) {
    const int b = mod(rhs[i], k);
    if (i >= diag) {
      if (b != 0) return out;
      continue;
    }
    const Integer& s = snf.invariants[i];
    const int g = static_cast<int>(gcd_int(s, k).get_si());
    if (b % g != 0) return out;
    const int modulus = k / g;
    if (modulus == 1) continue;
    Integer unit = (s / g) % modulus;
    if (unit < 0) unit += modulus;
    Integer inverse;
    mpz_invert(inverse.get_mpz_t(), unit.get_mpz_t(), Integer(modulus).get_mpz_t());
    offset[i] = mod(Integer(inverse * (b / g)), modulus);
  }

  out.zero_is_eigenvalue = true;
  out.description = describe(h);
  if (enumerate) {
    out.phases = enumerate_coset(snf, k, n, offset, cap);
    for (const auto& c : out.phases)
      if (!verify_phase(h, c, Operator::signless_laplacian))
        throw InvariantViolation("signless phase solution fails the eigen-equation");
    if (Integer(static_cast<unsigned long>(out.phases.size())) != out.description->cardinality)
      throw InvariantViolation("signless phase count differs from the kernel size");
  }
  return out;
}

namespace reference {

std::vector<PhaseVector> enumerate_phases(const Hypergraph& h, std::uint64_t cap) {
  const int k = h.uniformity();
  const int n = h.num_vertices();
  check_enumeration_cap(k, n, cap);
  std::vector<PhaseVector> out;
  std::vector<int> c(n, 0);
  while (true) {
    if (edges_vanish(h, c, 0)) out.push_back(c);
    int pos = n - 1;
    while (pos >= 1 && ++c[pos] == k) c[pos--] = 0;
    if (pos < 1) break;
  }
  return out;
}

}  // namespace reference

}  // namespace hyperspec
