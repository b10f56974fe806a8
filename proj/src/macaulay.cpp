#include "hyperspec/macaulay.hpp"

#include <sstream>
#include <string>

namespace hyperspec {

namespace {

void enumerate_monomials(int n, int position, int remaining, std::vector<int>& current, std::vector<int>& out) {
  if (position == n - 1) {
    current[position] = remaining;
    out.insert(out.end(), current.begin(), current.end());
    return;
  }
  for (int v = remaining; v >= 0; --v) {
    current[position] = v;
    enumerate_monomials(n, position + 1, remaining - v, current, out);
  }
}

}  // namespace

std::size_t MonomialBasis::index_of(std::span<const int> alpha) const {
  // Monomials preceding alpha agree with it on a prefix and are larger at
  // the next position; with m later variables and R degree left there are
  // sum_{v > a} C(R - v + m - 1, m - 1) = C(R - a - 1 + m, m) of them.
  std::size_t index = 0;
  int remaining = degree;
  for (int i = 0; i + 1 < n; ++i) {
    const int a = alpha[i];
    const int m = n - i - 1;
    if (a < remaining) index += binomial[remaining - a - 1 + m][m];
    remaining -= a;
  }
  return index;
}

std::string MonomialBasis::monomial_name(std::size_t index) const {
  std::string name;
  auto alpha = monomial(index);
  for (int i = 0; i < n; ++i) {
    if (alpha[i] == 0) continue;
    if (!name.empty()) name += '*';
    name += "x" + std::to_string(i + 1);
    if (alpha[i] > 1) name += "^" + std::to_string(alpha[i]);
  }
  return name.empty() ? "1" : name;
}

Integer basis_size(int n, int k) {
  Integer c;
  mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n * (k - 1)), static_cast<unsigned long>(n - 1));
  return c;
}

MonomialBasis build_basis(int n, int k, std::size_t cap) {
  if (n < 1) throw InputError("monomial basis needs n >= 1");
  if (k < 2) throw InputError("monomial basis needs k >= 2");
  Integer size = basis_size(n, k);
  if (size > Integer(static_cast<unsigned long>(cap))) {
    std::ostringstream msg;
    msg << "Macaulay basis has C(n(k-1), n-1) = C(" << n * (k - 1) << ", " << n - 1 << ") = " << size
        << " monomials, above the cap of " << cap << " (raise with --guard or HYPERSPEC_GUARD)";
    std::size_t requested = size.fits_ulong_p() ? size.get_ui() : static_cast<std::size_t>(-1);
    throw GuardExceeded(msg.str(), requested, cap);
  }

  MonomialBasis basis;
  basis.n = n;
  basis.k = k;
  basis.degree = n * (k - 1) - n + 1;
  const int top = basis.degree + n;
  basis.binomial.assign(top + 1, std::vector<std::size_t>(n + 1, 0));
  for (int a = 0; a <= top; ++a) {
    basis.binomial[a][0] = 1;
    for (int b = 1; b <= std::min(a, n); ++b)
      basis.binomial[a][b] = basis.binomial[a - 1][b - 1] + (b <= a - 1 ? basis.binomial[a - 1][b] : 0);
  }

  std::vector<int> current(n);
  enumerate_monomials(n, 0, basis.degree, current, basis.exponents);
  const std::size_t count = basis.exponents.size() / n;
  basis.part.resize(count);
  basis.reduced.resize(count);
  for (std::size_t idx = 0; idx < count; ++idx) {
    auto alpha = basis.monomial(idx);
    int first = -1;
    int divisible = 0;
    for (int i = 0; i < n; ++i)
      if (alpha[i] >= k - 1) {
        if (first < 0) first = i;
        ++divisible;
      }
    if (first < 0) throw InvariantViolation("monomial of degree d not divisible by any x_i^{k-1}");
    basis.part[idx] = first;
    basis.reduced[idx] = divisible == 1;
  }
  return basis;
}

Integer expected_charpoly_degree(int n, int k) {
  Integer d;
  mpz_ui_pow_ui(d.get_mpz_t(), static_cast<unsigned long>(k - 1), static_cast<unsigned long>(n - 1));
  return d * n;
}

TensorCharpoly tensor_charpoly_detailed(const CubicalTensor<Rational>& t, std::size_t cap, CharpolyKernel kernel) {
  auto pair = macaulay_matrices(t, cap);
  auto charpoly = [kernel](const RationalMatrix& m) {
    return kernel == CharpolyKernel::multimodular ? charpoly_matrix(m) : reference::charpoly_matrix(m);
  };
  TensorCharpoly out;
  out.basis_size = pair.basis->size();
  out.full = charpoly(pair.m);
  out.minor = charpoly(pair.m_prime);
  DivMod qr = divmod(out.full, out.minor);
  if (!qr.remainder.is_zero())
    throw InvariantViolation("det(xI - M) is not divisible by det(xI' - M'): " + qr.remainder.to_string());
  out.phi = std::move(qr.quotient);
  if (Integer(out.phi.degree()) != expected_charpoly_degree(t.dim(), t.order()))
    throw InvariantViolation("characteristic polynomial has degree " + std::to_string(out.phi.degree()) +
                             ", expected n(k-1)^(n-1)");
  return out;
}

UniPoly tensor_charpoly(const CubicalTensor<Rational>& t, std::size_t cap) {
  return tensor_charpoly_detailed(t, cap).phi;
}

RationalMatrix laplacian_row_stochastic_check(const Hypergraph& h, std::size_t cap) {
  if (!is_connected(h)) throw DisconnectedError("row-stochastic check requires a connected hypergraph");
  auto pair = macaulay_matrices(laplacian_tensor(h), cap);
  const auto& m = pair.m;
  const Rational delta(max_degree(h));
  RationalMatrix a(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Rational m_sum = 0;
    Rational a_sum = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      m_sum += m(i, j);
      a(i, j) = (i == j ? Rational(1) : Rational(0)) - m(i, j) / delta;
      if (sgn(a(i, j)) < 0)
        throw InvariantViolation("I - M/Delta has a negative entry in row " + pair.basis->monomial_name(i));
      a_sum += a(i, j);
    }
    if (sgn(m_sum) != 0)
      throw InvariantViolation("Laplacian Macaulay row " + pair.basis->monomial_name(i) + " does not sum to zero");
    if (a_sum != 1) throw InvariantViolation("I - M/Delta row " + pair.basis->monomial_name(i) + " does not sum to 1");
  }
  return a;
}

std::size_t macaulay_nullity_laplacian(const Hypergraph& h, std::size_t cap) {
  if (!is_connected(h)) throw DisconnectedError("Macaulay nullity requires a connected hypergraph");
  return nullity_rational(macaulay_matrices(laplacian_tensor(h), cap).m);
}

void dump_macaulay_csv(const RationalMatrix& m, const MonomialBasis& basis, std::span<const std::size_t> indices,
                       std::ostream& out) {
  out << "row";
  for (std::size_t idx : indices) out << ',' << basis.monomial_name(idx);
  out << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << basis.monomial_name(indices[i]);
    for (std::size_t j = 0; j < m.cols(); ++j) out << ',' << m(i, j).get_str();
    out << '\n';
  }
}

double row_stochastic_deviation(const Matrix<double>& m) {
  double worst = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    double sum = 0.0;
    for (double v : m.row(i)) sum += v;
    worst = std::max(worst, std::abs(sum - 1.0));
  }
  return worst;
}

}  // namespace hyperspec
