#include "hyperspec/exact_linalg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "hyperspec/error.hpp"
#include "hyperspec/modular.hpp"

namespace hyperspec {

namespace {

// log2 of the Euclidean norms of the columns and of the rows.
void line_norms(const IntegerMatrix& a, std::vector<double>& cols, std::vector<double>& rows) {
  std::vector<Integer> col_sq(a.cols(), 0), row_sq(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (sgn(a(i, j)) == 0) continue;
      Integer sq = a(i, j) * a(i, j);
      col_sq[j] += sq;
      row_sq[i] += sq;
    }
  auto half_log = [](const Integer& sq) { return sgn(sq) == 0 ? -INFINITY : 0.5 * modular::log2_abs(sq); };
  cols.resize(a.cols());
  rows.resize(a.rows());
  std::transform(col_sq.begin(), col_sq.end(), cols.begin(), half_log);
  std::transform(row_sq.begin(), row_sq.end(), rows.begin(), half_log);
}

double log2_binomial(std::size_t n, std::size_t k) {
  return (std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0)) / std::log(2.0);
}

// Sum of the j largest entries, clamped below at 0 per entry (a norm
// below 1 only comes from a zero line, which makes the minor vanish).
std::vector<double> top_prefix_sums(std::vector<double> v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  std::vector<double> sums(v.size() + 1, 0.0);
  for (std::size_t j = 0; j < v.size(); ++j) sums[j + 1] = sums[j] + std::max(0.0, v[j]);
  return sums;
}

Integer bareiss_determinant(IntegerMatrix a) {
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && sgn(a(pivot, k)) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      a.swap_rows(pivot, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer& x = a(i, j);
        x = x * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

}  // namespace

ScaledIntegerMatrix clear_denominators(const RationalMatrix& m) {
  Integer scale = 1;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m(i, j).get_den_mpz_t());
  IntegerMatrix values(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) values(i, j) = m(i, j).get_num() * (scale / m(i, j).get_den());
  return {std::move(values), scale};
}

double charpoly_coefficient_bits(const IntegerMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<double> cols, rows;
  line_norms(a, cols, rows);
  auto col_sums = top_prefix_sums(cols);
  auto row_sums = top_prefix_sums(rows);
  // The coefficient of x^{n-j} is a signed sum of C(n, j) principal j x j
  // minors, each bounded by Hadamard's inequality on rows or on columns.
  double bits = 0.0;
  for (std::size_t j = 1; j <= n; ++j)
    bits = std::max(bits, log2_binomial(n, j) + std::min(col_sums[j], row_sums[j]));
  return bits + 1.0;
}

namespace {

// det(xI - A) for an integer matrix A.
IntPoly integer_charpoly(const IntegerMatrix& a) {
  const std::size_t n = a.rows();
  auto primes = modular::primes_for_bits(charpoly_coefficient_bits(a) + 1.0);
  std::vector<std::vector<modular::u64>> residues(primes.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t t = 0; t < primes.size(); ++t) residues[t] = modular::charpoly_mod(a, primes[t]);

  modular::CrtReconstructor crt(primes);
  IntPoly coeffs(n + 1);
  std::vector<modular::u64> column(primes.size());
  for (std::size_t d = 0; d <= n; ++d) {
    for (std::size_t t = 0; t < primes.size(); ++t) column[t] = residues[t][d];
    coeffs[d] = crt.reconstruct(column);
  }
  return coeffs;
}

// Coefficient d of det(xI - M) with M = N / c is coeff_d(det(xI - N)) / c^{n-d}.
UniPoly rescale_charpoly(const IntPoly& integer_coeffs, const Integer& scale) {
  const std::size_t n = integer_coeffs.size() - 1;
  std::vector<Rational> out(n + 1);
  Integer power = 1;
  for (std::size_t d = n + 1; d-- > 0;) {
    out[d] = Rational(integer_coeffs[d], power);
    power *= scale;
  }
  return UniPoly(std::move(out));
}

}  // namespace

UniPoly charpoly_matrix(const RationalMatrix& m) {
  if (!m.square()) throw InputError("charpoly of a non-square matrix");
  if (m.rows() == 0) return UniPoly::constant(1);
  auto scaled = clear_denominators(m);
  return rescale_charpoly(integer_charpoly(scaled.values), scaled.scale);
}

Rational determinant(const RationalMatrix& m) {
  if (!m.square()) throw InputError("determinant of a non-square matrix");
  auto scaled = clear_denominators(m);
  Integer det = bareiss_determinant(std::move(scaled.values));
  Integer scale_power = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) scale_power *= scaled.scale;
  Rational out(det, scale_power);
  out.canonicalize();
  return out;
}

std::size_t rank(const RationalMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  auto a = clear_denominators(m).values;
  std::vector<double> cols, rows;
  line_norms(a, cols, rows);
  auto col_sums = top_prefix_sums(cols);
  auto row_sums = top_prefix_sums(rows);
  const std::size_t r_max = std::min(m.rows(), m.cols());
  double bits = 0.0;
  for (std::size_t j = 1; j <= r_max; ++j) bits = std::max(bits, std::min(col_sums[j], row_sums[j]));

  auto primes = modular::primes_for_bits(bits + 1.0);
  std::vector<std::size_t> ranks(primes.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t t = 0; t < primes.size(); ++t) ranks[t] = modular::rank_mod(a, primes[t]);
  return *std::max_element(ranks.begin(), ranks.end());
}

std::size_t nullity_rational(const RationalMatrix& m) { return m.cols() - rank(m); }

namespace reference {

UniPoly charpoly_matrix(const RationalMatrix& m) {
  if (!m.square()) throw InputError("charpoly of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return UniPoly::constant(1);
  auto scaled = clear_denominators(m);

  // Values of det(tI - N) at t = 0..n.
  std::vector<Rational> values(n + 1);
  for (std::size_t t = 0; t <= n; ++t) {
    IntegerMatrix shifted(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        shifted(i, j) = (i == j ? Integer(static_cast<unsigned long>(t)) : Integer(0)) - scaled.values(i, j);
    values[t] = Rational(bareiss_determinant(std::move(shifted)));
  }

  // Newton divided differences on nodes 0..n, then expand.
  std::vector<Rational> dd(values);
  for (std::size_t level = 1; level <= n; ++level)
    for (std::size_t i = n; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / Rational(static_cast<long>(level));
      if (i == level) break;
    }
  UniPoly poly = UniPoly::constant(dd[n]);
  for (std::size_t i = n; i-- > 0;) {
    poly = poly * UniPoly::linear_root(Rational(static_cast<long>(i))) + UniPoly::constant(dd[i]);
  }

  IntPoly integer_coeffs;
  for (const auto& c : poly.coefficients()) {
    if (c.get_den() != 1) throw InvariantViolation("interpolated charpoly of an integer matrix is not integral");
    integer_coeffs.push_back(c.get_num());
  }
  integer_coeffs.resize(n + 1);
  return rescale_charpoly(integer_coeffs, scaled.scale);
}

std::size_t rank(const RationalMatrix& m) {
  IntegerMatrix a = clear_denominators(m).values;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && sgn(a(pivot, c)) == 0) ++pivot;
    if (pivot == rows) continue;
    a.swap_rows(pivot, r);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer& x = a(i, j);
        x = x * a(r, c) - a(i, c) * a(r, j);
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  return r;
}

}  // namespace reference

}  // namespace hyperspec
