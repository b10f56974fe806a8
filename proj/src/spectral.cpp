#include "hyperspec/spectral.hpp"

#include <algorithm>
#include <cmath>

namespace hyperspec {

PerronData perron(const CubicalTensor<double>& t, const PerronOptions& options) {
  if (!is_nonnegative(t)) throw InputError("Perron iteration needs a nonnegative tensor");
  if (!weakly_irreducible(t)) throw InputError("Perron iteration needs a weakly irreducible tensor");
  const int n = t.dim();
  const int p = t.order() - 1;
  const auto rp = row_polynomials(t);

  std::vector<double> x(n, 1.0);
  PerronData out;
  for (int iter = 1; iter <= options.max_iter; ++iter) {
    auto y = apply(rp, std::span<const double>(x));
    double lo = INFINITY, hi = 0.0;
    for (int i = 0; i < n; ++i) {
      double xp = std::pow(x[i], p);
      double ratio = y[i] / xp;
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
      y[i] += xp;  // (T + I) x^{k-1}
    }
    if (hi - lo <= options.tol * std::max(hi, 1.0)) {
      out.rho = 0.5 * (lo + hi);
      out.u = x;
      out.iterations = iter;
      auto tx = apply(rp, std::span<const double>(x));
      for (int i = 0; i < n; ++i)
        out.residual = std::max(out.residual, std::abs(tx[i] - out.rho * std::pow(x[i], p)));
      return out;
    }
    double top = 0.0;
    for (int i = 0; i < n; ++i) {
      x[i] = std::pow(y[i], 1.0 / p);
      top = std::max(top, x[i]);
    }
    for (auto& v : x) v /= top;
  }
  throw Error("Perron iteration did not converge within " + std::to_string(options.max_iter) + " iterations");
}

std::vector<double> slice_row_sums(const CubicalTensor<double>& t) {
  std::vector<double> sums(t.dim(), 0.0);
  for (const auto& [key, value] : t.classes())
    sums[key[0]] += value * static_cast<double>(multiset_permutations(std::span<const int>(key).subspan(1)));
  return sums;
}

CubicalTensor<double> stochastic_normalize(const CubicalTensor<double>& t, const PerronData& perron, double tol) {
  DiagonalScaling<double> u{perron.u};
  DiagonalScaling<double> p = u.power(-(t.order() - 1));
  for (auto& v : p.diag) v /= perron.rho;
  auto b = triple_product(p, t, u);
  auto sums = slice_row_sums(b);
  for (std::size_t i = 0; i < sums.size(); ++i)
    if (std::abs(sums[i] - 1.0) > tol)
      throw InvariantViolation("stochastic normalization: row " + std::to_string(i + 1) + " sums to " +
                               std::to_string(sums[i]));
  return b;
}

double stochastic_macaulay_deviation(const CubicalTensor<double>& b, std::size_t cap) {
  const MonomialBasis basis = build_basis(b.dim(), b.order(), cap);
  const auto rp = row_polynomials(b);
  const int n = basis.n;
  const int shift = basis.k - 1;
  const auto size = static_cast<std::int64_t>(basis.size());
  double worst = 0.0;
#pragma omp parallel for schedule(dynamic, 256) reduction(max : worst)
  for (std::int64_t row = 0; row < size; ++row) {
    const int i = basis.part[row];
    std::vector<int> beta(n);
    auto alpha = basis.monomial(row);
    double sum = 0.0;
    bool valid = true;
    for (std::size_t term = rp.offsets[i]; term < rp.offsets[i + 1]; ++term) {
      std::copy(alpha.begin(), alpha.end(), beta.begin());
      beta[i] -= shift;
      for (int j : rp.tail(term)) ++beta[j];
      valid = valid && basis.index_of(beta) < basis.size() && rp.coefficients[term] >= 0.0;
      sum += rp.coefficients[term];
    }
    worst = std::max(worst, valid ? std::abs(sum - 1.0) : INFINITY);
  }
  return worst;
}

bool stochastic_macaulay_check(const CubicalTensor<double>& b, double tol, std::size_t cap) {
  return stochastic_macaulay_deviation(b, cap) <= tol;
}

namespace reference {

double stochastic_macaulay_deviation(const CubicalTensor<double>& b, std::size_t cap) {
  auto pair = macaulay_matrices(b, cap);
  for (std::size_t i = 0; i < pair.m.rows(); ++i)
    for (double v : pair.m.row(i))
      if (v < 0.0) return INFINITY;
  return row_stochastic_deviation(pair.m);
}

}  // namespace reference

}  // namespace hyperspec
