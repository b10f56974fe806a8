#pragma once

#include <vector>

#include "hyperspec/macaulay.hpp"
#include "hyperspec/tensor.hpp"

namespace hyperspec {

struct PerronOptions {
  double tol = 1e-12;
  int max_iter = 100000;
};

struct PerronData {
  double rho = 0.0;
  std::vector<double> u;  // positive, max-norm 1
  int iterations = 0;
  double residual = 0.0;  // max_i |(T u^{k-1})_i - rho u_i^{k-1}|
};

/// Spectral radius and Perron vector of a nonnegative weakly irreducible
/// tensor by power iteration on T + I. Stops once the spread of the ratios
/// (T x^{k-1})_i / x_i^{k-1} falls below tol times their maximum.
PerronData perron(const CubicalTensor<double>& t, const PerronOptions& options = {});

/// sum_{i_2..i_k} t_{i i_2..i_k} for each i.
std::vector<double> slice_row_sums(const CubicalTensor<double>& t);

/// B = (1/rho) U^{-(k-1)} T U with U = diag(u). Throws InvariantViolation
/// when a row sum of B is farther than tol from 1.
CubicalTensor<double> stochastic_normalize(const CubicalTensor<double>& t, const PerronData& perron,
                                           double tol = 1e-10);

/// Rows of the Macaulay matrix are streamed, never stored, so the row-sum
/// check reaches far larger bases than the exact charpoly path.
inline constexpr std::size_t default_streaming_cap = 250'000;

/// max over Macaulay rows of |row sum - 1|; every row is assembled, its
/// columns range-checked and entries checked nonnegative (a negative entry
/// yields +inf). Rows run in parallel; the maximum is order independent.
double stochastic_macaulay_deviation(const CubicalTensor<double>& b, std::size_t cap = default_streaming_cap);

/// True iff the Macaulay matrix of B has every row sum within tol of 1.
bool stochastic_macaulay_check(const CubicalTensor<double>& b, double tol = 1e-9,
                               std::size_t cap = default_streaming_cap);

namespace reference {
/// Same quantity from the dense Macaulay matrix.
double stochastic_macaulay_deviation(const CubicalTensor<double>& b, std::size_t cap = default_monomial_cap);
}  // namespace reference

}  // namespace hyperspec
