#pragma once

#include <cstddef>
#include <memory>
#include <ostream>
#include <span>
#include <vector>

#include "hyperspec/error.hpp"
#include "hyperspec/exact_linalg.hpp"
#include "hyperspec/hypergraph.hpp"
#include "hyperspec/tensor.hpp"
#include "hyperspec/unipoly.hpp"

namespace hyperspec {

inline constexpr std::size_t default_monomial_cap = 1500;

/// Degree-d monomials in n variables for the system of n forms of degree
/// k-1, d = n(k-1) - n + 1. Monomials are in lexicographically descending
/// order (x_1^d first); the same order indexes rows and columns of M.
struct MonomialBasis {
  int n = 0;
  int k = 0;
  int degree = 0;
  std::vector<int> exponents;  // n per monomial
  std::vector<int> part;       // least i with x_i^{k-1} | x^alpha
  std::vector<bool> reduced;   // exactly one such i
  std::vector<std::vector<std::size_t>> binomial;  // binomial[a][b] = C(a, b)

  std::size_t size() const { return part.size(); }
  std::span<const int> monomial(std::size_t index) const {
    return std::span<const int>(exponents).subspan(index * n, n);
  }
  /// Position of an exponent vector of total degree `degree`.
  std::size_t index_of(std::span<const int> alpha) const;
  std::string monomial_name(std::size_t index) const;
};

/// C(n(k-1), n-1), the number of degree-d monomials.
Integer basis_size(int n, int k);

/// Throws GuardExceeded when the basis would have more than cap monomials.
MonomialBasis build_basis(int n, int k, std::size_t cap = default_monomial_cap);

/// Row alpha in S_i holds the coefficients of x^alpha / x_i^{k-1} * F_i with
/// F_i = (T x^{k-1})_i. Mprime keeps the non-reduced rows and columns.
template <Scalar S>
struct MacaulayPair {
  std::shared_ptr<const MonomialBasis> basis;
  Matrix<S> m;
  Matrix<S> m_prime;
  std::vector<std::size_t> nonreduced;  // indices into basis of M' rows
};

template <Scalar S>
MacaulayPair<S> macaulay_matrices(const CubicalTensor<S>& t, std::size_t cap = default_monomial_cap) {
  auto basis = std::make_shared<const MonomialBasis>(build_basis(t.dim(), t.order(), cap));
  const auto rp = row_polynomials(t);
  const int n = basis->n;
  const int shift = basis->k - 1;
  const std::size_t size = basis->size();

  MacaulayPair<S> pair;
  pair.basis = basis;
  pair.m = Matrix<S>(size, size, scalar_from_int<S>(0));
#pragma omp parallel for schedule(dynamic, 16)
  for (std::size_t row = 0; row < size; ++row) {
    const int i = basis->part[row];
    std::vector<int> beta(n);
    auto alpha = basis->monomial(row);
    for (std::size_t term = rp.offsets[i]; term < rp.offsets[i + 1]; ++term) {
      std::copy(alpha.begin(), alpha.end(), beta.begin());
      beta[i] -= shift;
      for (int j : rp.tail(term)) ++beta[j];
      S& entry = pair.m(row, basis->index_of(beta));
      entry = S(entry + rp.coefficients[term]);
    }
  }
  for (std::size_t r = 0; r < size; ++r)
    if (!basis->reduced[r]) pair.nonreduced.push_back(r);
  pair.m_prime = pair.m.submatrix(pair.nonreduced, pair.nonreduced);
  return pair;
}

/// Selects the exact matrix characteristic polynomial kernel.
enum class CharpolyKernel { multimodular, interpolation };

struct TensorCharpoly {
  UniPoly phi;   // characteristic polynomial of the tensor
  UniPoly full;  // det(x I - M)
  UniPoly minor; // det(x I' - M')
  std::size_t basis_size = 0;
};

/// phi = det(xI - M) / det(xI' - M'). Throws InvariantViolation when the
/// division leaves a remainder or deg phi != n (k-1)^{n-1}.
TensorCharpoly tensor_charpoly_detailed(const CubicalTensor<Rational>& t, std::size_t cap = default_monomial_cap,
                                        CharpolyKernel kernel = CharpolyKernel::multimodular);
UniPoly tensor_charpoly(const CubicalTensor<Rational>& t, std::size_t cap = default_monomial_cap);

/// n (k-1)^{n-1}.
Integer expected_charpoly_degree(int n, int k);

/// Builds I - M / Delta for the Laplacian Macaulay matrix of a connected H
/// and checks exactly that M's rows sum to zero and that the result is
/// nonnegative with unit row sums. Throws InvariantViolation otherwise.
RationalMatrix laplacian_row_stochastic_check(const Hypergraph& h, std::size_t cap = default_monomial_cap);

/// nullity of the Laplacian Macaulay matrix.
std::size_t macaulay_nullity_laplacian(const Hypergraph& h, std::size_t cap = default_monomial_cap);

/// CSV with a header row of monomial names; entries as p/q.
void dump_macaulay_csv(const RationalMatrix& m, const MonomialBasis& basis, std::span<const std::size_t> indices,
                       std::ostream& out);

/// max_i |sum_j m(i, j) - 1|.
double row_stochastic_deviation(const Matrix<double>& m);

}  // namespace hyperspec
