#include "hyperspec/modular.hpp"

#include <cmath>
#include <utility>

#include "hyperspec/error.hpp"

namespace hyperspec::modular {

u64 pow_mod(u64 base, u64 exponent, u64 p) {
  u64 result = 1 % p;
  base %= p;
  while (exponent > 0) {
    if (exponent & 1) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exponent >>= 1;
  }
  return result;
}

u64 inv_mod(u64 a, u64 p) {
  a %= p;
  if (a == 0) throw InvariantViolation("modular inverse of zero");
  return pow_mod(a, p - 2, p);
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<u64> primes_for_bits(double bits) {
  std::vector<u64> primes;
  double have = 0.0;
  u64 candidate = (u64{1} << 62) - 1;
  while (have <= bits) {
    while (!is_prime(candidate)) candidate -= 2;
    primes.push_back(candidate);
    have += std::log2(static_cast<double>(candidate));
    candidate -= 2;
  }
  return primes;
}

std::vector<u64> reduce(const Matrix<Integer>& m, u64 p) {
  std::vector<u64> out(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out[i * m.cols() + j] = mpz_fdiv_ui(m(i, j).get_mpz_t(), p);
  return out;
}

std::vector<u64> charpoly_mod(const Matrix<Integer>& a, u64 p) {
  const std::size_t n = a.rows();
  std::vector<u64> h = reduce(a, p);
  auto at = [&](std::size_t i, std::size_t j) -> u64& { return h[i * n + j]; };

  // Similarity reduction to upper Hessenberg form.
  for (std::size_t c = 0; c + 2 < n; ++c) {
    const std::size_t m = c + 1;
    std::size_t pivot = m;
    while (pivot < n && at(pivot, c) == 0) ++pivot;
    if (pivot == n) continue;
    if (pivot != m) {
      for (std::size_t j = 0; j < n; ++j) std::swap(at(pivot, j), at(m, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(at(i, pivot), at(i, m));
    }
    const u64 inv = inv_mod(at(m, c), p);
    for (std::size_t j = m + 1; j < n; ++j) {
      if (at(j, c) == 0) continue;
      const u64 u = mul_mod(at(j, c), inv, p);
      ShoupMultiplier mu(u, p);
      // row_j -= u * row_m
      u64* rj = &at(j, 0);
      const u64* rm = &at(m, 0);
      for (std::size_t col = c; col < n; ++col) rj[col] = sub_mod(rj[col], mu(rm[col]), p);
      // col_m += u * col_j
      for (std::size_t i = 0; i < n; ++i) at(i, m) = add_mod(at(i, m), mu(at(i, j)), p);
    }
  }

  // Charpoly recurrence on the Hessenberg form.
  std::vector<std::vector<u64>> polys(n + 1);
  polys[0] = {1};
  for (std::size_t m = 1; m <= n; ++m) {
    std::vector<u64> next(m + 1, 0);
    const auto& prev = polys[m - 1];
    const u64 diag = at(m - 1, m - 1);
    for (std::size_t d = 0; d < prev.size(); ++d) {
      next[d + 1] = add_mod(next[d + 1], prev[d], p);
      next[d] = sub_mod(next[d], mul_mod(diag, prev[d], p), p);
    }
    u64 t = 1;
    for (std::size_t i = m - 1; i >= 1; --i) {
      t = mul_mod(t, at(i, i - 1), p);
      if (t == 0) break;
      const u64 coef = mul_mod(at(i - 1, m - 1), t, p);
      if (coef == 0) continue;
      ShoupMultiplier mu(coef, p);
      const auto& q = polys[i - 1];
      for (std::size_t d = 0; d < q.size(); ++d) next[d] = sub_mod(next[d], mu(q[d]), p);
    }
    polys[m] = std::move(next);
  }
  return polys[n];
}

std::size_t rank_mod(const Matrix<Integer>& a, u64 p) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::vector<u64> h = reduce(a, p);
  auto at = [&](std::size_t i, std::size_t j) -> u64& { return h[i * cols + j]; };
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && at(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank)
      for (std::size_t j = c; j < cols; ++j) std::swap(at(pivot, j), at(rank, j));
    const u64 inv = inv_mod(at(rank, c), p);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (at(r, c) == 0) continue;
      ShoupMultiplier mu(mul_mod(at(r, c), inv, p), p);
      u64* rr = &at(r, 0);
      const u64* rp = &at(rank, 0);
      for (std::size_t j = c; j < cols; ++j) rr[j] = sub_mod(rr[j], mu(rp[j]), p);
    }
    ++rank;
  }
  return rank;
}

CrtReconstructor::CrtReconstructor(std::vector<u64> primes) : primes_(std::move(primes)) {
  Integer product = 1;
  for (u64 p : primes_) {
    partial_.push_back(product);
    u64 residue = mpz_fdiv_ui(product.get_mpz_t(), p);
    inverses_.push_back(inv_mod(residue, p));
    product *= Integer(static_cast<unsigned long>(p));
  }
  modulus_ = product;
  half_ = modulus_ / 2;
}

Integer CrtReconstructor::reconstruct(std::span<const u64> residues) const {
  Integer x = 0;
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    const u64 p = primes_[i];
    u64 current = mpz_fdiv_ui(x.get_mpz_t(), p);
    u64 t = mul_mod(sub_mod(residues[i] % p, current, p), inverses_[i], p);
    x += partial_[i] * Integer(static_cast<unsigned long>(t));
  }
  if (x > half_) x -= modulus_;
  return x;
}

double log2_abs(const Integer& x) {
  long exponent = 0;
  double mantissa = mpz_get_d_2exp(&exponent, x.get_mpz_t());
  return std::log2(std::fabs(mantissa)) + static_cast<double>(exponent);
}

}  // namespace hyperspec::modular
