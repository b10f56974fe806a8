#pragma once

// Word-size modular arithmetic behind the multimodular charpoly and rank
// kernels. Primes are taken just below 2^62 so that Shoup's precomputed
// multiplication works in plain 64-bit wrapping arithmetic.

#include <cstdint>
#include <span>
#include <vector>

#include "hyperspec/matrix.hpp"
#include "hyperspec/scalar.hpp"

namespace hyperspec::modular {

using u64 = std::uint64_t;

inline u64 mul_mod(u64 a, u64 b, u64 p) {
  return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p);
}
inline u64 add_mod(u64 a, u64 b, u64 p) {
  u64 s = a + b;
  return s >= p ? s - p : s;
}
inline u64 sub_mod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

u64 pow_mod(u64 base, u64 exponent, u64 p);
u64 inv_mod(u64 a, u64 p);

/// Multiplier with a precomputed quotient estimate: a * w mod p in two
/// multiplications and one conditional subtraction.
struct ShoupMultiplier {
  u64 w;
  u64 w_shoup;
  u64 p;

  ShoupMultiplier(u64 w_, u64 p_)
      : w(w_), w_shoup(static_cast<u64>((static_cast<unsigned __int128>(w_) << 64) / p_)), p(p_) {}

  u64 operator()(u64 a) const {
    u64 q = static_cast<u64>((static_cast<unsigned __int128>(a) * w_shoup) >> 64);
    u64 r = a * w - q * p;
    return r >= p ? r - p : r;
  }
};

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(u64 n);

/// Consecutive primes below 2^62 (descending) whose product exceeds 2^bits.
std::vector<u64> primes_for_bits(double bits);

/// Row-major residues of an integer matrix.
std::vector<u64> reduce(const Matrix<Integer>& m, u64 p);

/// det(xI - A) mod p, constant term first, via Hessenberg reduction.
std::vector<u64> charpoly_mod(const Matrix<Integer>& a, u64 p);

/// Rank of A over Z/pZ.
std::size_t rank_mod(const Matrix<Integer>& a, u64 p);

/// Reconstructs integers from residues by the Chinese remainder theorem
/// (Garner's scheme), returning the representative in (-P/2, P/2].
class CrtReconstructor {
 public:
  explicit CrtReconstructor(std::vector<u64> primes);
  Integer reconstruct(std::span<const u64> residues) const;
  const Integer& modulus() const { return modulus_; }

 private:
  std::vector<u64> primes_;
  std::vector<u64> inverses_;       // (p_0 ... p_{i-1})^{-1} mod p_i
  std::vector<Integer> partial_;    // p_0 ... p_{i-1}
  Integer modulus_;
  Integer half_;
};

/// log2 |x| for x != 0.
double log2_abs(const Integer& x);

}  // namespace hyperspec::modular
