#pragma once

#include <cstddef>

#include "hyperspec/matrix.hpp"
#include "hyperspec/scalar.hpp"
#include "hyperspec/unipoly.hpp"

namespace hyperspec {

using RationalMatrix = Matrix<Rational>;
using IntegerMatrix = Matrix<Integer>;

/// M = values / scale with scale the lcm of M's denominators.
struct ScaledIntegerMatrix {
  IntegerMatrix values;
  Integer scale;
};
ScaledIntegerMatrix clear_denominators(const RationalMatrix& m);

/// det(xI - M), exact. Computed modulo enough word-size primes to cover a
/// Hadamard-type bound on the coefficients, then lifted by CRT; the primes
/// are processed in parallel and combined in a fixed order.
UniPoly charpoly_matrix(const RationalMatrix& m);

/// Fraction-free (Bareiss) determinant over the integers.
Rational determinant(const RationalMatrix& m);

/// Exact rank over Q. Ranks modulo primes never exceed the rational rank,
/// and a prime where the rank drops must divide a nonzero minor, so the
/// maximum over primes whose product exceeds the Hadamard bound is exact.
std::size_t rank(const RationalMatrix& m);

/// dim ker M = cols - rank.
std::size_t nullity_rational(const RationalMatrix& m);

/// Bits needed so that every coefficient of det(xI - A) lies strictly
/// inside (-2^bits, 2^bits).
double charpoly_coefficient_bits(const IntegerMatrix& a);

/// Serial exact implementations kept as independent oracles for the
/// parallel kernels above.
namespace reference {

/// Evaluates det(tI - M) at dim+1 integer points with Bareiss elimination
/// and interpolates.
UniPoly charpoly_matrix(const RationalMatrix& m);

/// Bareiss fraction-free row echelon form.
std::size_t rank(const RationalMatrix& m);

}  // namespace reference

}  // namespace hyperspec
