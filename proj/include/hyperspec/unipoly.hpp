#pragma once

#include <string>
#include <vector>

#include "hyperspec/scalar.hpp"

namespace hyperspec {

/// Dense univariate polynomial over the rationals, constant term first.
/// The coefficient vector never carries trailing (leading-degree) zeros.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coefficients);

  static UniPoly constant(const Rational& c);
  static UniPoly monomial(const Rational& c, int degree);
  /// x - r
  static UniPoly linear_root(const Rational& r);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coeff(int i) const;
  const Rational& leading() const;

  Rational operator()(const Rational& x) const;
  UniPoly derivative() const;
  UniPoly monic() const;

  /// Largest j with x^j dividing the polynomial (multiplicity of the root 0).
  int trailing_zeros() const;

  /// Human-readable form, highest degree first.
  std::string to_string(const std::string& var = "x") const;

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const Rational& c, const UniPoly& a);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

UniPoly pow(const UniPoly& base, int exponent);

struct DivMod {
  UniPoly quotient;
  UniPoly remainder;
};

/// Euclidean division; throws InputError when g is zero.
DivMod divmod(const UniPoly& f, const UniPoly& g);

/// q with f = q * g. A nonzero remainder throws InvariantViolation.
UniPoly exact_div(const UniPoly& f, const UniPoly& g);

/// Monic gcd (zero iff both inputs are zero). Runs a primitive remainder
/// sequence over the integers to keep coefficient growth down.
UniPoly gcd(const UniPoly& f, const UniPoly& g);

/// Integer polynomials, constant term first, used by the remainder
/// sequences in gcd and Sturm chains.
using IntPoly = std::vector<Integer>;

/// Scales f to an integer polynomial with content 1 and the sign of f's
/// leading coefficient.
IntPoly primitive_integer_part(const UniPoly& f);
UniPoly from_integer(const IntPoly& f);
Integer content(const IntPoly& f);
/// lc(g)^{deg f - deg g + 1} f mod g.
IntPoly pseudo_remainder(const IntPoly& f, const IntPoly& g);

}  // namespace hyperspec
