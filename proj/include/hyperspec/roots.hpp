#pragma once

#include <utility>
#include <vector>

#include "hyperspec/unipoly.hpp"

namespace hyperspec {

struct SquarefreeFactor {
  UniPoly factor;  // monic, square-free
  int multiplicity;
};

/// Yun's algorithm: f = lc(f) * prod factor_i^{multiplicity_i} with the
/// factors pairwise coprime and square-free, ordered by multiplicity.
std::vector<SquarefreeFactor> squarefree_decompose(const UniPoly& f);

/// f / gcd(f, f'), monic.
UniPoly squarefree_part(const UniPoly& f);

/// Sturm chain of f built from sign-corrected primitive pseudo-remainders.
class SturmSequence {
 public:
  explicit SturmSequence(const UniPoly& f);

  /// Distinct real roots in (lo, hi].
  int count_roots(const Rational& lo, const Rational& hi) const;
  /// Distinct real roots in (x, +inf).
  int count_roots_above(const Rational& x) const;
  int count_real_roots() const;

 private:
  int variations_at(const Rational& x) const;
  int variations_at_infinity(bool positive) const;

  std::vector<IntPoly> chain_;
};

/// Half-open rational interval (lo, hi], or the exact point when lo == hi.
struct RootInterval {
  Rational lo;
  Rational hi;
  bool exact() const { return lo == hi; }
  Rational width() const { return hi - lo; }
};

/// Every real root of f lies in (-bound, bound); bound is a power of two.
Rational root_bound(const UniPoly& f);

/// Interval of width <= precision containing the largest real root of f and
/// no other root of f. Throws InputError when f has no real root.
RootInterval isolate_largest_real_root(const UniPoly& f, const Rational& precision);

}  // namespace hyperspec
