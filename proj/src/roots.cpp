#include "hyperspec/roots.hpp"

#include "hyperspec/error.hpp"

namespace hyperspec {

namespace {

int sign_at(const IntPoly& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return sgn(acc);
}

}  // namespace

std::vector<SquarefreeFactor> squarefree_decompose(const UniPoly& f) {
  if (f.is_zero()) throw InputError("square-free decomposition of the zero polynomial");
  std::vector<SquarefreeFactor> out;
  if (f.degree() == 0) return out;
  UniPoly fm = f.monic();
  UniPoly df = fm.derivative();
  UniPoly a = gcd(fm, df);
  UniPoly b = exact_div(fm, a);
  UniPoly c = exact_div(df, a);
  UniPoly d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    UniPoly g = gcd(b, d);
    if (g.degree() > 0) out.push_back({g, i});
    b = exact_div(b, g);
    c = exact_div(d, g);
    d = c - b.derivative();
  }
  return out;
}

UniPoly squarefree_part(const UniPoly& f) {
  if (f.is_zero()) throw InputError("square-free part of the zero polynomial");
  return exact_div(f, gcd(f, f.derivative())).monic();
}

SturmSequence::SturmSequence(const UniPoly& f) {
  if (f.is_zero()) throw InputError("Sturm sequence of the zero polynomial");
  chain_.push_back(primitive_integer_part(f));
  if (f.degree() == 0) return;
  chain_.push_back(primitive_integer_part(f.derivative()));
  while (true) {
    const IntPoly& prev = chain_[chain_.size() - 2];
    const IntPoly& cur = chain_.back();
    if (cur.size() <= 1) break;
    IntPoly r = pseudo_remainder(prev, cur);
    if (r.empty()) break;
    // rem = prem / lc^{delta+1}; the next chain element is -rem up to a
    // positive factor.
    const int delta = static_cast<int>(prev.size()) - static_cast<int>(cur.size());
    const bool lc_negative_odd_power = sgn(cur.back()) < 0 && (delta + 1) % 2 == 1;
    IntPoly next = primitive_integer_part(from_integer(r));
    // primitive_integer_part keeps the sign of the leading coefficient of r.
    if (!lc_negative_odd_power)
      for (auto& a : next) a = -a;
    chain_.push_back(std::move(next));
  }
}

int SturmSequence::variations_at(const Rational& x) const {
  int variations = 0;
  int last = 0;
  for (const auto& p : chain_) {
    int s = sign_at(p, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

int SturmSequence::variations_at_infinity(bool positive) const {
  int variations = 0;
  int last = 0;
  for (const auto& p : chain_) {
    int s = sgn(p.back());
    if (!positive && (p.size() - 1) % 2 == 1) s = -s;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

int SturmSequence::count_roots(const Rational& lo, const Rational& hi) const {
  return variations_at(lo) - variations_at(hi);
}

int SturmSequence::count_roots_above(const Rational& x) const {
  return variations_at(x) - variations_at_infinity(true);
}

int SturmSequence::count_real_roots() const {
  return variations_at_infinity(false) - variations_at_infinity(true);
}

Rational root_bound(const UniPoly& f) {
  if (f.degree() < 1) return 1;
  Rational max_ratio = 0;
  for (int i = 0; i < f.degree(); ++i) {
    Rational r = abs(f.coeff(i) / f.leading());
    if (r > max_ratio) max_ratio = r;
  }
  Rational cauchy = max_ratio + 1;
  Rational bound = 1;
  while (bound <= cauchy) bound *= 2;
  return bound;
}

RootInterval isolate_largest_real_root(const UniPoly& f, const Rational& precision) {
  if (sgn(precision) <= 0) throw InputError("isolation precision must be positive");
  UniPoly g = squarefree_part(f);
  SturmSequence sturm(g);
  if (sturm.count_real_roots() == 0) throw InputError("polynomial has no real root");
  Rational hi = root_bound(g);
  Rational lo = -hi;
  // Invariant: the largest root lies in (lo, hi] and no root exceeds hi.
  while (hi - lo > precision || sturm.count_roots(lo, hi) != 1) {
    Rational mid = (lo + hi) / 2;
    if (sturm.count_roots(mid, hi) >= 1) {
      lo = mid;
    } else if (sgn(g(mid)) == 0) {
      return {mid, mid};
    } else {
      hi = mid;
    }
  }
  return {lo, hi};
}

}  // namespace hyperspec
