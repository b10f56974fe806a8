#include "hyperspec/unipoly.hpp"

#include <sstream>
#include <utility>

#include "hyperspec/error.hpp"

namespace hyperspec {

namespace {

void trim_int(IntPoly& f) {
  while (!f.empty() && sgn(f.back()) == 0) f.pop_back();
}

IntPoly divide_content(IntPoly f) {
  trim_int(f);
  if (f.empty()) return f;
  Integer c = content(f);
  if (c != 1)
    for (auto& a : f) mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
  return f;
}

}  // namespace

UniPoly::UniPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

UniPoly UniPoly::constant(const Rational& c) { return UniPoly({c}); }

UniPoly UniPoly::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::linear_root(const Rational& r) { return UniPoly({Rational(-r), Rational(1)}); }

void UniPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational UniPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[i];
}

const Rational& UniPoly::leading() const {
  if (coeffs_.empty()) throw InputError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational UniPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return {};
  Rational lc = leading();
  std::vector<Rational> v(coeffs_);
  for (auto& c : v) c /= lc;
  return UniPoly(std::move(v));
}

int UniPoly::trailing_zeros() const {
  if (is_zero()) throw InputError("trailing_zeros of the zero polynomial");
  int j = 0;
  while (sgn(coeffs_[j]) == 0) ++j;
  return j;
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << '-';
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = mag == 1;
    if (!unit || i == 0) out << mag.get_str();
    if (i > 0) {
      if (!unit) out << '*';
      out << var;
      if (i > 1) out << '^' << i;
    }
  }
  return out.str();
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return UniPoly(std::move(v));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + Rational(-1) * b; }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return UniPoly(std::move(v));
}

UniPoly operator*(const Rational& c, const UniPoly& a) {
  std::vector<Rational> v(a.coeffs_);
  for (auto& x : v) x *= c;
  return UniPoly(std::move(v));
}

UniPoly pow(const UniPoly& base, int exponent) {
  UniPoly result = UniPoly::constant(1);
  for (int i = 0; i < exponent; ++i) result = result * base;
  return result;
}

DivMod divmod(const UniPoly& f, const UniPoly& g) {
  if (g.is_zero()) throw InputError("polynomial division by zero");
  if (f.degree() < g.degree()) return {UniPoly{}, f};
  std::vector<Rational> rem(f.coefficients());
  std::vector<Rational> quot(f.degree() - g.degree() + 1);
  const auto& gc = g.coefficients();
  const Rational& lc = g.leading();
  const bool monic = lc == 1;
  for (int i = f.degree(); i >= g.degree(); --i) {
    if (sgn(rem[i]) == 0) continue;
    Rational q = monic ? rem[i] : Rational(rem[i] / lc);
    int shift = i - g.degree();
    quot[shift] = q;
    for (int j = 0; j <= g.degree(); ++j) rem[shift + j] -= q * gc[j];
  }
  rem.resize(std::max(0, g.degree()));
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly exact_div(const UniPoly& f, const UniPoly& g) {
  auto [q, r] = divmod(f, g);
  if (!r.is_zero()) {
    throw InvariantViolation("exact division left a nonzero remainder of degree " + std::to_string(r.degree()));
  }
  return q;
}

Integer content(const IntPoly& f) {
  Integer c = 0;
  for (const auto& a : f) {
    mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), a.get_mpz_t());
    if (c == 1) break;
  }
  return c;
}

IntPoly primitive_integer_part(const UniPoly& f) {
  if (f.is_zero()) return {};
  Integer lcm_den = 1;
  for (const auto& c : f.coefficients()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  IntPoly out;
  out.reserve(f.coefficients().size());
  for (const auto& c : f.coefficients()) out.push_back(c.get_num() * (lcm_den / c.get_den()));
  return divide_content(std::move(out));
}

UniPoly from_integer(const IntPoly& f) {
  std::vector<Rational> v;
  v.reserve(f.size());
  for (const auto& a : f) v.emplace_back(a);
  return UniPoly(std::move(v));
}

IntPoly pseudo_remainder(const IntPoly& f, const IntPoly& g) {
  IntPoly r(f);
  trim_int(r);
  const int dg = static_cast<int>(g.size()) - 1;
  if (dg < 0) throw InputError("pseudo-remainder by zero");
  const Integer& lc = g.back();
  if (static_cast<int>(r.size()) - 1 < dg) return r;
  // One multiplication by lc per quotient degree, so lc^{deg f - deg g + 1} in total.
  for (int i = static_cast<int>(r.size()) - 1; i >= dg; --i) {
    Integer lead = r[i];
    for (auto& a : r) a *= lc;
    if (sgn(lead) != 0)
      for (int j = 0; j <= dg; ++j) r[i - dg + j] -= lead * g[j];
  }
  r.resize(dg);
  trim_int(r);
  return r;
}

UniPoly gcd(const UniPoly& f, const UniPoly& g) {
  if (f.is_zero()) return g.monic();
  if (g.is_zero()) return f.monic();
  IntPoly a = primitive_integer_part(f);
  IntPoly b = primitive_integer_part(g);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    IntPoly r = divide_content(pseudo_remainder(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return from_integer(a).monic();
}

}  // namespace hyperspec
