#pragma once

// Scalar contract shared by the exact (mpq_class) and floating
// (double, std::complex<double>) paths. Conversions between scalar
// types are explicit through scalar_cast; nothing mixes implicitly.

#include <complex>
#include <concepts>
#include <cstdint>

#include <gmpxx.h>

namespace hyperspec {

using Rational = mpq_class;
using Integer = mpz_class;
using Complex = std::complex<double>;

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
  static constexpr bool exact = true;
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static Rational from_int(std::int64_t v) { return Rational(static_cast<long>(v)); }
};

template <>
struct scalar_traits<double> {
  static constexpr bool exact = false;
  static bool is_zero(double x) { return x == 0.0; }
  static double from_int(std::int64_t v) { return static_cast<double>(v); }
};

template <>
struct scalar_traits<Complex> {
  static constexpr bool exact = false;
  static bool is_zero(const Complex& x) { return x == Complex{}; }
  static Complex from_int(std::int64_t v) { return Complex(static_cast<double>(v), 0.0); }
};

template <class S>
concept Scalar = requires(const S& a, const S& b) {
  { scalar_traits<S>::exact } -> std::convertible_to<bool>;
  { scalar_traits<S>::is_zero(a) } -> std::convertible_to<bool>;
  S(a + b);
  S(a - b);
  S(a * b);
  S(-a);
};

template <Scalar S>
bool is_zero(const S& x) {
  return scalar_traits<S>::is_zero(x);
}

template <Scalar S>
S scalar_from_int(std::int64_t v) {
  return scalar_traits<S>::from_int(v);
}

/// Explicit conversion between scalar kinds. Exact -> floating rounds;
/// floating -> exact is not offered.
template <Scalar To, Scalar From>
To scalar_cast(const From& x) {
  if constexpr (std::same_as<To, From>) {
    return x;
  } else if constexpr (std::same_as<From, Rational> && std::same_as<To, double>) {
    return x.get_d();
  } else if constexpr (std::same_as<From, Rational> && std::same_as<To, Complex>) {
    return Complex(x.get_d(), 0.0);
  } else if constexpr (std::same_as<From, double> && std::same_as<To, Complex>) {
    return Complex(x, 0.0);
  } else {
    static_assert(sizeof(To) == 0, "unsupported scalar conversion");
  }
}

}  // namespace hyperspec
