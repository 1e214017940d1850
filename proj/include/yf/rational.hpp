#pragma once

// Exact arithmetic used throughout the library. Rationals and big integers
// are GMP's C++ classes; everything here is a thin layer of helpers for
// rendering, parsing and a few combinatorial constants.

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace yf {

using Integer = mpz_class;
using Rational = mpq_class;

/// Lowest-terms rendering: "p/q", or just "p" when q == 1.
inline std::string to_string(const Rational& r) { return r.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

/// Parses "p", "-p" or "p/q" (q > 0) into a canonical Rational.
inline Rational parse_rational(std::string_view text) {
  auto digits_only = [](std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!digits_only(num, true) || !digits_only(den, false))
    throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  std::string n(num);
  if (n[0] == '+') n.erase(0, 1);
  Integer d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  Rational r{Integer(n, 10), d};
  r.canonicalize();
  return r;
}

namespace detail {

template <class T>
T power_impl(T base, unsigned exp) {
  T result(1);
  while (exp != 0) {
    if (exp & 1U) result *= base;
    exp >>= 1U;
    if (exp != 0) base *= base;
  }
  return result;
}

}  // namespace detail

/// base^exp by repeated squaring. Plain overloads so that gmpxx expression
/// arguments convert to the value type.
inline Rational power(const Rational& base, unsigned exp) { return detail::power_impl<Rational>(base, exp); }
inline Integer power(const Integer& base, unsigned exp) { return detail::power_impl<Integer>(base, exp); }
inline double power(double base, unsigned exp) { return detail::power_impl<double>(base, exp); }

/// Binomial coefficient; zero outside 0 <= k <= n.
inline Integer binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

inline Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// Scalar conversions shared by the exact and floating-point code paths.
template <class T>
struct ScalarOps;

template <>
struct ScalarOps<Rational> {
  static Rational from(const Rational& r) { return r; }
  static Rational from(const Integer& z) { return Rational(z); }
  static Rational from(long v) { return Rational(v); }
  static constexpr bool exact = true;
};

template <>
struct ScalarOps<double> {
  static double from(const Rational& r) { return r.get_d(); }
  static double from(const Integer& z) { return z.get_d(); }
  static double from(long v) { return static_cast<double>(v); }
  static constexpr bool exact = false;
};

}  // namespace yf
