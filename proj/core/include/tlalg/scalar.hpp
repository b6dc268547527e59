#pragma once

#include <concepts>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace tlalg {

/// Arbitrary-precision rational, always normalized (lowest terms, positive
/// denominator).
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// Parses "p", "p/q" or "-p/q". Throws Error{ParseError} on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" rendering (denominator always printed).
std::string format_rational(const Rational& q);

/// Element of the two-element field.
class Bit {
 public:
  constexpr Bit() = default;
  constexpr Bit(int v) : value_((v & 1) != 0) {}  // NOLINT: implicit from int literals

  constexpr bool value() const { return value_; }

  friend constexpr Bit operator+(Bit a, Bit b) { return Bit(a.value_ != b.value_); }
  friend constexpr Bit operator-(Bit a, Bit b) { return a + b; }
  friend constexpr Bit operator*(Bit a, Bit b) { return Bit(a.value_ && b.value_); }
  friend Bit operator/(Bit a, Bit b);
  constexpr Bit operator-() const { return *this; }
  constexpr Bit& operator+=(Bit o) { return *this = *this + o; }
  constexpr Bit& operator-=(Bit o) { return *this = *this - o; }
  constexpr Bit& operator*=(Bit o) { return *this = *this * o; }
  friend constexpr bool operator==(Bit, Bit) = default;

  friend std::ostream& operator<<(std::ostream& os, Bit b) { return os << (b.value_ ? 1 : 0); }

 private:
  bool value_ = false;
};

/// Exact field arithmetic with integer embedding. Rational and Bit qualify.
template <class F>
concept Field = std::regular<F> && std::constructible_from<F, int> && requires(F a, F b) {
  { a + b } -> std::convertible_to<F>;
  { a - b } -> std::convertible_to<F>;
  { a * b } -> std::convertible_to<F>;
  { a / b } -> std::convertible_to<F>;
  { -a } -> std::convertible_to<F>;
};

template <Field F>
bool is_zero(const F& x) {
  return x == F(0);
}

/// Prime factorization of a positive 64-bit integer (prime -> exponent).
std::map<std::uint64_t, int> factorize(std::uint64_t n);

/// Element of the rational vector space spanned by {log p : p prime}:
/// a formal sum  sum_p q_p * log p  with finitely many nonzero q_p.
///
/// The logarithms of distinct primes are linearly independent over Q, so two
/// formal logs are equal as real numbers iff their coefficient maps agree.
class FormalLog {
 public:
  FormalLog() = default;

  /// log|q| for a nonzero rational whose numerator and denominator fit in
  /// 64 bits. Throws Error{InvalidArgument} for zero or oversized input.
  static FormalLog log_abs(const Rational& q);

  /// Coefficient of log p (zero when absent).
  Rational coefficient(std::uint64_t p) const;
  const std::map<std::uint64_t, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  FormalLog& operator+=(const FormalLog& o);
  FormalLog& operator-=(const FormalLog& o);
  FormalLog& operator*=(const Rational& s);
  friend FormalLog operator+(FormalLog a, const FormalLog& b) { return a += b; }
  friend FormalLog operator-(FormalLog a, const FormalLog& b) { return a -= b; }
  friend FormalLog operator*(FormalLog a, const Rational& s) { return a *= s; }
  friend FormalLog operator*(const Rational& s, FormalLog a) { return a *= s; }
  FormalLog operator-() const { return *this * Rational(-1); }
  friend bool operator==(const FormalLog&, const FormalLog&) = default;

  friend std::ostream& operator<<(std::ostream& os, const FormalLog& x);

 private:
  void add_term(std::uint64_t p, const Rational& q);
  std::map<std::uint64_t, Rational> terms_;  // no zero coefficients
};

}  // namespace tlalg
