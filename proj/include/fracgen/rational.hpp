#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <type_traits>

#include <gmpxx.h>

namespace fracgen {

/// Exact arbitrary-precision fraction, always kept in lowest terms with a
/// positive denominator. Zero is 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(long long value);  // NOLINT(google-explicit-constructor)
  Rational(long long num, long long den);
  explicit Rational(mpq_class value);

  /// Accepts "num/den", "num", and decimal literals ("0.5", "-1.25e-3").
  /// Decimals are expanded literally, so "0.1" is 1/10 rather than the
  /// nearest double.
  static Rational parse(std::string_view text);

  /// "num/den", or just "num" when the denominator is 1.
  std::string to_string() const;
  double to_double() const;

  std::string numerator_string() const;
  std::string denominator_string() const;

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const;
  /// Throws Domain if the value is not an integer or does not fit.
  long long to_integer() const;
  /// Smallest integer >= value.
  long long ceil() const;

  Rational abs() const;
  Rational pow(int exponent) const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return value_; }

 private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

// Uniform helpers so the generic kernels can be instantiated with either
// Rational (exact), double (fast) or long double.
inline double to_double(const Rational& q) { return q.to_double(); }
inline double to_double(double x) { return x; }
inline Rational abs_value(const Rational& q) { return q.abs(); }
inline double abs_value(double x) { return x < 0 ? -x : x; }
inline bool is_exact_zero(const Rational& q) { return q.is_zero(); }
inline bool is_exact_zero(double x) { return x == 0.0; }
inline long double abs_value(long double x) { return x < 0 ? -x : x; }
inline bool is_exact_zero(long double x) { return x == 0.0L; }

template <class T>
inline constexpr bool is_exact_field_v = std::is_same_v<T, Rational>;

}  // namespace fracgen
