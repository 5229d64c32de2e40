#include "fracgen/rational.hpp"

#include <cctype>
#include <limits>
#include <ostream>

#include "fracgen/error.hpp"

namespace fracgen {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// Optional sign followed by at least one digit.
bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
  return all_digits(s);
}

mpz_class parse_integer(std::string_view s) {
  std::string buf(s);
  if (!buf.empty() && buf.front() == '+') buf.erase(0, 1);
  return mpz_class(buf, 10);
}

mpz_class pow10(unsigned long e) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), 10, e);
  return out;
}

[[noreturn]] void bad_literal(std::string_view text) {
  fail(ErrorCode::Parse, "cannot parse rational from '" + std::string(text) + "'");
}

mpq_class parse_decimal(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long long exponent = 0;
  if (const auto epos = s.find_first_of("eE"); epos != std::string_view::npos) {
    const std::string_view exp_part = s.substr(epos + 1);
    if (!is_integer_literal(exp_part) || exp_part.size() > 6) bad_literal(text);
    exponent = std::stoll(std::string(exp_part));
    s = s.substr(0, epos);
  }
  std::string_view int_part = s;
  std::string_view frac_part;
  if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    int_part = s.substr(0, dot);
    frac_part = s.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty()) bad_literal(text);
  if (!int_part.empty() && !all_digits(int_part)) bad_literal(text);
  if (!frac_part.empty() && !all_digits(frac_part)) bad_literal(text);

  std::string digits = std::string(int_part) + std::string(frac_part);
  mpz_class mantissa(digits.empty() ? "0" : digits, 10);
  if (negative) mantissa = -mantissa;
  exponent -= static_cast<long long>(frac_part.size());

  mpq_class out;
  if (exponent >= 0) {
    out = mpq_class(mantissa * pow10(static_cast<unsigned long>(exponent)));
  } else {
    out = mpq_class(mantissa, pow10(static_cast<unsigned long>(-exponent)));
  }
  out.canonicalize();
  return out;
}

}  // namespace

static_assert(sizeof(long) == sizeof(long long), "LP64 expected");

Rational::Rational(long long value) : value_(static_cast<long>(value)) {}

Rational::Rational(long long num, long long den) {
  if (den == 0) fail(ErrorCode::Domain, "rational with zero denominator");
  value_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  if (value_.get_den() == 0) fail(ErrorCode::Domain, "rational with zero denominator");
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front())))
    trimmed.remove_prefix(1);
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
    trimmed.remove_suffix(1);
  if (trimmed.empty()) bad_literal(text);

  if (const auto slash = trimmed.find('/'); slash != std::string_view::npos) {
    const auto num = trimmed.substr(0, slash);
    const auto den = trimmed.substr(slash + 1);
    if (!is_integer_literal(num) || !all_digits(den)) bad_literal(text);
    mpz_class d = parse_integer(den);
    if (d == 0) fail(ErrorCode::Parse, "zero denominator in '" + std::string(text) + "'");
    return Rational(mpq_class(parse_integer(num), d));
  }
  if (is_integer_literal(trimmed)) return Rational(mpq_class(parse_integer(trimmed)));
  return Rational(parse_decimal(trimmed));
}

std::string Rational::to_string() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

double Rational::to_double() const { return mpq_get_d(value_.get_mpq_t()); }

std::string Rational::numerator_string() const { return value_.get_num().get_str(); }
std::string Rational::denominator_string() const { return value_.get_den().get_str(); }

bool Rational::is_integer() const { return value_.get_den() == 1; }

long long Rational::to_integer() const {
  if (!is_integer()) fail(ErrorCode::Domain, to_string() + " is not an integer");
  const mpz_class& n = value_.get_num();
  if (!n.fits_slong_p()) fail(ErrorCode::Domain, to_string() + " does not fit in an integer");
  return n.get_si();
}

long long Rational::ceil() const {
  mpz_class out;
  mpz_cdiv_q(out.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  if (!out.fits_slong_p()) fail(ErrorCode::Domain, to_string() + " is too large");
  return out.get_si();
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::pow(int exponent) const {
  if (exponent < 0) {
    if (is_zero()) fail(ErrorCode::Domain, "zero raised to a negative power");
    return Rational(1) / pow(-exponent);
  }
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(mpq_class(num, den));
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) fail(ErrorCode::Domain, "division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

}  // namespace fracgen
