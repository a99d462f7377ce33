#include "cy4gv/rational.hpp"

#include <ostream>

#include "cy4gv/error.hpp"

namespace cy4gv {

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

bool is_signed_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return is_digits(s);
}

}  // namespace

Rational::Rational(std::int64_t value) : value_(mpz_class(static_cast<long>(value))) {}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw DomainError("rational with zero denominator");
  value_ = mpq_class(mpz_class(static_cast<long>(numerator)), mpz_class(static_cast<long>(denominator)));
  value_.canonicalize();
}

Rational::Rational(const mpz_class& value) : value_(value) {}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  if (value_.get_den() == 0) throw DomainError("rational with zero denominator");
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_signed_integer(num) || !is_digits(den)) {
    throw DomainError("malformed rational '" + std::string(text) + "'");
  }
  std::string num_str(num);
  if (num_str.front() == '+') num_str.erase(0, 1);
  mpz_class n(num_str, 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw DomainError("rational with zero denominator '" + std::string(text) + "'");
  return Rational(mpq_class(n, d));
}

std::string Rational::str() const { return value_.get_str(10); }

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::pow(unsigned exponent) const {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), exponent);
  return Rational(mpq_class(num, den));
}

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
  if (rhs.is_zero()) throw DomainError("division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return Rational(0);
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(out);
}

Rational factorial(unsigned n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return Rational(out);
}

}  // namespace cy4gv
