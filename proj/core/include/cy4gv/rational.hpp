#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace cy4gv {

/// Exact rational number over arbitrary-precision integers.
///
/// Always kept in lowest terms with a positive denominator. Integers print
/// without a denominator ("-30"), everything else as "p/q".
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t numerator, std::int64_t denominator);
  explicit Rational(const mpz_class& value);
  explicit Rational(mpq_class value);

  /// Parses "p", "-p" or "p/q". Throws DomainError on malformed input or a
  /// zero denominator.
  static Rational parse(std::string_view text);

  [[nodiscard]] std::string str() const;
  [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
  [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }
  [[nodiscard]] const mpq_class& raw() const { return value_; }

  [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
  [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
  [[nodiscard]] int sign() const { return sgn(value_); }
  [[nodiscard]] Rational abs() const;
  /// Raises to a non-negative integer power.
  [[nodiscard]] Rational pow(unsigned exponent) const;
  [[nodiscard]] double to_double() const { return value_.get_d(); }

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Throws DomainError on division by zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Binomial coefficient C(n, k) as an exact integer; zero outside 0 <= k <= n.
Rational binomial(std::int64_t n, std::int64_t k);
/// n! for n >= 0.
Rational factorial(unsigned n);

}  // namespace cy4gv
