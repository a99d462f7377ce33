#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "cy4gv/curve_class.hpp"
#include "cy4gv/rational.hpp"

namespace cy4gv {

/// Truncated formal series sum_beta c_beta q^beta over effective classes.
///
/// Terms of degree above the cutoff are silently dropped, as are zero
/// coefficients, so two series compare equal iff they agree coefficientwise.
class NovikovSeries {
 public:
  NovikovSeries(std::vector<std::int64_t> ample, std::int64_t cutoff);

  [[nodiscard]] const std::vector<std::int64_t>& ample() const { return ample_; }
  [[nodiscard]] std::int64_t cutoff() const { return cutoff_; }
  [[nodiscard]] const std::map<CurveClass, Rational>& terms() const { return terms_; }
  [[nodiscard]] bool empty() const { return terms_.empty(); }

  /// Coefficient at beta; zero when absent.
  [[nodiscard]] Rational coefficient(const CurveClass& beta) const;
  /// Adds c to the coefficient at beta. Non-effective or over-cutoff keys
  /// are rejected (DomainError) or dropped respectively.
  void add_term(const CurveClass& beta, const Rational& c);

  NovikovSeries& operator+=(const NovikovSeries& rhs);
  NovikovSeries& operator-=(const NovikovSeries& rhs);
  NovikovSeries& operator*=(const Rational& scalar);
  friend NovikovSeries operator+(NovikovSeries a, const NovikovSeries& b) { return a += b; }
  friend NovikovSeries operator-(NovikovSeries a, const NovikovSeries& b) { return a -= b; }
  friend NovikovSeries operator*(NovikovSeries a, const Rational& s) { return a *= s; }
  /// Cauchy product, truncated at the smaller cutoff.
  friend NovikovSeries operator*(const NovikovSeries& a, const NovikovSeries& b);

  friend bool operator==(const NovikovSeries& a, const NovikovSeries& b) {
    return a.ample_ == b.ample_ && a.cutoff_ == b.cutoff_ && a.terms_ == b.terms_;
  }

 private:
  void check_compatible(const NovikovSeries& rhs) const;

  std::vector<std::int64_t> ample_;
  std::int64_t cutoff_;
  std::map<CurveClass, Rational> terms_;
};

/// Truncation of log(1 - q^beta) = -sum_k q^{k beta}/k.
NovikovSeries geometric_log(const CurveClass& beta, const std::vector<std::int64_t>& ample, std::int64_t cutoff);

}  // namespace cy4gv
