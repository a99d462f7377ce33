#include "cy4gv/novikov_series.hpp"

#include <algorithm>

#include "cy4gv/error.hpp"

namespace cy4gv {

NovikovSeries::NovikovSeries(std::vector<std::int64_t> ample, std::int64_t cutoff)
    : ample_(std::move(ample)), cutoff_(cutoff) {
  if (ample_.empty()) throw DomainError("empty ample vector");
  if (cutoff_ < 1) throw DomainError("series cutoff must be positive");
}

Rational NovikovSeries::coefficient(const CurveClass& beta) const {
  auto it = terms_.find(beta);
  return it == terms_.end() ? Rational(0) : it->second;
}

void NovikovSeries::add_term(const CurveClass& beta, const Rational& c) {
  if (!beta.is_effective()) throw DomainError("series key not effective: " + beta.str());
  if (beta.degree(ample_) > cutoff_ || c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(beta, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void NovikovSeries::check_compatible(const NovikovSeries& rhs) const {
  if (rhs.ample_ != ample_) throw DomainError("series over different lattices");
}

NovikovSeries& NovikovSeries::operator+=(const NovikovSeries& rhs) {
  check_compatible(rhs);
  for (const auto& [beta, c] : rhs.terms_) add_term(beta, c);
  return *this;
}

NovikovSeries& NovikovSeries::operator-=(const NovikovSeries& rhs) {
  check_compatible(rhs);
  for (const auto& [beta, c] : rhs.terms_) add_term(beta, -c);
  return *this;
}

NovikovSeries& NovikovSeries::operator*=(const Rational& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [beta, c] : terms_) c *= scalar;
  return *this;
}

NovikovSeries operator*(const NovikovSeries& a, const NovikovSeries& b) {
  a.check_compatible(b);
  NovikovSeries out(a.ample_, std::min(a.cutoff_, b.cutoff_));
  for (const auto& [ba, ca] : a.terms_) {
    for (const auto& [bb, cb] : b.terms_) out.add_term(ba + bb, ca * cb);
  }
  return out;
}

NovikovSeries geometric_log(const CurveClass& beta, const std::vector<std::int64_t>& ample, std::int64_t cutoff) {
  if (!beta.is_effective()) throw DomainError("not effective: " + beta.str());
  NovikovSeries out(ample, cutoff);
  const auto d = beta.degree(ample);
  for (std::int64_t k = 1; k * d <= cutoff; ++k) out.add_term(k * beta, Rational(-1, k));
  return out;
}

}  // namespace cy4gv
