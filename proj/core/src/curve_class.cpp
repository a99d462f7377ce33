#include "cy4gv/curve_class.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

#include "cy4gv/error.hpp"

namespace cy4gv {

bool CurveClass::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](std::int64_t c) { return c == 0; });
}

bool CurveClass::is_effective() const {
  return !coords_.empty() && !is_zero() &&
         std::all_of(coords_.begin(), coords_.end(), [](std::int64_t c) { return c >= 0; });
}

std::int64_t CurveClass::degree(const std::vector<std::int64_t>& ample) const {
  if (ample.size() != coords_.size()) throw DomainError("ample vector has wrong rank");
  return std::inner_product(coords_.begin(), coords_.end(), ample.begin(), std::int64_t{0});
}

std::int64_t CurveClass::divisibility() const {
  std::int64_t g = 0;
  for (auto c : coords_) g = std::gcd(g, c);
  return g;
}

CurveClass& CurveClass::operator+=(const CurveClass& rhs) {
  if (rhs.rank() != rank()) throw DomainError("curve classes of different rank");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += rhs.coords_[i];
  return *this;
}

CurveClass& CurveClass::operator-=(const CurveClass& rhs) {
  if (rhs.rank() != rank()) throw DomainError("curve classes of different rank");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= rhs.coords_[i];
  return *this;
}

CurveClass operator*(std::int64_t k, CurveClass b) {
  for (auto& c : b.coords_) c *= k;
  return b;
}

CurveClass CurveClass::divided_by(std::int64_t k) const {
  if (k == 0) throw DomainError("division of a curve class by zero");
  CurveClass out = *this;
  for (auto& c : out.coords_) {
    if (c % k != 0) throw DomainError("curve class " + str() + " not divisible by " + std::to_string(k));
    c /= k;
  }
  return out;
}

std::string CurveClass::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) os << (i ? "," : "") << coords_[i];
  os << ')';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CurveClass& c) { return os << c.str(); }

std::vector<std::pair<std::int64_t, CurveClass>> divisors_of(const CurveClass& beta) {
  if (!beta.is_effective()) throw DomainError("not effective: " + beta.str());
  const std::int64_t g = beta.divisibility();
  std::vector<std::pair<std::int64_t, CurveClass>> out;
  for (std::int64_t k = 1; k <= g; ++k) {
    if (g % k == 0) out.emplace_back(k, beta.divided_by(k));
  }
  return out;
}

std::vector<std::pair<CurveClass, CurveClass>> decompositions(const CurveClass& beta) {
  if (!beta.is_effective()) throw DomainError("not effective: " + beta.str());
  std::vector<std::pair<CurveClass, CurveClass>> out;
  // Odometer over the box 0 <= b1 <= beta.
  std::vector<std::int64_t> b1(beta.rank(), 0);
  while (true) {
    CurveClass first(b1);
    CurveClass second = beta - first;
    if (first.is_effective() && second.is_effective()) out.emplace_back(std::move(first), std::move(second));
    std::size_t i = 0;
    while (i < b1.size() && b1[i] == beta[i]) b1[i++] = 0;
    if (i == b1.size()) break;
    ++b1[i];
  }
  return out;
}

std::vector<CurveClass> effective_classes(const std::vector<std::int64_t>& ample, std::int64_t max_degree) {
  if (ample.empty()) throw DomainError("empty ample vector");
  for (auto a : ample) {
    if (a <= 0) throw DomainError("ample vector must be positive");
  }
  std::vector<CurveClass> out;
  std::vector<std::int64_t> c(ample.size(), 0);
  // Recursive fill of coordinates while the partial degree fits.
  auto fill = [&](auto&& self, std::size_t i, std::int64_t used) -> void {
    if (i == c.size()) {
      CurveClass cc(c);
      if (cc.is_effective()) out.push_back(std::move(cc));
      return;
    }
    for (std::int64_t v = 0; used + v * ample[i] <= max_degree; ++v) {
      c[i] = v;
      self(self, i + 1, used + v * ample[i]);
    }
    c[i] = 0;
  };
  fill(fill, 0, 0);
  std::sort(out.begin(), out.end(), [&](const CurveClass& a, const CurveClass& b) {
    const auto da = a.degree(ample);
    const auto db = b.degree(ample);
    return da != db ? da < db : a < b;
  });
  return out;
}

}  // namespace cy4gv
