#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace cy4gv {

/// A vector in the curve lattice, written in the geometry's chosen basis.
class CurveClass {
 public:
  CurveClass() = default;
  explicit CurveClass(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {}
  CurveClass(std::initializer_list<std::int64_t> coords) : coords_(coords) {}

  /// The zero class of the given rank.
  static CurveClass zero(std::size_t rank) { return CurveClass(std::vector<std::int64_t>(rank, 0)); }

  [[nodiscard]] std::size_t rank() const { return coords_.size(); }
  [[nodiscard]] const std::vector<std::int64_t>& coords() const { return coords_; }
  [[nodiscard]] std::int64_t operator[](std::size_t i) const { return coords_[i]; }

  [[nodiscard]] bool is_zero() const;
  /// All coordinates non-negative and not all zero.
  [[nodiscard]] bool is_effective() const;
  /// Pairing with an ample (degree) functional of the same rank.
  [[nodiscard]] std::int64_t degree(const std::vector<std::int64_t>& ample) const;
  /// gcd of the coordinates (0 for the zero class).
  [[nodiscard]] std::int64_t divisibility() const;

  CurveClass& operator+=(const CurveClass& rhs);
  CurveClass& operator-=(const CurveClass& rhs);
  friend CurveClass operator+(CurveClass a, const CurveClass& b) { return a += b; }
  friend CurveClass operator-(CurveClass a, const CurveClass& b) { return a -= b; }
  friend CurveClass operator*(std::int64_t k, CurveClass b);

  /// Exact division; throws DomainError when some coordinate is not divisible.
  [[nodiscard]] CurveClass divided_by(std::int64_t k) const;

  friend bool operator==(const CurveClass&, const CurveClass&) = default;
  friend auto operator<=>(const CurveClass&, const CurveClass&) = default;

  /// "(2,1)" style rendering.
  [[nodiscard]] std::string str() const;

 private:
  std::vector<std::int64_t> coords_;
};

std::ostream& operator<<(std::ostream& os, const CurveClass& c);

/// Pairs (k, beta/k) for every k >= 1 dividing beta, ascending in k.
/// Throws DomainError("not effective") unless beta is effective.
std::vector<std::pair<std::int64_t, CurveClass>> divisors_of(const CurveClass& beta);

/// Every ordered pair (b1, b2) of effective classes with b1 + b2 = beta.
std::vector<std::pair<CurveClass, CurveClass>> decompositions(const CurveClass& beta);

/// All effective classes of the given rank with degree at most max_degree
/// under the ample functional, sorted by degree then lexicographically.
/// Every ample coordinate must be positive.
std::vector<CurveClass> effective_classes(const std::vector<std::int64_t>& ample, std::int64_t max_degree);

}  // namespace cy4gv
