#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace cy4gv::chow {

/// Integer combination of line bundles O(a_1, ..., a_k), one exponent per
/// ring generator.
class KClass {
 public:
  using Label = std::vector<std::int64_t>;

  KClass() = default;
  explicit KClass(std::map<Label, std::int64_t> terms);
  /// m . O(label)
  static KClass line(Label label, std::int64_t multiplicity = 1);
  /// m . O (trivial bundle) on k generators.
  static KClass trivial(std::size_t generators, std::int64_t multiplicity = 1);

  [[nodiscard]] const std::map<Label, std::int64_t>& terms() const { return terms_; }
  [[nodiscard]] std::int64_t rank() const;
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }

  /// O(a) -> O(-a), multiplicities kept.
  [[nodiscard]] KClass dual() const;

  KClass& operator+=(const KClass& rhs);
  KClass& operator-=(const KClass& rhs);
  friend KClass operator+(KClass a, const KClass& b) { return a += b; }
  friend KClass operator-(KClass a, const KClass& b) { return a -= b; }
  KClass operator-() const;
  friend KClass operator*(std::int64_t s, KClass a);
  /// Tensor product.
  friend KClass operator*(const KClass& a, const KClass& b);

  friend bool operator==(const KClass&, const KClass&) = default;

  [[nodiscard]] std::string str() const;

 private:
  void add(const Label& label, std::int64_t m);

  std::map<Label, std::int64_t> terms_;
};

}  // namespace cy4gv::chow
