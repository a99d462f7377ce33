#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cy4gv/rational.hpp"

namespace cy4gv::chow {

class Ring;
class RingClass;
using RingPtr = std::shared_ptr<const Ring>;

/// Exponent vector packed 8 bits per generator.
using Monomial = std::uint64_t;

inline constexpr std::size_t kMaxGenerators = 8;

/// Cohomology ring of a product of projective spaces, optionally with one
/// projective-bundle layer P(E) on top.
///
/// Every generator has degree 1. Factor i contributes H_i with
/// H_i^{n_i + 1} = 0. A bundle of rank r adds a last generator h with
/// h^r + c_1(E) h^{r-1} + ... + c_r(E) = 0, the c_i written in the factor
/// generators. Classes above the top degree vanish.
class Ring : public std::enable_shared_from_this<Ring> {
 public:
  /// Product of projective spaces of the given dimensions.
  static RingPtr product(std::vector<int> dims, std::vector<std::string> names = {});
  /// P(E) over the product, with c_1..c_rank of E supplied as coefficient
  /// maps over the base generators (the bundle exponent must be 0).
  static RingPtr projective_bundle(std::vector<int> dims, int rank,
                                   const std::vector<std::map<Monomial, Rational>>& chern,
                                   std::vector<std::string> names = {});

  [[nodiscard]] std::size_t generator_count() const { return caps_.size(); }
  [[nodiscard]] std::size_t factor_count() const { return dims_.size(); }
  [[nodiscard]] const std::vector<int>& dims() const { return dims_; }
  [[nodiscard]] int top_degree() const { return top_; }
  [[nodiscard]] bool has_bundle() const { return bundle_rank_ > 0; }
  [[nodiscard]] int bundle_rank() const { return bundle_rank_; }
  /// Index of the bundle generator; only meaningful when has_bundle().
  [[nodiscard]] std::size_t bundle_generator() const { return dims_.size(); }
  [[nodiscard]] const std::vector<std::string>& names() const { return names_; }
  /// c_1..c_r of the bundle over the base generators (empty without one).
  [[nodiscard]] const std::vector<std::map<Monomial, Rational>>& bundle_chern() const { return chern_; }

  /// Same generators with the bundle relation dropped (h stays free up to
  /// the top degree). For a plain product this is an equal ring.
  [[nodiscard]] RingPtr without_bundle_relation() const;

  /// The monomial whose coefficient is the integral.
  [[nodiscard]] Monomial fundamental_monomial() const;

  [[nodiscard]] RingClass zero() const;
  [[nodiscard]] RingClass one() const;
  [[nodiscard]] RingClass generator(std::size_t i, const Rational& coefficient = Rational(1)) const;
  /// sum_i a_i g_i.
  [[nodiscard]] RingClass linear(const std::vector<Rational>& coefficients) const;
  [[nodiscard]] RingClass linear(const std::vector<std::int64_t>& coefficients) const;
  [[nodiscard]] RingClass monomial(const std::vector<int>& exponents, const Rational& coefficient = Rational(1)) const;

  /// Adds c * (reduced form of monomial m) into terms. m may carry a
  /// bundle exponent of at least the rank.
  void accumulate(std::map<Monomial, Rational>& terms, Monomial m, const Rational& c) const;
  /// Multiplies two reduced monomials into terms.
  void accumulate_product(std::map<Monomial, Rational>& terms, Monomial a, Monomial b, const Rational& c) const;

  [[nodiscard]] int exponent(Monomial m, std::size_t i) const { return static_cast<int>((m >> (8 * i)) & 0xFF); }
  [[nodiscard]] int degree(Monomial m) const;
  [[nodiscard]] Monomial pack(const std::vector<int>& exponents) const;
  [[nodiscard]] std::vector<int> unpack(Monomial m) const;
  [[nodiscard]] std::string monomial_str(Monomial m) const;

  friend bool operator==(const Ring& a, const Ring& b);

 private:
  Ring(std::vector<int> dims, int rank, std::vector<std::map<Monomial, Rational>> chern, bool relation,
       std::vector<std::string> names);
  [[nodiscard]] bool in_range(Monomial m) const;
  void build_power_table();

  std::vector<int> dims_;
  int bundle_rank_ = 0;
  bool bundle_relation_ = false;
  std::vector<std::map<Monomial, Rational>> chern_;
  std::vector<int> caps_;
  int top_ = 0;
  std::vector<std::string> names_;
  /// power_table_[k - rank] is h^k reduced, for rank <= k <= top.
  std::vector<std::map<Monomial, Rational>> power_table_;
};

/// A reduced element of a Ring.
class RingClass {
 public:
  RingClass() = default;
  explicit RingClass(RingPtr ring) : ring_(std::move(ring)) {}
  RingClass(RingPtr ring, std::map<Monomial, Rational> terms);

  [[nodiscard]] const RingPtr& ring() const { return ring_; }
  [[nodiscard]] const std::map<Monomial, Rational>& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }

  [[nodiscard]] Rational coefficient(const std::vector<int>& exponents) const;
  [[nodiscard]] Rational coefficient(Monomial m) const;
  /// Homogeneous component of the given degree.
  [[nodiscard]] RingClass degree_part(int d) const;
  /// Component of degree 0 as a number.
  [[nodiscard]] Rational constant_term() const;
  [[nodiscard]] RingClass pow(unsigned n) const;

  RingClass& operator+=(const RingClass& rhs);
  RingClass& operator-=(const RingClass& rhs);
  RingClass& operator*=(const Rational& s);
  friend RingClass operator+(RingClass a, const RingClass& b) { return a += b; }
  friend RingClass operator-(RingClass a, const RingClass& b) { return a -= b; }
  friend RingClass operator*(RingClass a, const Rational& s) { return a *= s; }
  friend RingClass operator*(const Rational& s, RingClass a) { return a *= s; }
  friend RingClass operator*(const RingClass& a, const RingClass& b);
  RingClass operator-() const { return *this * Rational(-1); }

  friend bool operator==(const RingClass& a, const RingClass& b);

  [[nodiscard]] std::string str() const;

 private:
  void check_same_ring(const RingClass& rhs) const;

  RingPtr ring_;
  std::map<Monomial, Rational> terms_;
};

/// Coefficient of the fundamental monomial.
Rational integrate(const RingClass& x);
/// Multiplication by the class of a divisor, the form in which restriction
/// to a divisor enters an ambient integral.
RingClass restrict_to_divisor(const RingClass& x, const RingClass& divisor);

/// Re-expresses x (from a ring with the same generators) in `target`,
/// reducing there. Used to pass from the relation-free lift to the
/// bundle ring.
RingClass transport(const RingClass& x, const RingPtr& target);

}  // namespace cy4gv::chow
