#include "cy4gv/chow/ring.hpp"

#include <numeric>
#include <sstream>

#include "cy4gv/error.hpp"

namespace cy4gv::chow {

namespace {

void add_into(std::map<Monomial, Rational>& terms, Monomial m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

}  // namespace

Ring::Ring(std::vector<int> dims, int rank, std::vector<std::map<Monomial, Rational>> chern, bool relation,
           std::vector<std::string> names)
    : dims_(std::move(dims)), bundle_rank_(rank), bundle_relation_(relation), chern_(std::move(chern)),
      names_(std::move(names)) {
  if (dims_.empty()) throw DomainError("ring needs at least one projective factor");
  for (int n : dims_) {
    if (n < 1) throw DomainError("projective factor of dimension < 1");
  }
  top_ = std::accumulate(dims_.begin(), dims_.end(), 0) + (rank > 0 ? rank - 1 : 0);
  caps_ = dims_;
  if (rank > 0) caps_.push_back(top_);
  if (caps_.size() > kMaxGenerators) throw DomainError("too many generators for the monomial packing");
  if (top_ > 120) throw DomainError("ring dimension too large for the monomial packing");
  if (names_.empty()) {
    for (std::size_t i = 0; i < dims_.size(); ++i) names_.push_back("H" + std::to_string(i + 1));
    if (rank > 0) names_.push_back("h");
  }
  if (names_.size() != caps_.size()) throw DomainError("wrong number of generator names");
  if (rank > 0) {
    if (chern_.size() != static_cast<std::size_t>(rank)) throw DomainError("need c_1..c_r of the bundle");
    for (std::size_t i = 0; i < chern_.size(); ++i) {
      for (const auto& [m, c] : chern_[i]) {
        if (exponent(m, bundle_generator()) != 0) throw DomainError("bundle Chern classes must live on the base");
        if (degree(m) != static_cast<int>(i + 1)) throw DomainError("c_i of the bundle must have degree i");
      }
    }
    if (bundle_relation_) build_power_table();
  }
}

RingPtr Ring::product(std::vector<int> dims, std::vector<std::string> names) {
  return RingPtr(new Ring(std::move(dims), 0, {}, false, std::move(names)));
}

RingPtr Ring::projective_bundle(std::vector<int> dims, int rank, const std::vector<std::map<Monomial, Rational>>& chern,
                                std::vector<std::string> names) {
  if (rank < 1) throw DomainError("bundle rank must be positive");
  return RingPtr(new Ring(std::move(dims), rank, chern, true, std::move(names)));
}

RingPtr Ring::without_bundle_relation() const {
  return RingPtr(new Ring(dims_, bundle_rank_, chern_, false, names_));
}

bool operator==(const Ring& a, const Ring& b) {
  return a.dims_ == b.dims_ && a.bundle_rank_ == b.bundle_rank_ && a.bundle_relation_ == b.bundle_relation_ &&
         a.chern_ == b.chern_;
}

int Ring::degree(Monomial m) const {
  int d = 0;
  for (std::size_t i = 0; i < caps_.size(); ++i) d += exponent(m, i);
  return d;
}

Monomial Ring::pack(const std::vector<int>& exponents) const {
  if (exponents.size() != caps_.size()) throw DomainError("exponent vector has wrong length");
  Monomial m = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 0 || exponents[i] > 255) throw DomainError("exponent out of range");
    m |= static_cast<Monomial>(exponents[i]) << (8 * i);
  }
  return m;
}

std::vector<int> Ring::unpack(Monomial m) const {
  std::vector<int> out(caps_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = exponent(m, i);
  return out;
}

std::string Ring::monomial_str(Monomial m) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < caps_.size(); ++i) {
    const int e = exponent(m, i);
    if (e == 0) continue;
    if (!first) os << '*';
    os << names_[i];
    if (e > 1) os << '^' << e;
    first = false;
  }
  if (first) os << '1';
  return os.str();
}

bool Ring::in_range(Monomial m) const {
  int total = 0;
  for (std::size_t i = 0; i < caps_.size(); ++i) {
    const int e = exponent(m, i);
    if (e > caps_[i]) return false;
    total += e;
  }
  return total <= top_;
}

Monomial Ring::fundamental_monomial() const {
  std::vector<int> e(dims_.begin(), dims_.end());
  if (has_bundle()) e.push_back(bundle_rank_ - 1);
  return pack(e);
}

void Ring::build_power_table() {
  const auto hi = bundle_generator();
  const Monomial h = Monomial{1} << (8 * hi);
  // h^r = -sum_i c_i h^{r-i}
  std::map<Monomial, Rational> current;
  for (int i = 1; i <= bundle_rank_; ++i) {
    for (const auto& [m, c] : chern_[static_cast<std::size_t>(i - 1)]) {
      const Monomial t = m + static_cast<Monomial>(bundle_rank_ - i) * h;
      if (in_range(t)) add_into(current, t, -c);
    }
  }
  power_table_.push_back(current);
  for (int k = bundle_rank_ + 1; k <= top_; ++k) {
    std::map<Monomial, Rational> next;
    for (const auto& [m, c] : current) {
      const Monomial t = m + h;
      if (exponent(t, hi) < bundle_rank_) {
        if (in_range(t)) add_into(next, t, c);
        continue;
      }
      // Exactly h^r times a base monomial: substitute the relation.
      const Monomial base = t - static_cast<Monomial>(bundle_rank_) * h;
      for (const auto& [m0, c0] : power_table_.front()) {
        const Monomial u = base + m0;
        if (in_range(u)) add_into(next, u, c * c0);
      }
    }
    power_table_.push_back(next);
    current = std::move(next);
  }
}

void Ring::accumulate(std::map<Monomial, Rational>& terms, Monomial m, const Rational& c) const {
  if (c.is_zero()) return;
  if (!bundle_relation_) {
    if (in_range(m)) add_into(terms, m, c);
    return;
  }
  const auto hi = bundle_generator();
  const int e = exponent(m, hi);
  if (e < bundle_rank_) {
    if (in_range(m)) add_into(terms, m, c);
    return;
  }
  if (degree(m) > top_) return;
  const Monomial base = m - (static_cast<Monomial>(e) << (8 * hi));
  for (std::size_t i = 0; i < hi; ++i) {
    if (exponent(base, i) > caps_[i]) return;
  }
  for (const auto& [m0, c0] : power_table_[static_cast<std::size_t>(e - bundle_rank_)]) {
    const Monomial u = base + m0;
    if (in_range(u)) add_into(terms, u, c * c0);
  }
}

void Ring::accumulate_product(std::map<Monomial, Rational>& terms, Monomial a, Monomial b, const Rational& c) const {
  // Reduced monomials have exponents <= top, so the packed sum cannot carry
  // between fields.
  accumulate(terms, a + b, c);
}

RingClass Ring::zero() const { return RingClass(shared_from_this()); }

RingClass Ring::one() const { return RingClass(shared_from_this(), {{Monomial{0}, Rational(1)}}); }

RingClass Ring::generator(std::size_t i, const Rational& coefficient) const {
  if (i >= caps_.size()) throw DomainError("generator index out of range");
  std::map<Monomial, Rational> t;
  accumulate(t, Monomial{1} << (8 * i), coefficient);
  return RingClass(shared_from_this(), std::move(t));
}

RingClass Ring::linear(const std::vector<Rational>& coefficients) const {
  if (coefficients.size() != caps_.size()) throw DomainError("linear form has wrong length");
  std::map<Monomial, Rational> t;
  for (std::size_t i = 0; i < coefficients.size(); ++i) accumulate(t, Monomial{1} << (8 * i), coefficients[i]);
  return RingClass(shared_from_this(), std::move(t));
}

RingClass Ring::linear(const std::vector<std::int64_t>& coefficients) const {
  std::vector<Rational> c(coefficients.begin(), coefficients.end());
  return linear(c);
}

RingClass Ring::monomial(const std::vector<int>& exponents, const Rational& coefficient) const {
  std::map<Monomial, Rational> t;
  accumulate(t, pack(exponents), coefficient);
  return RingClass(shared_from_this(), std::move(t));
}

RingClass::RingClass(RingPtr ring, std::map<Monomial, Rational> terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {}

void RingClass::check_same_ring(const RingClass& rhs) const {
  if (!ring_ || !rhs.ring_) throw DomainError("ring class without a ring");
  if (ring_ != rhs.ring_ && !(*ring_ == *rhs.ring_)) throw DomainError("ring classes from different rings");
}

Rational RingClass::coefficient(const std::vector<int>& exponents) const { return coefficient(ring_->pack(exponents)); }

Rational RingClass::coefficient(Monomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

RingClass RingClass::degree_part(int d) const {
  std::map<Monomial, Rational> t;
  for (const auto& [m, c] : terms_) {
    if (ring_->degree(m) == d) t.emplace(m, c);
  }
  return RingClass(ring_, std::move(t));
}

Rational RingClass::constant_term() const { return coefficient(Monomial{0}); }

RingClass RingClass::pow(unsigned n) const {
  RingClass out = ring_->one();
  for (unsigned i = 0; i < n; ++i) out = out * *this;
  return out;
}

RingClass& RingClass::operator+=(const RingClass& rhs) {
  if (!ring_) ring_ = rhs.ring_;
  check_same_ring(rhs);
  for (const auto& [m, c] : rhs.terms_) add_into(terms_, m, c);
  return *this;
}

RingClass& RingClass::operator-=(const RingClass& rhs) {
  if (!ring_) ring_ = rhs.ring_;
  check_same_ring(rhs);
  for (const auto& [m, c] : rhs.terms_) add_into(terms_, m, -c);
  return *this;
}

RingClass& RingClass::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

RingClass operator*(const RingClass& a, const RingClass& b) {
  a.check_same_ring(b);
  std::map<Monomial, Rational> t;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) a.ring_->accumulate_product(t, ma, mb, ca * cb);
  }
  return RingClass(a.ring_, std::move(t));
}

bool operator==(const RingClass& a, const RingClass& b) {
  a.check_same_ring(b);
  return a.terms_ == b.terms_;
}

std::string RingClass::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest degree first reads more naturally for Chern classes.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    else if (c.sign() < 0) os << '-';
    const Rational a = c.abs();
    const bool unit = m == 0;
    if (unit || a != Rational(1)) os << a << (unit ? "" : "*");
    if (!unit) os << ring_->monomial_str(m);
    first = false;
  }
  return os.str();
}

Rational integrate(const RingClass& x) { return x.coefficient(x.ring()->fundamental_monomial()); }

RingClass restrict_to_divisor(const RingClass& x, const RingClass& divisor) {
  for (const auto& [m, c] : divisor.terms()) {
    if (divisor.ring()->degree(m) != 1) throw DomainError("restriction needs a degree-1 divisor class");
  }
  return x * divisor;
}

RingClass transport(const RingClass& x, const RingPtr& target) {
  if (x.ring()->generator_count() != target->generator_count() || x.ring()->dims() != target->dims()) {
    throw DomainError("transport between rings with different generators");
  }
  std::map<Monomial, Rational> t;
  for (const auto& [m, c] : x.terms()) target->accumulate(t, m, c);
  return RingClass(target, std::move(t));
}

}  // namespace cy4gv::chow
