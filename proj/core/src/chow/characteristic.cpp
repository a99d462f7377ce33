#include "cy4gv/chow/characteristic.hpp"

#include <algorithm>

#include "cy4gv/error.hpp"

namespace cy4gv::chow {

std::vector<Rational> exp_series(std::size_t terms) {
  std::vector<Rational> out;
  for (std::size_t k = 0; k < terms; ++k) out.push_back(Rational(1) / factorial(static_cast<unsigned>(k)));
  return out;
}

std::vector<Rational> todd_inverse_series(std::size_t terms) {
  std::vector<Rational> out;
  for (std::size_t k = 0; k < terms; ++k) {
    out.push_back(Rational(k % 2 ? -1 : 1) / factorial(static_cast<unsigned>(k + 1)));
  }
  return out;
}

std::vector<Rational> todd_series(std::size_t terms) {
  // Reciprocal of the inverse series.
  const auto a = todd_inverse_series(terms);
  std::vector<Rational> b(terms);
  if (terms == 0) return b;
  b[0] = Rational(1) / a[0];
  for (std::size_t n = 1; n < terms; ++n) {
    Rational s;
    for (std::size_t k = 1; k <= n; ++k) s += a[k] * b[n - k];
    b[n] = -s / a[0];
  }
  return b;
}

RingClass apply_series(const std::vector<Rational>& coeffs, const RingClass& x) {
  if (!x.constant_term().is_zero()) throw DomainError("series argument must have no constant term");
  const auto& ring = x.ring();
  RingClass out = ring->zero();
  RingClass power = ring->one();
  const auto n = std::min<std::size_t>(coeffs.size(), static_cast<std::size_t>(ring->top_degree()) + 1);
  for (std::size_t k = 0; k < n; ++k) {
    if (power.is_zero()) break;
    if (!coeffs[k].is_zero()) out += power * coeffs[k];
    if (k + 1 < n) power = power * x;
  }
  return out;
}

RingClass ch(const RingPtr& ring, const KClass& k) {
  const auto e = exp_series(static_cast<std::size_t>(ring->top_degree()) + 1);
  RingClass out = ring->zero();
  for (const auto& [label, m] : k.terms()) {
    if (label.size() != ring->generator_count()) throw DomainError("line bundle label does not match the ring");
    out += apply_series(e, ring->linear(label)) * Rational(m);
  }
  return out;
}

RingClass td_inverse(const RingClass& x) {
  return apply_series(todd_inverse_series(static_cast<std::size_t>(x.ring()->top_degree()) + 1), x);
}

namespace {

void check_fiber_factors(const Ring& ring, const std::vector<std::size_t>& factors) {
  for (auto f : factors) {
    if (f >= ring.factor_count()) throw DomainError("fiber generator not in ring");
    for (const auto& c : ring.bundle_chern()) {
      for (const auto& [m, coeff] : c) {
        if (ring.exponent(m, f) != 0) throw DomainError("fiber factor is not a product factor of the bundle ring");
      }
    }
  }
}

}  // namespace

RingClass todd_fiber(const RingPtr& ring, const std::vector<std::size_t>& factors) {
  check_fiber_factors(*ring, factors);
  const auto td = todd_series(static_cast<std::size_t>(ring->top_degree()) + 1);
  RingClass out = ring->one();
  for (auto f : factors) {
    const auto n = static_cast<unsigned>(ring->dims()[f]);
    out = out * apply_series(td, ring->generator(f)).pow(n + 1);
  }
  return out;
}

RingClass fiber_pushforward(const RingClass& x, const std::vector<std::size_t>& factors) {
  const auto& ring = x.ring();
  check_fiber_factors(*ring, factors);
  std::map<Monomial, Rational> t;
  for (const auto& [m, c] : x.terms()) {
    bool top = true;
    Monomial base = m;
    for (auto f : factors) {
      const int e = ring->exponent(m, f);
      if (e != ring->dims()[f]) {
        top = false;
        break;
      }
      base -= static_cast<Monomial>(e) << (8 * f);
    }
    if (top) ring->accumulate(t, base, c);
  }
  return RingClass(ring, std::move(t));
}

RingClass grr_pushforward(const RingClass& x, const std::vector<std::size_t>& factors) {
  return fiber_pushforward(x * todd_fiber(x.ring(), factors), factors);
}

std::vector<RingClass> chern_classes(std::int64_t rank, const RingClass& chclass) {
  const auto& ring = chclass.ring();
  if (chclass.constant_term() != Rational(rank)) {
    throw DomainError("rank mismatch: ch_0 = " + chclass.constant_term().str() + ", expected " + std::to_string(rank));
  }
  const int top = ring->top_degree();
  std::vector<RingClass> p(static_cast<std::size_t>(top) + 1, ring->zero());
  for (int k = 1; k <= top; ++k) p[static_cast<std::size_t>(k)] = chclass.degree_part(k) * factorial(static_cast<unsigned>(k));
  std::vector<RingClass> c{ring->one()};
  for (int k = 1; k <= top; ++k) {
    RingClass acc = ring->zero();
    for (int i = 1; i <= k; ++i) {
      const auto term = c[static_cast<std::size_t>(k - i)] * p[static_cast<std::size_t>(i)];
      if (i % 2) acc += term;
      else acc -= term;
    }
    c.push_back(acc * Rational(1, k));
  }
  return c;
}

RingClass chern_from_ch(std::int64_t rank, const RingClass& chclass) {
  RingClass out = chclass.ring()->zero();
  for (const auto& c : chern_classes(rank, chclass)) out += c;
  return out;
}

RingClass euler_class(std::int64_t rank, const RingClass& chclass) {
  if (rank < 0) throw DomainError("Euler class of a virtual bundle of negative rank");
  auto c = chern_classes(rank, chclass);
  if (rank >= static_cast<std::int64_t>(c.size())) return chclass.ring()->zero();
  return c[static_cast<std::size_t>(rank)];
}

}  // namespace cy4gv::chow
