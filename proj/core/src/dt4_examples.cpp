#include "cy4gv/dt4_examples.hpp"

#include "cy4gv/error.hpp"

namespace cy4gv {

using chow::KClass;
using chow::Ring;
using chow::RingClass;
using chow::RingPtr;

int orientation_sign(std::int64_t c1_dot_beta) { return ((c1_dot_beta - 1) % 2 == 0) ? 1 : -1; }

RingClass Dt4Model::ambient_character() const {
  RingClass out = chow::ch(ring, universal);
  for (const auto& x : normal_lines) out = out * chow::td_inverse(x);
  return out;
}

RingClass Dt4Model::descendent_class(int k, const RingClass& insertion) const {
  if (k < 0) throw DomainError("descendent index must be non-negative");
  const int d = k + 3 - codimension();
  if (d < 0) return ring->zero();
  return chow::fiber_pushforward(ambient_character().degree_part(d) * insertion, space_factors);
}

Rational Dt4Model::integrate_virtual(const RingClass& x) const {
  return chow::integrate(virtual_class * x * moduli_class * space_top);
}

namespace {

RingClass combine(const std::vector<RingClass>& basis, const RationalVector& coords, const RingPtr& ring,
                  const char* what) {
  if (coords.size() != basis.size()) throw DomainError(std::string(what) + " has wrong length");
  RingClass out = ring->zero();
  for (std::size_t i = 0; i < coords.size(); ++i) out += basis[i] * coords[i];
  return out;
}

Dt4Result finish(const Dt4Model& m, int k, RationalVector insertion, const RingClass& cls) {
  Dt4Result r;
  r.geometry = m.geometry;
  r.beta = m.beta;
  r.descendent = k;
  r.insertion = std::move(insertion);
  r.unsigned_value = m.integrate_virtual(cls);
  r.orientation_sign = m.sign;
  r.value = r.unsigned_value * Rational(m.sign);
  return r;
}

// Euler class of R pi_* (-E^vee (x) E (x) twist), pushed along the space.
RingClass obstruction_euler(const RingPtr& ring, const KClass& e, const KClass& twist,
                            const std::vector<std::size_t>& space) {
  const auto chv = chow::grr_pushforward(chow::ch(ring, -(e.dual() * e * twist)), space);
  const auto rank = chv.constant_term();
  if (!rank.is_integer() || rank.sign() < 0) throw InternalError("obstruction class has rank " + rank.str());
  return chow::euler_class(rank.numerator().get_si(), chv);
}

}  // namespace

Dt4Result Dt4Model::tau1(const RationalVector& alpha) const {
  return finish(*this, 1, alpha, descendent_class(1, combine(divisor_restrictions, alpha, ring, "divisor class")));
}

Dt4Result Dt4Model::tau0(const RationalVector& gamma) const {
  return finish(*this, 0, gamma, descendent_class(0, combine(h4_restrictions, gamma, ring, "H4 class")));
}

Dt4Result Dt4Model::tau2() const { return finish(*this, 2, {}, descendent_class(2, ring->one())); }

Dt4Model local_p2_model(int d) {
  Dt4Model m;
  m.geometry = "local_p2";
  m.beta = CurveClass{d};
  KClass twist;
  if (d == 1 || d == 2) {
    // Moduli = |O(d)| = P^{d(d+3)/2}, universal sheaf O_C.
    m.ring = Ring::product({d * (d + 3) / 2, 2}, {"H1", "H3"});
    m.space_factors = {1};
    m.universal = KClass::trivial(2) - KClass::line({-1, -d});
    twist = KClass::line({0, -1});
    m.moduli_class = m.ring->one();
  } else if (d == 3) {
    // Moduli = universal cubic C in P9 x P2, from Beilinson's resolution.
    m.ring = Ring::product({9, 2, 2}, {"H1", "H2", "H3"});
    m.space_factors = {2};
    m.universal = KClass::line({-1, 1, -3}, -3) + KClass::trivial(3) + KClass::line({-1, 1, -4}) +
                  KClass::line({-1, 2, -2});
    twist = KClass::line({0, 0, -1});
    m.moduli_class = m.ring->linear(std::vector<std::int64_t>{1, 3, 0});
  } else {
    throw DomainError("local_p2 pipeline covers d = 1, 2, 3");
  }
  const auto s = m.space_factors.front();
  const auto h = m.ring->generator(s);
  m.space_top = h.pow(2);
  m.virtual_class = obstruction_euler(m.ring, m.universal, twist, m.space_factors);
  m.normal_lines = {-h, h * Rational(-2)};
  m.divisor_restrictions = {h};
  // T1 = zero section (self-intersection c_2(N) = 2 pt), T2 = fiber over a point.
  m.h4_restrictions = {m.space_top * Rational(2), m.space_top};
  m.sign = orientation_sign(2 * d);
  return m;
}

Dt4Model local_p1p1_model() {
  Dt4Model m;
  m.geometry = "local_p1p1";
  m.beta = CurveClass{2, 2};
  m.ring = Ring::product({8, 1, 1, 1, 1}, {"H1", "H2", "H3", "H4", "H5"});
  m.space_factors = {3, 4};
  m.universal = KClass::trivial(5) - KClass::line({-1, 1, 0, -1, -2}) - KClass::line({-1, 0, 1, -2, -1}) +
                KClass::line({-1, 1, 1, -1, -1});
  m.moduli_class = m.ring->linear(std::vector<std::int64_t>{1, 2, 2, 0, 0});
  const auto h4 = m.ring->generator(3);
  const auto h5 = m.ring->generator(4);
  m.space_top = h4 * h5;
  m.virtual_class =
      obstruction_euler(m.ring, m.universal, KClass::line({0, 0, 0, -1, -1}), m.space_factors);
  m.normal_lines = {-(h4 + h5), -(h4 + h5)};
  m.divisor_restrictions = {h4, h5};
  m.h4_restrictions = {m.space_top * Rational(2), m.space_top};
  m.sign = orientation_sign(4);
  return m;
}

LocalP3Construction local_p3_construction() {
  LocalP3Construction c;
  // E = f_* O_H(2) on P3*, H the universal hyperplane of bidegree (1,1).
  c.incidence_ring = Ring::product({3, 3}, {"x", "y"});
  const auto ch_oh2 = chow::ch(c.incidence_ring, KClass::line({2, 0}) - KClass::line({1, -1}));
  c.bundle_character = chow::grr_pushforward(ch_oh2, {0});
  const auto rank = c.bundle_character.constant_term();
  if (rank != Rational(6)) throw InternalError("f_* O_H(2) has rank " + rank.str());
  c.bundle_chern = chow::chern_classes(6, c.bundle_character);

  std::vector<std::map<chow::Monomial, Rational>> chern;
  {
    // Move c_i from (x, y) to the base generators (H, h2) of the bundle ring.
    auto probe = Ring::product({3, 3, 8});
    for (int i = 1; i <= 6; ++i) {
      std::map<chow::Monomial, Rational> ci;
      for (const auto& [mono, coeff] : c.bundle_chern[static_cast<std::size_t>(i)].terms()) {
        const auto e = c.incidence_ring->unpack(mono);
        if (e[0] != 0) throw InternalError("bundle Chern class depends on the pushed-forward factor");
        ci.emplace(probe->pack({0, e[1], 0}), coeff);
      }
      chern.push_back(std::move(ci));
    }
  }
  c.ring = Ring::projective_bundle({3, 3}, 6, chern, {"H", "h2", "h1"});
  c.lift = c.ring->without_bundle_relation();

  const KClass f = KClass::trivial(3) - KClass::line({-1, -1, 0}) - KClass::line({-2, 0, -1}) +
                   KClass::line({-3, -1, -1});
  c.rhom = chow::grr_pushforward(chow::ch(c.lift, f.dual() * f), {0});
  c.tangent = chow::ch(c.lift, KClass::line({0, 0, 1}, 10) - KClass::line({0, -1, 1}, 4) - KClass::trivial(3, 2) +
                                   KClass::line({0, 1, 0}, 4));
  c.obstruction = c.tangent + c.rhom - c.lift->one();
  const auto ob_rank = c.obstruction.constant_term();
  if (ob_rank != Rational(7)) throw InternalError("obstruction theory has rank " + ob_rank.str());
  c.virtual_lift = chow::euler_class(7, c.obstruction);

  Dt4Model& m = c.model;
  m.geometry = "local_p3";
  m.beta = CurveClass{2};
  m.ring = c.ring;
  m.space_factors = {0};
  m.universal = f;
  m.moduli_class = m.ring->one();
  const auto h = m.ring->generator(0);
  m.space_top = h.pow(3);
  m.virtual_class = chow::transport(c.virtual_lift, c.ring);
  m.normal_lines = {h * Rational(-4)};
  m.divisor_restrictions = {h};
  // T1 = P2 in the zero section: i^* i_* [P2] = H . c_1(N) = -4 H^2.
  m.h4_restrictions = {h.pow(2) * Rational(-4), h.pow(2)};
  m.sign = orientation_sign(8);
  return c;
}

Dt4Model local_p3_model() { return local_p3_construction().model; }

Dt4Result elliptic_tau1(const GeometryData& geom, std::int64_t r, const RationalVector& alpha) {
  if (!geom.elliptic_tau1) throw DomainError("geometry " + geom.name + " has no elliptic_tau1 data");
  if (r < 1) throw DomainError("elliptic pipeline needs r >= 1");
  if (alpha.size() != geom.divisor_rank()) throw DomainError("divisor class has wrong length");
  const auto& e = *geom.elliptic_tau1;
  const Rational r2(r * r);
  Dt4Result out;
  out.geometry = geom.name;
  out.beta = CurveClass{r};
  out.descendent = 1;
  out.insertion = alpha;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    for (std::size_t j = 0; j < alpha.size(); ++j) {
      out.unsigned_value += alpha[i] * (e.constant[i][j] + r2 * e.r_squared[i][j]) * e.c3_pairing[j];
    }
  }
  out.orientation_sign = e.virtual_sign;
  out.value = out.unsigned_value * Rational(e.virtual_sign);
  return out;
}

Rational product_cy3xE_tau1_fiber(const Rational& chi_y, const Rational& alpha_dot_e, std::int64_t r) {
  if (r < 1) throw DomainError("product pipeline needs r >= 1");
  // M_1(X, r[E]) is empty for r > 1.
  return r == 1 ? -chi_y * alpha_dot_e : Rational(0);
}

Rational product_cy3xE_tau1_base(const Rational& alpha2_on_e, const Rational& deg_vir) { return alpha2_on_e * deg_vir; }

}  // namespace cy4gv
