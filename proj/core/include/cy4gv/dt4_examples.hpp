#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cy4gv/chow/characteristic.hpp"
#include "cy4gv/chow/k_class.hpp"
#include "cy4gv/chow/ring.hpp"
#include "cy4gv/curve_class.hpp"
#include "cy4gv/geometry.hpp"
#include "cy4gv/rational.hpp"

namespace cy4gv {

/// One evaluated descendent invariant <tau_k(insertion)>_beta.
struct Dt4Result {
  std::string geometry;
  CurveClass beta;
  int descendent = 1;
  /// Insertion coordinates: divisor basis for tau_1, S-basis for tau_0,
  /// empty for tau_2(1).
  RationalVector insertion;
  Rational unsigned_value;
  int orientation_sign = 1;
  Rational value;
};

/// (-1)^{c_1(Y).beta - 1}
int orientation_sign(std::int64_t c1_dot_beta);

/// Moduli space of one-dimensional sheaves on a local geometry, realised
/// inside the ring of (moduli ambient) x (zero section S).
///
/// Integrals over the moduli space are computed as ambient integrals of
/// vir . x . moduli_class . space_top, where space_top is the point class
/// of S.
struct Dt4Model {
  std::string geometry;
  CurveClass beta;
  chow::RingPtr ring;
  std::vector<std::size_t> space_factors;
  chow::KClass universal;
  chow::RingClass moduli_class;
  chow::RingClass space_top;
  chow::RingClass virtual_class;
  /// First Chern classes of the line bundles splitting N_{S/X}.
  std::vector<chow::RingClass> normal_lines;
  /// Restrictions to S of the geometry's divisor basis and S-basis.
  std::vector<chow::RingClass> divisor_restrictions;
  std::vector<chow::RingClass> h4_restrictions;
  int sign = 1;

  [[nodiscard]] int codimension() const { return static_cast<int>(normal_lines.size()); }
  /// ch(E) . td(N)^{-1}, whose degree (m - codim) part is ch_m of the
  /// pushed-forward universal sheaf on X.
  [[nodiscard]] chow::RingClass ambient_character() const;
  /// pi_*(ch_{k+3} . insertion) on the moduli space.
  [[nodiscard]] chow::RingClass descendent_class(int k, const chow::RingClass& insertion) const;
  /// Unsigned integral of a moduli class against the virtual class.
  [[nodiscard]] Rational integrate_virtual(const chow::RingClass& x) const;

  [[nodiscard]] Dt4Result tau1(const RationalVector& alpha) const;
  [[nodiscard]] Dt4Result tau0(const RationalVector& gamma) const;
  [[nodiscard]] Dt4Result tau2() const;
};

/// Tot(O(-1) + O(-2)) over P2, beta = d [line], d in {1, 2, 3}.
Dt4Model local_p2_model(int d);

/// Tot(O(-1,-1) + O(-1,-1)) over P1xP1, beta = (2,2).
Dt4Model local_p1p1_model();

/// Intermediate objects of the K_{P3}, d = 2 computation, kept for audit.
struct LocalP3Construction {
  /// Ring of P3 x P3* carrying the universal hyperplane.
  chow::RingPtr incidence_ring;
  /// ch(f_* O_H(2)) on P3*, computed by GRR.
  chow::RingClass bundle_character;
  /// c_0..c_6 of that bundle.
  std::vector<chow::RingClass> bundle_chern;
  /// P3 x P(E), generators (H, h2, h1) with h1 tautological.
  chow::RingPtr ring;
  /// Same generators with the bundle relation dropped.
  chow::RingPtr lift;
  /// ch(R pi_* RHom(F, F)), ch(T_M) and ch(Ob) in the lift ring.
  chow::RingClass rhom;
  chow::RingClass tangent;
  chow::RingClass obstruction;
  /// c_7(Ob) in the lift ring.
  chow::RingClass virtual_lift;
  Dt4Model model;
};

LocalP3Construction local_p3_construction();
/// K_{P3}, beta = 2 [line].
Dt4Model local_p3_model();

/// <tau_1(alpha)>_{r f} on the elliptic fibration, from the fixture's
/// ch_4 pushforward and c_3 pairings. Requires the elliptic_tau1 block.
Dt4Result elliptic_tau1(const GeometryData& geom, std::int64_t r, const RationalVector& alpha);

/// Y x E with beta = r[E]: -chi(Y) (alpha.[E]) for r = 1, 0 for r > 1.
Rational product_cy3xE_tau1_fiber(const Rational& chi_y, const Rational& alpha_dot_e, std::int64_t r);
/// Y x E with beta in H_2(Y): (int_E alpha_2) . deg [M_1(Y,beta)]^vir.
Rational product_cy3xE_tau1_base(const Rational& alpha2_on_e, const Rational& deg_vir);

}  // namespace cy4gv
