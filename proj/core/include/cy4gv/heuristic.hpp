#pragma once

#include <cstdint>
#include <vector>

#include "cy4gv/curve_class.hpp"
#include "cy4gv/geometry.hpp"
#include "cy4gv/meeting.hpp"
#include "cy4gv/rational.hpp"

namespace cy4gv {

/// Intersection data on the surface D_beta swept by a one-parameter family
/// of rational curves, modelled as a P1-bundle blown up in k points.
struct BlowupFamilyData {
  /// psi^2 for psi = c_1 of the relative cotangent bundle.
  Rational psi_sq;
  /// alpha . beta (beta the fiber class); must be nonzero.
  Rational alpha_beta;
  /// alpha . beta_1^{(i)} for each exceptional curve.
  std::vector<Rational> alpha_beta1;
  /// (alpha restricted to D_beta)^2.
  Rational alpha_sq;
};

/// -1/2 psi . alpha|_{D_beta} by solving the three linear relations for
/// the coordinates (a, b, d_i) of alpha|_{D_beta}.
Rational blowup_descendent(const BlowupFamilyData& data);

/// The same number from the eliminated closed form
/// alpha|^2/(2 alpha.beta) + (alpha.beta) psi^2/8 + sum (alpha.b1 - alpha.b2)^2/(8 alpha.beta).
Rational blowup_descendent_closed_form(const BlowupFamilyData& data);

/// Rational-curve contribution assembled from the closed form with
/// psi^2 = -1/2 sum m_{b1,b2}, alpha|^2 replaced by n_{0,beta}(alpha^2) and
/// each degeneration weighted by m_{b1,b2}/2.
Rational assemble_rational_contribution(const GeometryData& geom, const MeetingTable& meeting, const CurveClass& beta,
                                        const RationalVector& alpha);

/// int_{M_E(r,1)} tau_1(alpha) = (alpha . beta) / r.
Rational elliptic_multiple_contribution(std::int64_t r, const Rational& alpha_beta);

/// sum_{r|beta} (alpha.beta / r) n_{1,beta/r}, the super-rigid elliptic
/// curves' total before the orientation sign.
Rational elliptic_contribution(const GeometryData& geom, const CurveClass& beta, const RationalVector& alpha);

/// Sign applied to elliptic contributions. Chosen to match the examples;
/// the ideal geometry argument does not fix it.
inline constexpr int kEllipticOrientationSign = -1;

}  // namespace cy4gv
