#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cy4gv/curve_class.hpp"
#include "cy4gv/rational.hpp"

namespace cy4gv {

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

/// Element of H^4 written over the geometry's S-basis.
using H4Class = RationalVector;

/// Fixture-supplied data for the elliptic fibration tau_1 pairing.
///
/// The pushforward of ch_4 . alpha to the moduli space is
/// sum_i alpha_i (constant[i] + r^2 r_squared[i]) over the divisor basis,
/// and the virtual class is virtual_sign . PD(c_3), paired via c3_pairing.
struct EllipticTau1Data {
  RationalMatrix constant;
  RationalMatrix r_squared;
  RationalVector c3_pairing;
  int virtual_sign = 1;

  friend bool operator==(const EllipticTau1Data&, const EllipticTau1Data&) = default;
};

/// One Calabi-Yau 4-fold example: bases, pairings, c_2 and GV input tables.
struct GeometryData {
  std::string name;
  std::string provenance;
  std::int64_t curve_rank = 0;
  std::vector<std::int64_t> ample;
  std::vector<std::string> divisor_basis;
  /// curve_pairing[i][j] = A_i . (j-th lattice generator)
  std::vector<std::vector<std::int64_t>> curve_pairing;
  std::vector<std::string> h4_basis;
  RationalMatrix kunneth_inverse;
  /// Keyed by (i, j) with i <= j; A_i . A_j over the S-basis.
  std::map<std::pair<std::size_t, std::size_t>, H4Class> divisor_product;
  H4Class c2;
  /// n_{0,beta}(S_a) for every a.
  std::map<CurveClass, RationalVector> gv0;
  std::map<CurveClass, Rational> gv1;
  std::int64_t degree_bound = 0;
  /// Degree up to which gv1 is populated; defaults to degree_bound.
  std::int64_t genus1_degree_bound = 0;
  /// c_1(Y) . (lattice generator) for the auxiliary threefold Y whose
  /// moduli space carries the preferred orientation.
  std::optional<std::vector<std::int64_t>> orientation_c1;
  std::optional<EllipticTau1Data> elliptic_tau1;

  [[nodiscard]] std::size_t divisor_rank() const { return divisor_basis.size(); }
  [[nodiscard]] std::size_t h4_rank() const { return h4_basis.size(); }

  friend bool operator==(const GeometryData&, const GeometryData&) = default;
};

/// Reads and validates a JSON fixture. Throws FixtureError with the JSON
/// location on malformed input, "invalid pairing" on an asymmetric
/// g^{ab} and "incomplete GV table" on a missing entry.
GeometryData load_geometry(const std::filesystem::path& path);
GeometryData parse_geometry(const std::string& json_text);
/// Inverse of parse_geometry; pretty-printed with two-space indent.
std::string serialize_geometry(const GeometryData& geom);

/// Runs the consistency checks parse_geometry applies; usable on data built
/// in code.
void validate_geometry(const GeometryData& geom);

/// sum_a gamma_a n_{0,beta}(S_a). Throws DomainError("outside table")
/// beyond degree_bound and "not effective" on a non-effective beta.
Rational n0(const GeometryData& geom, const CurveClass& beta, const H4Class& gamma);
/// n_{0,beta}(S_a) as a vector; same errors as n0.
const RationalVector& n0_vector(const GeometryData& geom, const CurveClass& beta);
/// n_{1,beta}; throws DomainError("outside table") beyond genus1_degree_bound.
Rational n1(const GeometryData& geom, const CurveClass& beta);

/// alpha^2 over the S-basis for alpha in divisor coordinates.
H4Class divisor_square(const GeometryData& geom, const RationalVector& alpha);
/// alpha . beta via curve_pairing.
Rational pairing(const GeometryData& geom, const RationalVector& alpha, const CurveClass& beta);
/// x^T g^{-1} y over the S-basis.
Rational kunneth_pairing(const GeometryData& geom, const RationalVector& x, const RationalVector& y);
/// Degree of beta under the geometry's ample vector.
std::int64_t degree(const GeometryData& geom, const CurveClass& beta);

}  // namespace cy4gv
