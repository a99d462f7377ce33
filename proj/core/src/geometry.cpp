#include "cy4gv/geometry.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cy4gv/error.hpp"

namespace cy4gv {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw FixtureError("fixture error at " + where + ": " + what);
}

const json& field(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.is_object()) fail(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(where + "/" + key, "missing field");
  return *it;
}

std::int64_t read_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<std::int64_t>();
}

std::string read_string(const json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get<std::string>();
}

Rational read_rational(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (!j.is_string()) fail(where, "expected a rational string \"p/q\"");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const DomainError& e) {
    fail(where, e.what());
  }
}

const json& read_array(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  return j;
}

std::vector<std::int64_t> read_int_vector(const json& j, const std::string& where) {
  std::vector<std::int64_t> out;
  const auto& arr = read_array(j, where);
  for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(read_int(arr[i], where + "/" + std::to_string(i)));
  return out;
}

RationalVector read_rational_vector(const json& j, const std::string& where) {
  RationalVector out;
  const auto& arr = read_array(j, where);
  for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(read_rational(arr[i], where + "/" + std::to_string(i)));
  return out;
}

RationalMatrix read_rational_matrix(const json& j, const std::string& where) {
  RationalMatrix out;
  const auto& arr = read_array(j, where);
  for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(read_rational_vector(arr[i], where + "/" + std::to_string(i)));
  return out;
}

std::vector<std::string> read_string_vector(const json& j, const std::string& where) {
  std::vector<std::string> out;
  const auto& arr = read_array(j, where);
  for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(read_string(arr[i], where + "/" + std::to_string(i)));
  return out;
}

json write_vector(const RationalVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

json write_matrix(const RationalMatrix& m) {
  json out = json::array();
  for (const auto& row : m) out.push_back(write_vector(row));
  return out;
}

void check_matrix_shape(const RationalMatrix& m, std::size_t rows, std::size_t cols, const std::string& what) {
  if (m.size() != rows) throw FixtureError(what + ": expected " + std::to_string(rows) + " rows");
  for (const auto& row : m) {
    if (row.size() != cols) throw FixtureError(what + ": expected " + std::to_string(cols) + " columns");
  }
}

}  // namespace

void validate_geometry(const GeometryData& geom) {
  const auto r = static_cast<std::size_t>(geom.curve_rank);
  const auto p = geom.divisor_rank();
  const auto m = geom.h4_rank();
  if (geom.curve_rank < 1) throw FixtureError("curve_rank must be positive");
  if (geom.ample.size() != r) throw FixtureError("ample vector has wrong length");
  for (auto a : geom.ample) {
    if (a <= 0) throw FixtureError("ample vector must be positive");
  }
  if (p == 0) throw FixtureError("empty divisor basis");
  if (geom.curve_pairing.size() != p) throw FixtureError("curve_pairing: expected one row per divisor");
  for (const auto& row : geom.curve_pairing) {
    if (row.size() != r) throw FixtureError("curve_pairing: expected one column per lattice generator");
  }
  if (m == 0) throw FixtureError("empty h4 basis");
  check_matrix_shape(geom.kunneth_inverse, m, m, "kunneth_inverse");
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      if (geom.kunneth_inverse[a][b] != geom.kunneth_inverse[b][a]) throw FixtureError("invalid pairing: kunneth_inverse not symmetric");
    }
  }
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = i; j < p; ++j) {
      auto it = geom.divisor_product.find({i, j});
      if (it == geom.divisor_product.end()) {
        throw FixtureError("divisor_product missing entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
      if (it->second.size() != m) throw FixtureError("divisor_product entry has wrong length");
    }
  }
  for (const auto& [key, v] : geom.divisor_product) {
    if (key.first > key.second || key.second >= p) throw FixtureError("divisor_product key out of range");
  }
  if (geom.c2.size() != m) throw FixtureError("c2 has wrong length");
  if (geom.degree_bound < 1) throw FixtureError("degree_bound must be positive");
  if (geom.genus1_degree_bound < 0 || geom.genus1_degree_bound > geom.degree_bound) {
    throw FixtureError("genus1_degree_bound must lie in [0, degree_bound]");
  }

  for (const auto& [beta, values] : geom.gv0) {
    if (beta.rank() != r || !beta.is_effective()) throw FixtureError("gv0 key " + beta.str() + " is not an effective class");
    if (beta.degree(geom.ample) > geom.degree_bound) throw FixtureError("gv0 key " + beta.str() + " exceeds degree_bound");
    if (values.size() != m) throw FixtureError("gv0 entry " + beta.str() + " has wrong length");
  }
  for (const auto& [beta, value] : geom.gv1) {
    if (beta.rank() != r || !beta.is_effective()) throw FixtureError("gv1 key " + beta.str() + " is not an effective class");
    if (beta.degree(geom.ample) > geom.genus1_degree_bound) throw FixtureError("gv1 key " + beta.str() + " exceeds genus1_degree_bound");
  }
  for (const auto& beta : effective_classes(geom.ample, geom.degree_bound)) {
    if (!geom.gv0.count(beta)) throw FixtureError("incomplete GV table: gv0 missing " + beta.str());
    if (beta.degree(geom.ample) <= geom.genus1_degree_bound && !geom.gv1.count(beta)) {
      throw FixtureError("incomplete GV table: gv1 missing " + beta.str());
    }
  }
  if (geom.orientation_c1 && geom.orientation_c1->size() != r) throw FixtureError("orientation_c1 has wrong length");
  if (geom.elliptic_tau1) {
    const auto& e = *geom.elliptic_tau1;
    check_matrix_shape(e.constant, p, p, "elliptic_tau1.constant");
    check_matrix_shape(e.r_squared, p, p, "elliptic_tau1.r_squared");
    if (e.c3_pairing.size() != p) throw FixtureError("elliptic_tau1.c3_pairing has wrong length");
    if (e.virtual_sign != 1 && e.virtual_sign != -1) throw FixtureError("elliptic_tau1.virtual_sign must be +1 or -1");
  }
}

GeometryData parse_geometry(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw FixtureError(std::string("fixture is not valid JSON: ") + e.what());
  }
  const std::string top;
  GeometryData g;
  g.name = read_string(field(root, "name", top), "/name");
  if (root.contains("provenance")) g.provenance = read_string(root["provenance"], "/provenance");
  g.curve_rank = read_int(field(root, "curve_rank", top), "/curve_rank");
  g.ample = read_int_vector(field(root, "ample", top), "/ample");
  g.divisor_basis = read_string_vector(field(root, "divisor_basis", top), "/divisor_basis");
  {
    const auto& rows = read_array(field(root, "curve_pairing", top), "/curve_pairing");
    for (std::size_t i = 0; i < rows.size(); ++i) {
      g.curve_pairing.push_back(read_int_vector(rows[i], "/curve_pairing/" + std::to_string(i)));
    }
  }
  g.h4_basis = read_string_vector(field(root, "h4_basis", top), "/h4_basis");
  g.kunneth_inverse = read_rational_matrix(field(root, "kunneth_inverse", top), "/kunneth_inverse");
  {
    const auto& entries = read_array(field(root, "divisor_product", top), "/divisor_product");
    for (std::size_t k = 0; k < entries.size(); ++k) {
      const std::string where = "/divisor_product/" + std::to_string(k);
      auto i = read_int(field(entries[k], "i", where), where + "/i");
      auto j = read_int(field(entries[k], "j", where), where + "/j");
      if (i < 0 || j < 0) fail(where, "negative index");
      if (i > j) std::swap(i, j);
      g.divisor_product[{static_cast<std::size_t>(i), static_cast<std::size_t>(j)}] =
          read_rational_vector(field(entries[k], "value", where), where + "/value");
    }
  }
  g.c2 = read_rational_vector(field(root, "c2", top), "/c2");
  g.degree_bound = read_int(field(root, "degree_bound", top), "/degree_bound");
  g.genus1_degree_bound = root.contains("genus1_degree_bound")
                              ? read_int(root["genus1_degree_bound"], "/genus1_degree_bound")
                              : g.degree_bound;
  {
    const auto& entries = read_array(field(root, "gv0", top), "/gv0");
    for (std::size_t k = 0; k < entries.size(); ++k) {
      const std::string where = "/gv0/" + std::to_string(k);
      CurveClass beta(read_int_vector(field(entries[k], "beta", where), where + "/beta"));
      if (g.gv0.count(beta)) fail(where, "duplicate class " + beta.str());
      g.gv0[beta] = read_rational_vector(field(entries[k], "values", where), where + "/values");
    }
  }
  {
    const auto& entries = read_array(field(root, "gv1", top), "/gv1");
    for (std::size_t k = 0; k < entries.size(); ++k) {
      const std::string where = "/gv1/" + std::to_string(k);
      CurveClass beta(read_int_vector(field(entries[k], "beta", where), where + "/beta"));
      if (g.gv1.count(beta)) fail(where, "duplicate class " + beta.str());
      g.gv1[beta] = read_rational(field(entries[k], "value", where), where + "/value");
    }
  }
  if (root.contains("orientation_c1")) g.orientation_c1 = read_int_vector(root["orientation_c1"], "/orientation_c1");
  if (root.contains("elliptic_tau1")) {
    const auto& e = root["elliptic_tau1"];
    const std::string where = "/elliptic_tau1";
    EllipticTau1Data d;
    d.constant = read_rational_matrix(field(e, "constant", where), where + "/constant");
    d.r_squared = read_rational_matrix(field(e, "r_squared", where), where + "/r_squared");
    d.c3_pairing = read_rational_vector(field(e, "c3_pairing", where), where + "/c3_pairing");
    d.virtual_sign = static_cast<int>(read_int(field(e, "virtual_sign", where), where + "/virtual_sign"));
    g.elliptic_tau1 = std::move(d);
  }
  validate_geometry(g);
  return g;
}

GeometryData load_geometry(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FixtureError("cannot open fixture " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_geometry(buf.str());
  } catch (const FixtureError& e) {
    throw FixtureError(path.string() + ": " + e.what());
  }
}

std::string serialize_geometry(const GeometryData& g) {
  json root;
  root["name"] = g.name;
  if (!g.provenance.empty()) root["provenance"] = g.provenance;
  root["curve_rank"] = g.curve_rank;
  root["ample"] = g.ample;
  root["divisor_basis"] = g.divisor_basis;
  root["curve_pairing"] = g.curve_pairing;
  root["h4_basis"] = g.h4_basis;
  root["kunneth_inverse"] = write_matrix(g.kunneth_inverse);
  json dp = json::array();
  for (const auto& [key, v] : g.divisor_product) dp.push_back({{"i", key.first}, {"j", key.second}, {"value", write_vector(v)}});
  root["divisor_product"] = dp;
  root["c2"] = write_vector(g.c2);
  root["degree_bound"] = g.degree_bound;
  root["genus1_degree_bound"] = g.genus1_degree_bound;
  json gv0 = json::array();
  for (const auto& [beta, v] : g.gv0) gv0.push_back({{"beta", beta.coords()}, {"values", write_vector(v)}});
  root["gv0"] = gv0;
  json gv1 = json::array();
  for (const auto& [beta, v] : g.gv1) gv1.push_back({{"beta", beta.coords()}, {"value", v.str()}});
  root["gv1"] = gv1;
  if (g.orientation_c1) root["orientation_c1"] = *g.orientation_c1;
  if (g.elliptic_tau1) {
    const auto& e = *g.elliptic_tau1;
    root["elliptic_tau1"] = {{"constant", write_matrix(e.constant)},
                             {"r_squared", write_matrix(e.r_squared)},
                             {"c3_pairing", write_vector(e.c3_pairing)},
                             {"virtual_sign", e.virtual_sign}};
  }
  return root.dump(2);
}

std::int64_t degree(const GeometryData& geom, const CurveClass& beta) { return beta.degree(geom.ample); }

const RationalVector& n0_vector(const GeometryData& geom, const CurveClass& beta) {
  if (!beta.is_effective()) throw DomainError("not effective: " + beta.str());
  auto it = geom.gv0.find(beta);
  if (it == geom.gv0.end()) throw DomainError("outside table: n0 at " + beta.str() + " in " + geom.name);
  return it->second;
}

Rational n0(const GeometryData& geom, const CurveClass& beta, const H4Class& gamma) {
  const auto& v = n0_vector(geom, beta);
  if (gamma.size() != v.size()) throw DomainError("H4 class has wrong length");
  Rational out;
  for (std::size_t a = 0; a < v.size(); ++a) out += gamma[a] * v[a];
  return out;
}

Rational n1(const GeometryData& geom, const CurveClass& beta) {
  if (!beta.is_effective()) throw DomainError("not effective: " + beta.str());
  auto it = geom.gv1.find(beta);
  if (it == geom.gv1.end()) throw DomainError("outside table: n1 at " + beta.str() + " in " + geom.name);
  return it->second;
}

H4Class divisor_square(const GeometryData& geom, const RationalVector& alpha) {
  const auto p = geom.divisor_rank();
  if (alpha.size() != p) throw DomainError("divisor class has wrong length");
  H4Class out(geom.h4_rank());
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = i; j < p; ++j) {
      // Off-diagonal products appear twice in the expansion.
      const Rational w = alpha[i] * alpha[j] * Rational(i == j ? 1 : 2);
      if (w.is_zero()) continue;
      const auto& prod = geom.divisor_product.at({i, j});
      for (std::size_t a = 0; a < out.size(); ++a) out[a] += w * prod[a];
    }
  }
  return out;
}

Rational pairing(const GeometryData& geom, const RationalVector& alpha, const CurveClass& beta) {
  if (alpha.size() != geom.divisor_rank()) throw DomainError("divisor class has wrong length");
  if (beta.rank() != static_cast<std::size_t>(geom.curve_rank)) throw DomainError("curve class has wrong rank");
  Rational out;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < beta.rank(); ++j) s += geom.curve_pairing[i][j] * beta[j];
    out += alpha[i] * Rational(s);
  }
  return out;
}

Rational kunneth_pairing(const GeometryData& geom, const RationalVector& x, const RationalVector& y) {
  const auto m = geom.h4_rank();
  if (x.size() != m || y.size() != m) throw DomainError("H4 vector has wrong length");
  Rational out;
  for (std::size_t a = 0; a < m; ++a) {
    if (x[a].is_zero()) continue;
    for (std::size_t b = 0; b < m; ++b) out += x[a] * geom.kunneth_inverse[a][b] * y[b];
  }
  return out;
}

}  // namespace cy4gv
