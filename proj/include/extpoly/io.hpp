#pragma once

// JSON encodings.
//
//   polynomial:  {"kind":"trig"|"analytic"|"power","box":[N1,N2,N3],
//                 "coeffs":[{"idx":[k,l,m],"re":r,"im":i},...]}   ("im" absent for power)
//   Phi table:   {"box":[N1,N2,N3],"values":[{"idx":[k,l,m],"re":r,"im":i},...]}
//                only one index of each pair {idx,-idx} is needed
//   measure:     {"atoms":[{"point":[a,b,c],"weight":w},...]}
//
// For power polynomials the box holds the exponent bounds themselves.

#include <nlohmann/json.hpp>

#include <cmath>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "calderon.hpp"
#include "extremal.hpp"
#include "functional.hpp"
#include "polynomial.hpp"
#include "sos.hpp"
#include "toeplitz.hpp"

namespace extpoly::io {

using json = nlohmann::json;

using Polynomial = std::variant<TrigPoly, AnalyticTrigPoly, PowerPoly>;

namespace detail {

inline const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

inline double number(const json& j, const char* what) {
  if (!j.is_number()) throw InputError(std::string(what) + " must be a number");
  return j.get<double>();
}

inline std::array<int, 3> int3(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 3) throw InputError(std::string(what) + " must be an array of 3 integers");
  std::array<int, 3> out{};
  for (int a = 0; a < 3; ++a) {
    if (!j[a].is_number_integer()) throw InputError(std::string(what) + " must be an array of 3 integers");
    out[a] = j[a].get<int>();
  }
  return out;
}

inline std::array<double, 3> real3(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 3) throw InputError(std::string(what) + " must be an array of 3 numbers");
  return {number(j[0], what), number(j[1], what), number(j[2], what)};
}

inline DegreeBox box_of(const json& j) {
  const auto b = int3(field(j, "box"), "box");
  return {b[0], b[1], b[2]};
}

inline json box_json(const DegreeBox& b) { return json::array({b.n1, b.n2, b.n3}); }
inline json idx_json(const MultiIndex& i) { return json::array({i.k, i.l, i.m}); }

inline MultiIndex idx_of(const json& entry) {
  const auto i = int3(field(entry, "idx"), "idx");
  return {i[0], i[1], i[2]};
}

inline cplx value_of(const json& entry) {
  const double re = number(field(entry, "re"), "re");
  const double im = entry.contains("im") ? number(entry.at("im"), "im") : 0.0;
  return {re, im};
}

inline json entry_json(const MultiIndex& i, cplx c) { return {{"idx", idx_json(i)}, {"re", c.real()}, {"im", c.imag()}}; }

template <class Map>
Map coeff_map(const json& j) {
  const auto& list = field(j, "coeffs");
  if (!list.is_array()) throw InputError("coeffs must be an array");
  Map out;
  for (const auto& e : list) {
    const auto idx = idx_of(e);
    if (out.count(idx)) throw InputError("duplicate coefficient index " + to_string(idx));
    if constexpr (std::is_same_v<typename Map::mapped_type, double>) {
      if (e.contains("im") && number(e.at("im"), "im") != 0.0)
        throw InputError("power polynomial coefficients must be real");
      out[idx] = number(field(e, "re"), "re");
    } else {
      out[idx] = value_of(e);
    }
  }
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// polynomials

inline json to_json(const TrigPoly& p) {
  json c = json::array();
  for (const auto& [i, v] : p.coeffs()) c.push_back(detail::entry_json(i, v));
  return {{"kind", "trig"}, {"box", detail::box_json(p.box())}, {"coeffs", c}};
}

inline json to_json(const AnalyticTrigPoly& p) {
  json c = json::array();
  for (const auto& [i, v] : p.coeffs()) c.push_back(detail::entry_json(i, v));
  return {{"kind", "analytic"}, {"box", detail::box_json(p.box())}, {"coeffs", c}};
}

inline json to_json(const PowerPoly& p) {
  json c = json::array();
  for (const auto& [i, v] : p.coeffs()) c.push_back({{"idx", detail::idx_json(i)}, {"re", v}});
  return {{"kind", "power"}, {"box", detail::box_json(p.box())}, {"coeffs", c}};
}

inline Polynomial polynomial_from_json(const json& j) {
  const auto& kind = detail::field(j, "kind");
  if (!kind.is_string()) throw InputError("kind must be a string");
  const auto k = kind.get<std::string>();
  const auto box = detail::box_of(j);
  if (k == "trig") return TrigPoly(box, detail::coeff_map<TrigPoly::Map>(j));
  if (k == "analytic") return AnalyticTrigPoly(box, detail::coeff_map<AnalyticTrigPoly::Map>(j));
  if (k == "power") return PowerPoly(box, detail::coeff_map<PowerPoly::Map>(j));
  throw InputError("unknown polynomial kind \"" + k + "\"");
}

template <class P>
P polynomial_as(const json& j) {
  auto v = polynomial_from_json(j);
  if (auto* p = std::get_if<P>(&v)) return std::move(*p);
  throw InputError("unexpected polynomial kind \"" + j.at("kind").get<std::string>() + "\"");
}

inline TrigPoly trig_from_json(const json& j) { return polynomial_as<TrigPoly>(j); }
inline AnalyticTrigPoly analytic_from_json(const json& j) { return polynomial_as<AnalyticTrigPoly>(j); }
inline PowerPoly power_from_json(const json& j) { return polynomial_as<PowerPoly>(j); }

// ---------------------------------------------------------------------------
// Phi tables and measures

inline json to_json(const PhiTable& phi) {
  json v = json::array();
  for (const auto& [i, c] : phi.values())
    if (i.is_origin() || i.positive_half()) v.push_back(detail::entry_json(i, c));
  return {{"box", detail::box_json(phi.box())}, {"values", v}};
}

inline PhiTable phi_from_json(const json& j) {
  PhiTable phi(detail::box_of(j));
  const auto& list = detail::field(j, "values");
  if (!list.is_array()) throw InputError("values must be an array");
  for (const auto& e : list) {
    const auto idx = detail::idx_of(e);
    const cplx v = detail::value_of(e);
    if (phi.has(idx)) {
      if (std::abs(phi(idx) - v) > 1e-12 * std::max(1.0, std::abs(v)))
        throw InputError("Phi table violates Hermitian symmetry at " + to_string(idx));
      continue;
    }
    phi.set(idx, v);
  }
  return phi;
}

inline json to_json(const AtomicMeasure& mu) {
  json a = json::array();
  for (const auto& atom : mu.atoms())
    a.push_back({{"point", {atom.point.alpha, atom.point.beta, atom.point.gamma}}, {"weight", atom.weight}});
  return {{"atoms", a}};
}

inline AtomicMeasure measure_from_json(const json& j) {
  const auto& list = detail::field(j, "atoms");
  if (!list.is_array()) throw InputError("atoms must be an array");
  AtomicMeasure mu;
  for (const auto& e : list) {
    const auto p = detail::real3(detail::field(e, "point"), "point");
    mu.add({p[0], p[1], p[2]}, detail::number(detail::field(e, "weight"), "weight"));
  }
  return mu;
}

// ---------------------------------------------------------------------------
// matrices and vectors

inline json to_json(const HermitianMatrix& m) {
  json re = json::array(), im = json::array();
  for (int r = 0; r < m.dim(); ++r) {
    json rr = json::array(), ii = json::array();
    for (int c = 0; c < m.dim(); ++c) {
      rr.push_back(m.entries(r, c).real());
      ii.push_back(m.entries(r, c).imag());
    }
    re.push_back(rr);
    im.push_back(ii);
  }
  return {{"dim", m.dim()}, {"re", re}, {"im", im}};
}

inline HermitianMatrix matrix_from_json(const json& j) {
  const auto& d = detail::field(j, "dim");
  if (!d.is_number_integer() || d.get<int>() < 0) throw InputError("dim must be a non-negative integer");
  const int n = d.get<int>();
  const auto& re = detail::field(j, "re");
  const auto& im = detail::field(j, "im");
  if (!re.is_array() || !im.is_array() || int(re.size()) != n || int(im.size()) != n)
    throw InputError("matrix rows do not match dim");
  CMatrix a(n, n);
  for (int r = 0; r < n; ++r) {
    if (!re[r].is_array() || !im[r].is_array() || int(re[r].size()) != n || int(im[r].size()) != n)
      throw InputError("matrix columns do not match dim");
    for (int c = 0; c < n; ++c) a(r, c) = {detail::number(re[r][c], "re"), detail::number(im[r][c], "im")};
  }
  return {std::move(a)};
}

// ---------------------------------------------------------------------------
// reports

inline json to_json(const FaceReport& r) {
  json g = json::array();
  for (const auto& p : r.generators) g.push_back(to_json(p));
  return {{"phi", to_json(r.phi)}, {"nu", r.nu}, {"generators", g}, {"classification", to_string(r.classification)}};
}

inline FaceClass face_class_from_string(const std::string& s) {
  if (s == "not-supporting") return FaceClass::not_supporting;
  if (s == "extremal-point") return FaceClass::extremal_point;
  if (s == "face") return FaceClass::face;
  throw InputError("unknown classification \"" + s + "\"");
}

inline FaceReport face_report_from_json(const json& j) {
  FaceReport r;
  r.phi = phi_from_json(detail::field(j, "phi"));
  r.nu = detail::field(j, "nu").get<int>();
  for (const auto& g : detail::field(j, "generators")) r.generators.push_back(trig_from_json(g));
  r.classification = face_class_from_string(detail::field(j, "classification").get<std::string>());
  return r;
}

inline json to_json(const std::vector<ZeroPoint>& zeros) {
  json z = json::array();
  for (const auto& p : zeros)
    z.push_back({{"point", {p.point.alpha, p.point.beta, p.point.gamma}}, {"residual", p.residual}});
  return z;
}

inline std::vector<ZeroPoint> zeros_from_json(const json& j) {
  // accept either the bare list or {"zeros":[...]}
  const json& list = j.is_object() ? detail::field(j, "zeros") : j;
  if (!list.is_array()) throw InputError("zeros must be an array");
  std::vector<ZeroPoint> out;
  for (const auto& e : list) {
    const auto p = detail::real3(detail::field(e, "point"), "point");
    const double res = e.contains("residual") ? detail::number(e.at("residual"), "residual") : 0.0;
    out.push_back({{p[0], p[1], p[2]}, res});
  }
  return out;
}

inline json to_json(const RankCertificate& c) {
  json out{{"zeros", to_json(c.zeros)},
           {"equations", c.equations},
           {"unknowns", c.unknowns},
           {"rank", c.rank},
           {"extremal", c.extremal}};
  out["null_space_angle"] = std::isnan(c.null_space_angle) ? json(nullptr) : json(c.null_space_angle);
  return out;
}

inline RankCertificate rank_certificate_from_json(const json& j) {
  RankCertificate c;
  c.zeros = zeros_from_json(detail::field(j, "zeros"));
  c.equations = detail::field(j, "equations").get<int>();
  c.unknowns = detail::field(j, "unknowns").get<int>();
  c.rank = detail::field(j, "rank").get<int>();
  c.extremal = detail::field(j, "extremal").get<bool>();
  if (j.contains("null_space_angle") && !j.at("null_space_angle").is_null())
    c.null_space_angle = j.at("null_space_angle").get<double>();
  return c;
}

inline json to_json(const QMembershipResult& r) {
  json out{{"status", to_string(r.status)}};
  if (r.gram) out["gram"] = to_json(*r.gram);
  if (r.factors) {
    json f = json::array();
    for (const auto& F : *r.factors) f.push_back(to_json(F));
    out["factors"] = f;
  }
  if (r.separator) out["separator"] = to_json(*r.separator);
  return out;
}

inline QMembershipResult q_membership_from_json(const json& j) {
  QMembershipResult r;
  const auto s = detail::field(j, "status").get<std::string>();
  if (s == "member")
    r.status = QStatus::member;
  else if (s == "non-member")
    r.status = QStatus::non_member;
  else if (s == "unknown")
    r.status = QStatus::unknown;
  else
    throw InputError("unknown status \"" + s + "\"");
  if (j.contains("gram")) r.gram = matrix_from_json(j.at("gram"));
  if (j.contains("factors")) {
    std::vector<AnalyticTrigPoly> fs;
    for (const auto& F : j.at("factors")) fs.push_back(analytic_from_json(F));
    r.factors = std::move(fs);
  }
  if (j.contains("separator")) r.separator = phi_from_json(j.at("separator"));
  return r;
}

inline json to_json(const CVector& v) {
  json out = json::array();
  for (Eigen::Index j = 0; j < v.size(); ++j) out.push_back(json::array({v[j].real(), v[j].imag()}));
  return out;
}

}  // namespace extpoly::io
