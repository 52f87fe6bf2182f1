#pragma once

// End-to-end runs of the three worked examples. Each produces key/value
// lines plus one PASS/FAIL line per check.

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "calderon.hpp"
#include "extremal.hpp"
#include "fixtures.hpp"
#include "functional.hpp"
#include "sos.hpp"
#include "toeplitz.hpp"

namespace extpoly::reproduce {

struct Report {
  std::string name;
  std::vector<std::pair<std::string, std::string>> values;
  std::vector<std::pair<std::string, bool>> checks;

  template <class T>
  void value(const std::string& key, const T& v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    values.emplace_back(key, os.str());
  }
  void check(const std::string& what, bool ok) { checks.emplace_back(what, ok); }
  bool passed() const {
    for (const auto& [w, ok] : checks)
      if (!ok) return false;
    return true;
  }
  std::string text() const {
    std::ostringstream os;
    os << name << "\n";
    for (const auto& [k, v] : values) os << k << ": " << v << "\n";
    for (const auto& [w, ok] : checks) os << (ok ? "PASS " : "FAIL ") << w << "\n";
    return os.str();
  }
};

/// Index (1-based) of the printed kernel vector e_j closest to span(vs), and its distance.
inline std::pair<int, double> closest_example_vector(const std::vector<CVector>& vs) {
  const auto basis = fixtures::example1_kernel();
  int best = 0;
  double dist = std::numeric_limits<double>::infinity();
  for (int j = 0; j < 4; ++j) {
    const std::vector<CVector> one{basis[j]};
    const double d = subspace_distance(vs, one);
    if (d < dist) {
      dist = d;
      best = j + 1;
    }
  }
  return {best, dist};
}

inline Report example1() {
  Report r{"example1", {}, {}};
  const auto phi = fixtures::example1_phi();
  const auto a = build_matrix(phi);
  const auto psd = is_psd(a);
  const auto kb = kernel_basis(a);
  const double dist = subspace_distance(kb.vectors, fixtures::example1_kernel());
  r.value("dim", a.dim());
  r.value("min_eig", psd.min_eig);
  r.value("kernel_dim", kb.nu);
  r.value("kernel_projector_distance", dist);
  r.check("A(1,1,1) is positive semidefinite", psd.psd);
  r.check("kernel dimension is 4", kb.nu == 4);
  r.check("kernel equals span{e1..e4} within 1e-9", dist <= 1e-9);

  for (int k = 1; k <= 4; ++k) {
    const auto F = fixtures::example1_F(k);
    const double q = lf_quadratic(phi, F);
    const cplx l = lf(phi, mod_square(F));
    r.value("lf_f" + std::to_string(k), l.real());
    r.check("L(|F" + std::to_string(k) + "|^2) = e*Ae = 0", std::abs(l) <= 1e-10 && std::abs(q) <= 1e-10);
  }

  const auto face = face_of_q(phi);
  r.value("classification", to_string(face.classification));
  r.check("hyperplane cuts out a face", face.classification == FaceClass::face);

  for (int j = 1; j <= 4; ++j) {
    std::array<cplx, 4> g{0.5, 0.5, 0.5, 0.5};
    g[j - 1] = 1.0;
    const auto kj = kernel_basis(build_matrix(perturbed_example_phi(g[0], g[1], g[2], g[3])));
    const auto [match, d] = closest_example_vector(kj.vectors);
    const std::string key = "perturbed_gamma" + std::to_string(j);
    r.value(key + "_kernel_dim", kj.nu);
    r.value(key + "_kernel_vector", "e" + std::to_string(match));
    r.check("gamma_" + std::to_string(j) + " = 1 gives kernel span{e" + std::to_string(j) + "}",
            kj.nu == 1 && match == j && d <= 1e-9);
  }
  return r;
}

inline Report example2() {
  Report r{"example2", {}, {}};
  for (int k = 1; k <= 4; ++k) {
    const auto F = fixtures::example1_F(k);
    const auto img = calderon(mod_square(F));
    const auto prop = proportional(img.power, fixtures::power_target(k), 1e-9);
    r.value("ratio_P" + std::to_string(k), prop.ratio);
    r.check("C(|F" + std::to_string(k) + "|^2) proportional to P" + std::to_string(k),
            prop.is_prop && prop.ratio > 0);
    const std::vector<AnalyticTrigPoly> one{F};
    const auto sq = calderon_sos(one);
    r.check("square factor of F" + std::to_string(k) + " matches the transform",
            proportional(sq.front(), img.power, 1e-9).is_prop);
  }
  return r;
}

inline Report example3() {
  Report r{"example3", {}, {}};
  const double expected_min = 4.0 - 2.0 * std::numbers::sqrt2;
  const auto f0 = fixtures::f0();
  const auto gm = min_on_grid(f0, 64);
  const auto refined = refine_critical_point(f0, gm.argmin);
  const double refined_min = eval_trig(f0, refined).real();
  r.value("grid_min_f0", gm.value);
  r.value("refined_min_f0", refined_min);
  r.check("grid minimum of f0 within 1e-2 of 4 - 2^{3/2}", std::abs(gm.value - expected_min) <= 1e-2);
  r.check("refined minimum of f0 within 1e-8 of 4 - 2^{3/2}", std::abs(refined_min - expected_min) <= 1e-8);

  const auto f = fixtures::extremal_sigma();
  const auto zeros = find_zeros(f, 64);
  r.value("zeros", zeros.size());
  r.check("f has exactly 8 zeros", zeros.size() == 8);
  bool alphas = true;
  for (const auto& z : zeros) {
    const double a = std::abs(z.point.alpha);
    alphas = alphas && (std::abs(a - std::numbers::pi / 4) <= 1e-8 || std::abs(a - 3 * std::numbers::pi / 4) <= 1e-8);
  }
  r.check("zero alpha values lie in {+-pi/4, +-3pi/4}", alphas);

  const auto cert = extremality_rank_test(f, zeros);
  r.value("equations", cert.equations);
  r.value("unknowns", cert.unknowns);
  r.value("rank", cert.rank);
  r.value("null_space_angle", cert.null_space_angle);
  r.check("32 equations, 27 unknowns, rank 26", cert.equations == 32 && cert.unknowns == 27 && cert.rank == 26);
  r.check("f is certified extremal in sigma(1,1,1)", cert.extremal);

  const auto img = calderon(f);
  const auto prop = proportional(img.power, fixtures::extremal_sigma_power(), 1e-8);
  r.value("ratio_power_target", prop.ratio);
  r.check("Calderon image proportional to the power target", prop.is_prop && prop.ratio > 0);

  const auto phi = fixtures::example1_phi();
  for (double m : {0.1, 0.5, 1.0}) {
    const cplx v = lf(phi, f0 - TrigPoly::constant(f0.box(), m));
    r.check("L(f0 - " + std::to_string(m).substr(0, 3) + ") = -m", std::abs(v - cplx(-m)) <= 1e-12);
  }
  const auto nm = q_membership(f0 - TrigPoly::constant(f0.box(), 0.5));
  bool nm_ok = nm.status == QStatus::non_member && nm.separator.has_value();
  if (nm_ok) {
    const auto chk = is_psd(build_matrix(*nm.separator), 1e-9);
    const double sep = lf(*nm.separator, f0 - TrigPoly::constant(f0.box(), 0.5)).real();
    r.value("separator_lf", sep);
    nm_ok = chk.psd && sep < -1e-2;
  }
  r.value("q_member_f0_minus_half", to_string(nm.status));
  r.check("f0 - 1/2 is certified outside Q(1,1,1)", nm_ok);

  const auto f1 = mod_square(fixtures::example1_F(1));
  const auto mem = q_membership(f1);
  r.value("q_member_f1", to_string(mem.status));
  r.check("|F1|^2 is certified inside Q(1,1,1)",
          mem.status == QStatus::member && mem.factors && verify_sos(f1, *mem.factors, 1e-7));
  return r;
}

}  // namespace extpoly::reproduce
