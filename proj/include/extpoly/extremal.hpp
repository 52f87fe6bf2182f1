#pragma once

// Supporting hyperplanes, faces and extremal points of the cones of
// sum-of-squares (Q) and nonnegative (sigma) trigonometric polynomials.

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "functional.hpp"
#include "polynomial.hpp"
#include "toeplitz.hpp"

namespace extpoly {

enum class FaceClass { not_supporting, extremal_point, face };

inline const char* to_string(FaceClass c) {
  switch (c) {
    case FaceClass::not_supporting: return "not-supporting";
    case FaceClass::extremal_point: return "extremal-point";
    case FaceClass::face: return "face";
  }
  return "?";
}

inline FaceClass classify_kernel(int nu) {
  return nu == 0 ? FaceClass::not_supporting : (nu == 1 ? FaceClass::extremal_point : FaceClass::face);
}

struct FaceReport {
  PhiTable phi;
  int nu = 0;
  std::vector<TrigPoly> generators;
  FaceClass classification = FaceClass::not_supporting;
};

/// Face of Q cut out by the hyperplane L_phi(f) = 0. Each kernel vector e
/// of A gives a generator |F_e|^2 on the face.
inline FaceReport face_of_q(const PhiTable& phi, double tol = 1e-9) {
  const auto a = build_matrix(phi);
  const auto check = is_psd(a, tol);
  if (!check.psd)
    throw NumericalError("phi not Hermitian positive: no supporting hyperplane (min eigenvalue " +
                         std::to_string(check.min_eig) + ")");
  FaceReport r{phi, 0, {}, FaceClass::not_supporting};
  const auto kb = kernel_basis(a, tol);
  r.nu = kb.nu;
  for (const auto& v : kb.vectors) r.generators.push_back(mod_square(vector_to_analytic(v, phi.box())));
  r.classification = classify_kernel(r.nu);
  return r;
}

/// Lattice function on box (1,1,1) with B(0,0) = I, B(0,1) = B(1,0) = 0,
///   B(-1,1) = [[0, g1], [-g2, 0]],  B(1,1) = [[0, g4], [g3, 0]]
/// and Hermitian completion. All ones gives the four-dimensional kernel
/// example; the remaining entries of the box are zero.
inline PhiTable perturbed_example_phi(cplx g1, cplx g2, cplx g3, cplx g4) {
  PhiTable phi = PhiTable::delta({1, 1, 1});
  // B(l,m)[i][j] = Phi(j - i, l, m)
  phi.set({1, -1, 1}, g1);
  phi.set({-1, -1, 1}, -g2);
  phi.set({1, 1, 1}, g4);
  phi.set({-1, 1, 1}, g3);
  return phi;
}

// ---------------------------------------------------------------------------
// zeros

struct ZeroPoint {
  Angle3 point;
  double residual = 0;
};

namespace detail {

// Axes with degree zero carry no dependence; they are pinned at 0.
inline std::array<bool, 3> free_axes(const DegreeBox& b) { return {b.n1 > 0, b.n2 > 0, b.n3 > 0}; }

inline double grad_norm(const TrigDerivatives& d, const std::array<bool, 3>& free) {
  double s = 0;
  for (int a = 0; a < 3; ++a)
    if (free[a]) s += d.grad[a] * d.grad[a];
  return std::sqrt(s);
}

}  // namespace detail

/// Damped Newton iteration on grad f = 0 starting from `start`. The step is
/// halved while the gradient norm fails to decrease.
inline Angle3 refine_critical_point(const TrigPoly& f, const Angle3& start, int max_iter = 50) {
  const auto free = detail::free_axes(f.box());
  std::array<double, 3> x = start.as_array();
  for (int a = 0; a < 3; ++a)
    if (!free[a]) x[a] = 0.0;
  auto at = [&](const std::array<double, 3>& p) { return trig_derivatives(f, {p[0], p[1], p[2]}); };

  auto d = at(x);
  double r = detail::grad_norm(d, free);
  const double floor = 1e-15 * std::max(1.0, f.l1_norm());
  for (int it = 0; it < max_iter && r > floor; ++it) {
    Eigen::Matrix3d h;
    Eigen::Vector3d g;
    for (int a = 0; a < 3; ++a) {
      g[a] = free[a] ? d.grad[a] : 0.0;
      for (int b = 0; b < 3; ++b) h(a, b) = (free[a] && free[b]) ? d.hess[a][b] : 0.0;
    }
    // pseudo-inverse step; the Hessian is singular along zero families
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(h);
    const double hmax = es.eigenvalues().cwiseAbs().maxCoeff();
    Eigen::Vector3d step = Eigen::Vector3d::Zero();
    for (int j = 0; j < 3; ++j) {
      const double lam = es.eigenvalues()[j];
      if (std::abs(lam) > 1e-12 * hmax) step -= es.eigenvectors().col(j) * (es.eigenvectors().col(j).dot(g) / lam);
    }
    double t = 1.0;
    bool moved = false;
    for (int halving = 0; halving < 40; ++halving, t *= 0.5) {
      std::array<double, 3> y{x[0] + t * step[0], x[1] + t * step[1], x[2] + t * step[2]};
      auto dy = at(y);
      const double ry = detail::grad_norm(dy, free);
      if (ry < r) {
        x = y;
        d = dy;
        r = ry;
        moved = true;
        break;
      }
    }
    if (!moved) break;
  }
  return Angle3{x[0], x[1], x[2]}.normalized();
}

/// Zeros of a nonnegative polynomial: grid local minima below
/// 1e-3 * max|f| refined by Newton on the gradient, deduplicated on the torus
/// and sorted lexicographically. Only points with |f| <= 1e-9 * max|f| and
/// |grad f| <= 1e-6 are returned.
inline std::vector<ZeroPoint> find_zeros(const TrigPoly& f, int grid = 64, double refine_tol = 1e-9) {
  require_real(f);
  if (grid < 2) throw InputError("find_zeros: grid must be >= 2");
  const auto free = detail::free_axes(f.box());
  const std::array<int, 3> res{free[0] ? grid : 1, free[1] ? grid : 1, free[2] ? grid : 1};
  const auto v = grid_values(f, res);

  double maxabs = 0, lo = std::numeric_limits<double>::infinity();
  for (double x : v) {
    maxabs = std::max(maxabs, std::abs(x));
    lo = std::min(lo, x);
  }
  if (lo < -refine_tol * std::max(1.0, maxabs)) throw InputError("not nonnegative");
  const double threshold = 1e-3 * maxabs;

  auto flat = [&](int i, int j, int l) {
    return (std::size_t(i) * res[1] + std::size_t(j)) * res[2] + std::size_t(l);
  };
  auto wrap = [](int i, int n) { return ((i % n) + n) % n; };

  std::vector<Angle3> seeds;
  for (int i = 0; i < res[0]; ++i)
    for (int j = 0; j < res[1]; ++j)
      for (int l = 0; l < res[2]; ++l) {
        const double c = v[flat(i, j, l)];
        if (!(c < threshold)) continue;
        bool local_min = true;
        for (int di = -1; di <= 1 && local_min; ++di)
          for (int dj = -1; dj <= 1 && local_min; ++dj)
            for (int dl = -1; dl <= 1 && local_min; ++dl) {
              if (di == 0 && dj == 0 && dl == 0) continue;
              if ((di && !free[0]) || (dj && !free[1]) || (dl && !free[2])) continue;
              if (v[flat(wrap(i + di, res[0]), wrap(j + dj, res[1]), wrap(l + dl, res[2]))] < c) local_min = false;
            }
        if (local_min)
          seeds.push_back({res[0] > 1 ? grid_coordinate(i, res[0]) : 0.0, res[1] > 1 ? grid_coordinate(j, res[1]) : 0.0,
                           res[2] > 1 ? grid_coordinate(l, res[2]) : 0.0});
      }

  const double value_tol = 1e-9 * maxabs;
  std::vector<ZeroPoint> zeros;
  for (const auto& s : seeds) {
    const Angle3 z = refine_critical_point(f, s);
    const auto d = trig_derivatives(f, z);
    if (std::abs(d.value) > value_tol || detail::grad_norm(d, free) > 1e-6) continue;
    zeros.push_back({z, std::abs(d.value)});
  }
  std::sort(zeros.begin(), zeros.end(), [](const ZeroPoint& a, const ZeroPoint& b) { return a.point < b.point; });

  std::vector<ZeroPoint> unique;
  for (const auto& z : zeros) {
    const bool seen = std::any_of(unique.begin(), unique.end(),
                                  [&](const ZeroPoint& u) { return periodic_distance(u.point, z.point) <= 1e-6; });
    if (!seen) unique.push_back(z);
  }
  return unique;
}

// ---------------------------------------------------------------------------
// rank certificate

struct RankCertificate {
  std::vector<ZeroPoint> zeros;
  int equations = 0;
  int unknowns = 0;
  int rank = 0;
  bool extremal = false;
  /// Angle between the one-dimensional solution space and f; NaN unless extremal.
  double null_space_angle = std::numeric_limits<double>::quiet_NaN();
};

namespace detail {

// Real parameters of a real-valued g on the box: Re q(0), then for each
// half-lattice index h the pair (Re q(h), Im q(h)), so that
// g = q0 + sum_h 2 Re q(h) cos(h.t) - 2 Im q(h) sin(h.t).
inline Eigen::VectorXd real_parameters(const TrigPoly& f) {
  const auto half = half_lattice(f.box());
  Eigen::VectorXd x(1 + 2 * Eigen::Index(half.size()));
  x[0] = f.coeff({}).real();
  for (std::size_t j = 0; j < half.size(); ++j) {
    const cplx q = f.coeff(half[j]);
    x[1 + 2 * Eigen::Index(j)] = q.real();
    x[2 + 2 * Eigen::Index(j)] = q.imag();
  }
  return x;
}

// Rows: g(z) = 0 and dg/da = dg/db = dg/dc = 0 at every zero.
inline Eigen::MatrixXd vanishing_system(const DegreeBox& box, const std::vector<ZeroPoint>& zeros) {
  const auto half = half_lattice(box);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(4 * Eigen::Index(zeros.size()), 1 + 2 * Eigen::Index(half.size()));
  for (std::size_t z = 0; z < zeros.size(); ++z) {
    const auto& p = zeros[z].point;
    const Eigen::Index r = 4 * Eigen::Index(z);
    m(r, 0) = 1.0;
    for (std::size_t j = 0; j < half.size(); ++j) {
      const auto& h = half[j];
      const double phase = h.k * p.alpha + h.l * p.beta + h.m * p.gamma;
      const double c = std::cos(phase), s = std::sin(phase);
      const Eigen::Index ca = 1 + 2 * Eigen::Index(j), cb = ca + 1;
      m(r, ca) = 2 * c;
      m(r, cb) = -2 * s;
      const std::array<int, 3> n{h.k, h.l, h.m};
      for (int a = 0; a < 3; ++a) {
        m(r + 1 + a, ca) = -2 * n[a] * s;
        m(r + 1 + a, cb) = -2 * n[a] * c;
      }
    }
  }
  return m;
}

}  // namespace detail

/// Any real-valued g in f's box with g <= c f must vanish to second order at
/// the zeros of f. When the resulting linear system has rank unknowns-1 its
/// solutions are the multiples of f, so f is extremal in sigma. The test is
/// sufficient only.
inline RankCertificate extremality_rank_test(const TrigPoly& f, const std::vector<ZeroPoint>& zeros,
                                             double rank_tol = 1e-9) {
  require_real(f);
  RankCertificate cert;
  cert.zeros = zeros;
  cert.unknowns = f.box().symmetric_size();
  cert.equations = 4 * int(zeros.size());
  if (zeros.empty()) return cert;

  const Eigen::MatrixXd m = detail::vanishing_system(f.box(), zeros);
  const Eigen::VectorXd xf = detail::real_parameters(f);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double smax = sv.size() ? sv[0] : 0.0;
  cert.rank = 0;
  for (Eigen::Index j = 0; j < sv.size(); ++j)
    if (sv[j] > rank_tol * smax) ++cert.rank;

  const double scale = smax * xf.norm();
  if (scale > 0 && (m * xf).norm() > 1e-6 * scale)
    throw NumericalError("inconsistent certificate: f does not satisfy its own vanishing system");

  cert.extremal = cert.rank == cert.unknowns - 1;
  if (cert.extremal) {
    const Eigen::VectorXd null = svd.matrixV().col(cert.unknowns - 1);
    const double c = std::min(1.0, std::abs(null.dot(xf)) / (null.norm() * xf.norm()));
    cert.null_space_angle = std::acos(c);
    if (!(cert.null_space_angle <= 1e-6))
      throw NumericalError("inconsistent certificate: solution space is not spanned by f");
  }
  return cert;
}

/// L_phi(f) for the extendible phi generated by mu. Zero means the
/// hyperplane built from mu supports sigma at f.
inline double support_report_sigma(const AtomicMeasure& mu, const TrigPoly& f, int grid = 32) {
  require_real(f);
  if (!f.coeffs().empty() && min_on_grid(f, grid).value < -1e-9 * std::max(1.0, f.l1_norm()))
    throw InputError("not nonnegative");
  return lf_via_measure(mu, f);
}

}  // namespace extpoly
