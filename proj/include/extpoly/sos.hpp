#pragma once

// Membership in the cone Q of sums of squared moduli of analytic
// trigonometric polynomials.
//
// Primal side: find a PSD Gram matrix G indexed by the octant with
//   sum_{idx(r) - idx(s) = d} G[r,s] = q(d)   for every d,
// by alternating projections; factors are read off the eigendecomposition
// and polished so that they reproduce f to rounding.
// Dual side: a lattice function Phi with PSD Toeplitz matrix and
// L_Phi(f) < 0 proves f is not in Q, since L_Phi(|F|^2) = e*Ae >= 0.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "functional.hpp"
#include "polynomial.hpp"
#include "toeplitz.hpp"

namespace extpoly {

enum class QStatus { member, non_member, unknown };

inline const char* to_string(QStatus s) {
  switch (s) {
    case QStatus::member: return "member";
    case QStatus::non_member: return "non-member";
    case QStatus::unknown: return "unknown";
  }
  return "?";
}

struct QMembershipResult {
  QStatus status = QStatus::unknown;
  std::optional<HermitianMatrix> gram;
  std::optional<std::vector<AnalyticTrigPoly>> factors;
  std::optional<PhiTable> separator;
};

struct QOptions {
  int max_iters = 5000;
  double tol = 1e-9;
  int separator_iters = 2000;
};

/// Coefficients of sum |F_j|^2 equal those of f within tol (absolute).
inline bool verify_sos(const TrigPoly& f, std::span<const AnalyticTrigPoly> Fs, double tol = 1e-7) {
  for (const auto& F : Fs)
    if (!F.box().fits_in(f.box())) return false;
  TrigPoly s(f.box());
  for (const auto& F : Fs) s += mod_square(F);
  for (const auto& idx : symmetric_indices(f.box()))
    if (std::abs(s.coeff(idx) - f.coeff(idx)) > tol) return false;
  return true;
}

namespace detail {

// Entries (r,s) of an n x n matrix grouped by a difference of octant indices.
struct DifferenceClasses {
  DegreeBox box;
  std::map<MultiIndex, std::vector<std::pair<int, int>>> members;

  // row_minus_col: class key idx(r) - idx(s) (Gram convention); otherwise
  // idx(s) - idx(r) (Toeplitz convention of build_matrix).
  DifferenceClasses(const DegreeBox& b, bool row_minus_col) : box(b) {
    const int n = b.octant_size();
    for (int r = 0; r < n; ++r)
      for (int s = 0; s < n; ++s) {
        const MultiIndex d = unflatten_index(r, b) - unflatten_index(s, b);
        members[row_minus_col ? d : -d].emplace_back(r, s);
      }
  }
};

inline CMatrix clip_psd(const CMatrix& g, double* min_eig = nullptr) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(0.5 * (g + g.adjoint()));
  if (min_eig) *min_eig = es.eigenvalues().minCoeff();
  const Eigen::VectorXd lam = es.eigenvalues().cwiseMax(0.0);
  return es.eigenvectors() * lam.asDiagonal() * es.eigenvectors().adjoint();
}

inline void project_affine(CMatrix& g, const DifferenceClasses& cls, const TrigPoly& f) {
  for (const auto& [d, entries] : cls.members) {
    cplx sum{};
    for (auto [r, s] : entries) sum += g(r, s);
    const cplx corr = (f.coeff(d) - sum) / double(entries.size());
    for (auto [r, s] : entries) g(r, s) += corr;
  }
}

inline std::vector<AnalyticTrigPoly> factors_from_columns(const CMatrix& d, const DegreeBox& box) {
  std::vector<AnalyticTrigPoly> out;
  for (Eigen::Index j = 0; j < d.cols(); ++j) out.push_back(vector_to_analytic(d.col(j), box));
  return out;
}

// Columns sqrt(lambda_i) v_i for eigenvalues above cut * trace.
inline CMatrix gram_factor(const CMatrix& g, double cut) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(0.5 * (g + g.adjoint()));
  const double trace = std::max(0.0, es.eigenvalues().sum());
  std::vector<Eigen::Index> keep;
  for (Eigen::Index j = es.eigenvalues().size() - 1; j >= 0; --j)
    if (es.eigenvalues()[j] > cut * trace) keep.push_back(j);
  CMatrix d(g.rows(), Eigen::Index(keep.size()));
  for (std::size_t c = 0; c < keep.size(); ++c)
    d.col(Eigen::Index(c)) = es.eigenvectors().col(keep[c]) * std::sqrt(es.eigenvalues()[keep[c]]);
  return d;
}

// Levenberg-Marquardt on the factor matrix D so that the class sums of
// D D* match f. Unknowns are Re D, Im D; residuals are the origin class
// (real) and the real/imaginary parts of each half-lattice class.
inline CMatrix polish_factors(CMatrix d, const DifferenceClasses& cls, const TrigPoly& f, int max_iter = 100) {
  const Eigen::Index n = d.rows(), r = d.cols();
  if (r == 0) return d;
  std::vector<std::pair<MultiIndex, const std::vector<std::pair<int, int>>*>> keys;
  for (const auto& [k, e] : cls.members)
    if (k.is_origin() || k.positive_half()) keys.emplace_back(k, &e);

  auto residual = [&](const CMatrix& dd) {
    const CMatrix g = dd * dd.adjoint();
    Eigen::VectorXd res(2 * Eigen::Index(keys.size()));
    for (std::size_t c = 0; c < keys.size(); ++c) {
      cplx s{};
      for (auto [a, b] : *keys[c].second) s += g(a, b);
      s -= f.coeff(keys[c].first);
      res[2 * Eigen::Index(c)] = s.real();
      res[2 * Eigen::Index(c) + 1] = s.imag();
    }
    return res;
  };

  const double scale = std::max(1.0, f.l1_norm());
  double lambda = 1e-6;
  Eigen::VectorXd res = residual(d);
  for (int it = 0; it < max_iter && res.lpNorm<Eigen::Infinity>() > 1e-14 * scale; ++it) {
    // d(DD*)[a,b]/dRe D[p,j] = [a=p] conj D[b,j] + D[a,j] [b=p]
    // d(DD*)[a,b]/dIm D[p,j] = i [a=p] conj D[b,j] - i D[a,j] [b=p]
    Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(res.size(), 2 * n * r);
    for (std::size_t c = 0; c < keys.size(); ++c)
      for (auto [a, b] : *keys[c].second)
        for (Eigen::Index j = 0; j < r; ++j) {
          const cplx db = std::conj(d(b, j)), da = d(a, j);
          auto put = [&](Eigen::Index p, cplx dre, cplx dim) {
            jac(2 * Eigen::Index(c), p * r + j) += dre.real();
            jac(2 * Eigen::Index(c) + 1, p * r + j) += dre.imag();
            jac(2 * Eigen::Index(c), n * r + p * r + j) += dim.real();
            jac(2 * Eigen::Index(c) + 1, n * r + p * r + j) += dim.imag();
          };
          put(a, db, cplx(0, 1) * db);
          put(b, da, cplx(0, -1) * da);
        }
    bool improved = false;
    for (int attempt = 0; attempt < 20 && !improved; ++attempt) {
      Eigen::MatrixXd jjt = jac * jac.transpose();
      jjt.diagonal().array() += lambda;
      const Eigen::VectorXd step = -jac.transpose() * jjt.ldlt().solve(res);
      CMatrix trial = d;
      for (Eigen::Index p = 0; p < n; ++p)
        for (Eigen::Index j = 0; j < r; ++j) trial(p, j) += cplx(step[p * r + j], step[n * r + p * r + j]);
      const Eigen::VectorXd tres = residual(trial);
      if (tres.norm() < res.norm()) {
        d = trial;
        res = tres;
        lambda = std::max(lambda * 0.1, 1e-15);
        improved = true;
      } else {
        lambda *= 10;
      }
    }
    if (!improved) break;
  }
  return d;
}

}  // namespace detail

/// Projected-gradient search for Phi with Phi(0,0,0) = 1, build_matrix(Phi)
/// PSD and L_Phi(f) < 0. Every iterate is kept feasible: after clipping and
/// re-averaging, a negative minimum eigenvalue -s is removed by mixing in
/// the delta table with weight s.
inline std::optional<PhiTable> find_separating_phi(const TrigPoly& f, int iters = 2000) {
  require_real(f);
  const DegreeBox box = f.box();
  const detail::DifferenceClasses cls(box, /*row_minus_col=*/false);
  const auto idxs = symmetric_indices(box);

  double qnorm = 0;
  for (const auto& [i, c] : f.coeffs()) qnorm += std::norm(c);
  qnorm = std::sqrt(qnorm);
  if (qnorm == 0) return std::nullopt;

  std::map<MultiIndex, cplx> phi;
  for (const auto& i : idxs) phi[i] = i.is_origin() ? 1.0 : 0.0;
  auto value = [&](const std::map<MultiIndex, cplx>& p) {
    cplx s{};
    for (const auto& [i, c] : f.coeffs()) s += c * p.at(i);
    return s.real();
  };
  auto to_table = [&](const std::map<MultiIndex, cplx>& p) {
    PhiTable t(box);
    for (const auto& [i, c] : p)
      if (i.is_origin() || i.positive_half()) t.set(i, i.is_origin() ? cplx(c.real(), 0) : c);
    return t;
  };

  std::map<MultiIndex, cplx> best = phi;
  double best_val = value(phi);
  const int n = box.octant_size();
  for (int it = 0; it < iters; ++it) {
    const double step = 1.0 / (qnorm * std::sqrt(double(it) + 1.0));
    for (auto& [i, c] : phi) c -= step * std::conj(f.coeff(i));

    CMatrix a(n, n);
    for (const auto& [d, entries] : cls.members)
      for (auto [r, s] : entries) a(r, s) = phi.at(d);
    const CMatrix clipped = detail::clip_psd(a);
    for (const auto& [d, entries] : cls.members) {
      cplx s{};
      for (auto [r, c] : entries) s += clipped(r, c);
      phi[d] = s / double(entries.size());
    }
    const double origin = phi[MultiIndex{}].real();
    if (!(origin > 1e-12)) {
      for (auto& [i, c] : phi) c = i.is_origin() ? 1.0 : 0.0;
      continue;
    }
    for (auto& [i, c] : phi) c /= origin;
    phi[MultiIndex{}] = 1.0;

    double lo = 0;
    for (const auto& [d, entries] : cls.members)
      for (auto [r, s] : entries) a(r, s) = phi.at(d);
    detail::clip_psd(a, &lo);
    if (lo < 0) {
      const double shift = -lo;
      for (auto& [i, c] : phi) c = (c + (i.is_origin() ? shift : 0.0)) / (1.0 + shift);
    }
    const double v = value(phi);
    if (v < best_val) {
      best_val = v;
      best = phi;
    }
  }
  if (!(best_val < -1e-9)) return std::nullopt;
  PhiTable out = to_table(best);
  const auto check = is_psd(build_matrix(out), 1e-9);
  if (!check.psd || !(lf(out, f).real() < -1e-9)) return std::nullopt;
  return out;
}

/// Decides f in Q by alternating projections with a dual fallback. Both
/// definite answers carry independently checkable certificates; `unknown`
/// means neither was found.
inline QMembershipResult q_membership(const TrigPoly& f, const QOptions& opt = {}) {
  require_real(f);
  const DegreeBox box = f.box();
  QMembershipResult out;
  const int n = box.octant_size();

  double fmax = 0;
  for (const auto& [i, c] : f.coeffs()) fmax = std::max(fmax, std::abs(c));
  if (fmax == 0) {
    out.status = QStatus::member;
    out.gram = HermitianMatrix{CMatrix::Zero(n, n)};
    out.factors = std::vector<AnalyticTrigPoly>{};
    return out;
  }

  const detail::DifferenceClasses cls(box, /*row_minus_col=*/true);
  CMatrix g = CMatrix::Zero(n, n);
  detail::project_affine(g, cls, f);

  auto try_extract = [&](const CMatrix& psd) -> bool {
    const CMatrix d0 = detail::gram_factor(psd, 1e-10);
    const CMatrix d = detail::polish_factors(d0, cls, f);
    auto factors = detail::factors_from_columns(d, box);
    if (!verify_sos(f, factors, 1e-7)) return false;
    out.status = QStatus::member;
    out.gram = HermitianMatrix{d * d.adjoint()};
    out.factors = std::move(factors);
    return true;
  };

  const double scale = std::max(1.0, fmax);
  for (int it = 0; it < opt.max_iters; ++it) {
    const CMatrix p = detail::clip_psd(g);
    CMatrix next = p;
    detail::project_affine(next, cls, f);
    const double gap = (p - next).norm();
    g = std::move(next);
    if (gap < opt.tol * scale) {
      if (try_extract(p)) return out;
    } else if (gap < 1e-4 * scale && (it + 1) % 100 == 0) {
      if (try_extract(p)) return out;
    }
  }
  if (try_extract(detail::clip_psd(g))) return out;

  if (auto sep = find_separating_phi(f, opt.separator_iters)) {
    out.status = QStatus::non_member;
    out.separator = std::move(sep);
    return out;
  }
  out.status = QStatus::unknown;
  return out;
}

}  // namespace extpoly
