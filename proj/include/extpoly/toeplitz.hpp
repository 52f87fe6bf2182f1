#pragma once

// Three-level block Toeplitz matrices built from a lattice function Phi.
//
// The coefficient vector e of an analytic polynomial F lists d(k,l,m) with
// m varying slowest and k fastest. With that ordering
//
//   A[(k,l,m), (k',l',m')] = Phi(k'-k, l'-l, m'-m)
//
// which is the nesting B(l,m) -> C_m -> A: the innermost Toeplitz block has
// Phi(0,l,m), Phi(1,l,m), ... along its first row. Then for f = |F|^2
// the functional sum q(idx) Phi(idx) equals e* A e.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "polynomial.hpp"

namespace extpoly {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Position of d(k,l,m) in the flattened coefficient vector.
inline int flatten_index(const MultiIndex& idx, const DegreeBox& box) {
  if (!box.contains_octant(idx))
    throw InputError("flatten_index: " + to_string(idx) + " outside octant of box " + to_string(box));
  return idx.m * (box.n2 + 1) * (box.n1 + 1) + idx.l * (box.n1 + 1) + idx.k;
}

inline MultiIndex unflatten_index(int flat, const DegreeBox& box) {
  if (flat < 0 || flat >= box.octant_size()) throw InputError("unflatten_index: position out of range");
  const int k = flat % (box.n1 + 1);
  const int l = (flat / (box.n1 + 1)) % (box.n2 + 1);
  const int m = flat / ((box.n1 + 1) * (box.n2 + 1));
  return {k, l, m};
}

/// Hermitian-symmetric lattice function on the symmetric box.
class PhiTable {
 public:
  PhiTable() = default;
  explicit PhiTable(DegreeBox box) : box_(box) {}

  /// Every index of the box set to zero except Phi(0,0,0) = 1.
  static PhiTable delta(DegreeBox box) {
    PhiTable t(box);
    for (const auto& i : symmetric_indices(box)) t.values_[i] = i.is_origin() ? 1.0 : 0.0;
    return t;
  }

  const DegreeBox& box() const { return box_; }
  const std::map<MultiIndex, cplx>& values() const { return values_; }

  /// Sets Phi(idx) and Phi(-idx) = conj(v). The origin value must be real.
  PhiTable& set(const MultiIndex& idx, cplx v) {
    if (!box_.contains_symmetric(idx))
      throw InputError("PhiTable: index " + to_string(idx) + " outside box " + to_string(box_));
    if (idx.is_origin()) {
      if (std::abs(v.imag()) > 1e-12 * std::max(1.0, std::abs(v)))
        throw InputError("PhiTable: value at the origin must be real");
      values_[idx] = cplx(v.real(), 0.0);
      return *this;
    }
    values_[idx] = v;
    values_[-idx] = std::conj(v);
    return *this;
  }

  bool has(const MultiIndex& idx) const { return values_.count(idx) != 0; }

  cplx operator()(const MultiIndex& idx) const {
    auto it = values_.find(idx);
    if (it == values_.end()) throw InputError("PhiTable: no value at " + to_string(idx));
    return it->second;
  }

  std::vector<MultiIndex> missing() const {
    std::vector<MultiIndex> out;
    for (const auto& i : symmetric_indices(box_))
      if (!has(i)) out.push_back(i);
    return out;
  }
  bool complete() const { return missing().empty(); }

  friend bool operator==(const PhiTable& a, const PhiTable& b) {
    return a.box_ == b.box_ && detail::drop_dust(a.values_) == detail::drop_dust(b.values_);
  }

 private:
  DegreeBox box_;
  std::map<MultiIndex, cplx> values_;
};

/// Dense square complex matrix intended to be Hermitian.
struct HermitianMatrix {
  CMatrix entries;

  int dim() const { return int(entries.rows()); }
  double asymmetry() const { return (entries - entries.adjoint()).cwiseAbs().maxCoeff(); }
  friend bool operator==(const HermitianMatrix& a, const HermitianMatrix& b) {
    return a.entries.rows() == b.entries.rows() && a.entries.cols() == b.entries.cols() &&
           (a.entries.size() == 0 || (a.entries - b.entries).cwiseAbs().maxCoeff() < detail::kDustThreshold);
  }
};

inline HermitianMatrix build_matrix(const PhiTable& phi) {
  const auto miss = phi.missing();
  if (!miss.empty()) {
    std::string msg = "PhiTable incomplete; missing indices:";
    for (const auto& i : miss) msg += " " + to_string(i);
    throw InputError(msg);
  }
  const auto& box = phi.box();
  const int n = box.octant_size();
  CMatrix a(n, n);
  for (int r = 0; r < n; ++r) {
    const auto row = unflatten_index(r, box);
    for (int s = 0; s < n; ++s) a(r, s) = phi(unflatten_index(s, box) - row);
  }
  return {std::move(a)};
}

struct PsdCheck {
  bool psd = false;
  double min_eig = 0;
};

namespace detail {

inline void require_hermitian(const HermitianMatrix& m, const char* what) {
  if (m.entries.rows() != m.entries.cols()) throw InputError(std::string(what) + ": matrix is not square");
  if (m.dim() > 0 && m.asymmetry() > 1e-9) throw InputError(std::string(what) + ": matrix is not Hermitian");
}

inline Eigen::SelfAdjointEigenSolver<CMatrix> eig(const HermitianMatrix& m) {
  // symmetrise so that rounding in the input does not leak into the solver
  const CMatrix h = 0.5 * (m.entries + m.entries.adjoint());
  return Eigen::SelfAdjointEigenSolver<CMatrix>(h);
}

}  // namespace detail

inline double spectral_radius(const Eigen::VectorXd& eigenvalues) {
  return eigenvalues.size() == 0 ? 0.0 : eigenvalues.cwiseAbs().maxCoeff();
}

/// PSD iff min eigenvalue >= -tol * max(1, spectral radius).
inline PsdCheck is_psd(const HermitianMatrix& m, double tol = 1e-9) {
  detail::require_hermitian(m, "is_psd");
  if (m.dim() == 0) return {true, 0.0};
  const auto es = detail::eig(m);
  const Eigen::VectorXd& ev = es.eigenvalues();
  const double lo = ev.minCoeff();
  return {lo >= -tol * std::max(1.0, spectral_radius(ev)), lo};
}

struct KernelBasis {
  std::vector<CVector> vectors;
  int nu = 0;
};

/// Eigenvectors with eigenvalue <= tol * spectral radius, ascending order.
inline KernelBasis kernel_basis(const HermitianMatrix& m, double tol = 1e-9) {
  detail::require_hermitian(m, "kernel_basis");
  KernelBasis out;
  if (m.dim() == 0) return out;
  const auto es = detail::eig(m);
  const Eigen::VectorXd& ev = es.eigenvalues();
  const double cut = tol * spectral_radius(ev);
  for (int j = 0; j < ev.size(); ++j)
    if (ev[j] <= cut) out.vectors.push_back(es.eigenvectors().col(j));
  out.nu = int(out.vectors.size());
  return out;
}

inline AnalyticTrigPoly vector_to_analytic(const CVector& v, const DegreeBox& box) {
  if (v.size() != box.octant_size())
    throw InputError("vector_to_analytic: length " + std::to_string(v.size()) + " does not match box " +
                     to_string(box));
  AnalyticTrigPoly::Map coeffs;
  for (int j = 0; j < v.size(); ++j)
    if (v[j] != cplx{}) coeffs[unflatten_index(j, box)] = v[j];
  return AnalyticTrigPoly(box, std::move(coeffs));
}

inline CVector analytic_to_vector(const AnalyticTrigPoly& F) {
  CVector v = CVector::Zero(F.box().octant_size());
  for (const auto& [i, c] : F.coeffs()) v[flatten_index(i, F.box())] = c;
  return v;
}

/// Orthonormal basis (as columns) of the span of the given vectors.
inline CMatrix orthonormal_columns(std::span<const CVector> vs, double rank_tol = 1e-12) {
  if (vs.empty()) return CMatrix(0, 0);
  CMatrix m(vs.front().size(), Eigen::Index(vs.size()));
  for (std::size_t j = 0; j < vs.size(); ++j) m.col(Eigen::Index(j)) = vs[j];
  Eigen::ColPivHouseholderQR<CMatrix> qr(m);
  qr.setThreshold(rank_tol);
  const auto r = qr.rank();
  CMatrix q = qr.householderQ();
  return q.leftCols(r);
}

/// Frobenius distance between the orthogonal projectors onto span(a) and span(b).
inline double subspace_distance(std::span<const CVector> a, std::span<const CVector> b) {
  const Eigen::Index n = !a.empty() ? a.front().size() : (!b.empty() ? b.front().size() : 0);
  auto projector = [n](std::span<const CVector> vs) {
    if (vs.empty()) return CMatrix(CMatrix::Zero(n, n));
    const CMatrix q = orthonormal_columns(vs);
    return CMatrix(q * q.adjoint());
  };
  return (projector(a) - projector(b)).norm();
}

}  // namespace extpoly
