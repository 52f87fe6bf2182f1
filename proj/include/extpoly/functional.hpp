#pragma once

// The linear functional L_Phi(f) = sum q(k,l,m) Phi(k,l,m) and lattice
// functions generated by finite positive measures on [-pi,pi)^3.

#include <cmath>
#include <numbers>
#include <vector>

#include "polynomial.hpp"
#include "toeplitz.hpp"

namespace extpoly {

inline constexpr double kTwoPiCubed = 8.0 * std::numbers::pi * std::numbers::pi * std::numbers::pi;

struct Atom {
  Angle3 point;
  double weight = 0;
};

class AtomicMeasure {
 public:
  AtomicMeasure() = default;
  explicit AtomicMeasure(std::vector<Atom> atoms) {
    for (auto& a : atoms) add(a.point, a.weight);
  }

  AtomicMeasure& add(const Angle3& p, double w) {
    if (!(w > 0)) throw InputError("AtomicMeasure: weights must be positive");
    atoms_.push_back({p.normalized(), w});
    return *this;
  }

  const std::vector<Atom>& atoms() const { return atoms_; }
  bool empty() const { return atoms_.empty(); }

  double total_weight() const {
    double s = 0;
    for (const auto& a : atoms_) s += a.weight;
    return s;
  }

  /// Rescaled so that the total weight is (2pi)^3, i.e. Phi(0,0,0) = 1.
  AtomicMeasure normalized() const {
    AtomicMeasure out;
    const double s = kTwoPiCubed / total_weight();
    for (const auto& a : atoms_) out.add(a.point, a.weight * s);
    return out;
  }

  friend bool operator==(const AtomicMeasure& a, const AtomicMeasure& b) {
    if (a.atoms_.size() != b.atoms_.size()) return false;
    for (std::size_t i = 0; i < a.atoms_.size(); ++i)
      if (a.atoms_[i].point != b.atoms_[i].point || a.atoms_[i].weight != b.atoms_[i].weight) return false;
    return true;
  }

 private:
  std::vector<Atom> atoms_;
};

/// sum over the support of f of q(idx) * Phi(idx). Real up to rounding when
/// f is real-valued; the imaginary part is returned, not discarded.
inline cplx lf(const PhiTable& phi, const TrigPoly& f) {
  if (!f.box().fits_in(phi.box()))
    throw InputError("lf: polynomial box " + to_string(f.box()) + " exceeds table box " + to_string(phi.box()));
  cplx s{};
  for (const auto& [i, c] : f.coeffs()) s += c * phi(i);
  return s;
}

/// e* A e with A = build_matrix(phi) and e the coefficient vector of F.
inline double lf_quadratic(const PhiTable& phi, const AnalyticTrigPoly& F) {
  if (F.box() != phi.box())
    throw InputError("lf_quadratic: box mismatch " + to_string(F.box()) + " vs " + to_string(phi.box()));
  const auto a = build_matrix(phi);
  const CVector e = analytic_to_vector(F);
  return (e.adjoint() * a.entries * e)(0, 0).real();
}

/// Phi(k,l,m) = (2pi)^-3 sum_j w_j exp(i(k a_j + l b_j + m c_j)).
inline PhiTable phi_from_measure(const AtomicMeasure& mu, const DegreeBox& box) {
  if (mu.empty()) throw InputError("phi_from_measure: empty measure");
  PhiTable phi(box);
  for (const auto& idx : symmetric_indices(box)) {
    if (!(idx.is_origin() || idx.positive_half())) continue;
    cplx s{};
    for (const auto& a : mu.atoms())
      s += a.weight * std::polar(1.0, idx.k * a.point.alpha + idx.l * a.point.beta + idx.m * a.point.gamma);
    phi.set(idx, s / kTwoPiCubed);
  }
  return phi;
}

/// (2pi)^-3 sum_j w_j f(p_j).
inline double lf_via_measure(const AtomicMeasure& mu, const TrigPoly& f) {
  require_real(f);
  double s = 0;
  for (const auto& a : mu.atoms()) s += a.weight * eval_trig(f, a.point).real();
  return s / kTwoPiCubed;
}

}  // namespace extpoly
