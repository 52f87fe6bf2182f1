#pragma once

// Random generators and independent reference computations for the tests.
// Nothing here calls the library routine it is used to check.

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "extpoly/extpoly.hpp"

namespace extpoly::testing {

inline constexpr unsigned kSeed = 20240611u;

inline double uniform(std::mt19937& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline cplx gaussian_c(std::mt19937& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  const double re = n(rng);
  return {re, n(rng)};
}

inline Angle3 random_angle(std::mt19937& rng) {
  const double pi = std::numbers::pi;
  return {uniform(rng, -pi, pi), uniform(rng, -pi, pi), uniform(rng, -pi, pi)};
}

inline DegreeBox random_box(std::mt19937& rng, int max_degree = 1) {
  std::uniform_int_distribution<int> d(0, max_degree);
  return {d(rng), d(rng), d(rng)};
}

inline AnalyticTrigPoly random_analytic(std::mt19937& rng, const DegreeBox& box) {
  AnalyticTrigPoly::Map c;
  for (int k = 0; k <= box.n1; ++k)
    for (int l = 0; l <= box.n2; ++l)
      for (int m = 0; m <= box.n3; ++m) c[{k, l, m}] = gaussian_c(rng);
  return AnalyticTrigPoly(box, std::move(c));
}

/// Real-valued trigonometric polynomial with random Hermitian coefficients.
inline TrigPoly random_real_trig(std::mt19937& rng, const DegreeBox& box) {
  TrigPoly p(box);
  for (const auto& i : half_lattice(box)) {
    const cplx c = gaussian_c(rng);
    p.add(i, c);
    p.add(-i, std::conj(c));
  }
  p.add({}, gaussian_c(rng).real());
  return p;
}

inline AtomicMeasure random_measure(std::mt19937& rng, int max_atoms = 6) {
  std::uniform_int_distribution<int> n(1, max_atoms);
  AtomicMeasure mu;
  const int count = n(rng);
  for (int j = 0; j < count; ++j) mu.add(random_angle(rng), uniform(rng, 0.1, 2.0) * kTwoPiCubed / count);
  return mu;
}

// ---------------------------------------------------------------------------
// oracles

/// Direct real evaluation term by term with cos/sin.
inline double brute_eval_real(const TrigPoly& p, const Angle3& t) {
  double s = 0;
  for (const auto& [i, c] : p.coeffs()) {
    const double ph = i.k * t.alpha + i.l * t.beta + i.m * t.gamma;
    s += c.real() * std::cos(ph) - c.imag() * std::sin(ph);
  }
  return s;
}

/// |F(t)|^2 from the analytic polynomial directly.
inline double brute_mod_square(const AnalyticTrigPoly& F, const Angle3& t) {
  cplx s{};
  for (const auto& [i, c] : F.coeffs()) s += c * std::exp(cplx(0, i.k * t.alpha + i.l * t.beta + i.m * t.gamma));
  return std::norm(s);
}

/// f((x+i)/(x-i), ...) (x^2+1)^N1 (y^2+1)^N2 (z^2+1)^N3 by numerical
/// substitution: e^{ia} = (x+i)/(x-i) means a = arg((x+i)/(x-i)).
inline double calderon_by_substitution(const TrigPoly& f, double x, double y, double z) {
  const cplx i(0, 1);
  const Angle3 t{std::arg((x + i) / (x - i)), std::arg((y + i) / (y - i)), std::arg((z + i) / (z - i))};
  const auto& b = f.box();
  return brute_eval_real(f, t) * std::pow(x * x + 1, b.n1) * std::pow(y * y + 1, b.n2) * std::pow(z * z + 1, b.n3);
}

/// Rank by Gaussian elimination with complete pivoting; pivots below
/// tol * (largest initial entry) count as zero.
inline int rank_by_elimination(Eigen::MatrixXd m, double tol) {
  const double scale = m.size() ? m.cwiseAbs().maxCoeff() : 0.0;
  int rank = 0;
  const Eigen::Index rows = m.rows(), cols = m.cols();
  for (Eigen::Index step = 0; step < std::min(rows, cols); ++step) {
    Eigen::Index pr = step, pc = step;
    double best = 0;
    for (Eigen::Index r = step; r < rows; ++r)
      for (Eigen::Index c = step; c < cols; ++c)
        if (std::abs(m(r, c)) > best) {
          best = std::abs(m(r, c));
          pr = r;
          pc = c;
        }
    if (best <= tol * scale) break;
    m.row(step).swap(m.row(pr));
    m.col(step).swap(m.col(pc));
    for (Eigen::Index r = step + 1; r < rows; ++r) m.row(r) -= (m(r, step) / m(step, step)) * m.row(step);
    ++rank;
  }
  return rank;
}

/// Vanishing system for real-valued g on `box` at the given points, built from
/// the basis {1, cos(h.t), sin(h.t)} with central finite differences for the
/// derivatives.
inline Eigen::MatrixXd vanishing_system_fd(const DegreeBox& box, const std::vector<Angle3>& pts) {
  std::vector<MultiIndex> half;
  for (int k = -box.n1; k <= box.n1; ++k)
    for (int l = -box.n2; l <= box.n2; ++l)
      for (int m = -box.n3; m <= box.n3; ++m) {
        const MultiIndex i{k, l, m};
        if (k > 0 || (k == 0 && (l > 0 || (l == 0 && m > 0)))) half.push_back(i);
      }
  const Eigen::Index cols = 1 + 2 * Eigen::Index(half.size());
  auto basis = [&](const std::array<double, 3>& t) {
    Eigen::VectorXd v(cols);
    v[0] = 1;
    for (std::size_t j = 0; j < half.size(); ++j) {
      const double ph = half[j].k * t[0] + half[j].l * t[1] + half[j].m * t[2];
      v[1 + 2 * Eigen::Index(j)] = std::cos(ph);
      v[2 + 2 * Eigen::Index(j)] = std::sin(ph);
    }
    return v;
  };
  const double h = 1e-5;
  Eigen::MatrixXd m(4 * Eigen::Index(pts.size()), cols);
  for (std::size_t p = 0; p < pts.size(); ++p) {
    const std::array<double, 3> t = pts[p].as_array();
    m.row(4 * Eigen::Index(p)) = basis(t);
    for (int a = 0; a < 3; ++a) {
      auto tp = t, tm = t;
      tp[a] += h;
      tm[a] -= h;
      m.row(4 * Eigen::Index(p) + 1 + a) = (basis(tp) - basis(tm)) / (2 * h);
    }
  }
  return m;
}

/// The eight zeros of 2^{3/2} - 2 cos a cos(b+c) - 2 sin a sin(b-c):
/// b+c in {0,pi}, b-c = +-pi/2 and (cos a, sin a) = (cos(b+c), sin(b-c))/sqrt2.
inline std::vector<Angle3> extremal_sigma_zeros_closed_form() {
  const double pi = std::numbers::pi;
  std::vector<Angle3> out;
  for (double s : {0.0, pi})
    for (double t : {pi / 2, -pi / 2})
      for (double shift : {0.0, pi}) {
        const double b = (s + t) / 2 + shift, c = (s - t) / 2 + shift;
        const double u = std::cos(b + c), v = std::sin(b - c);
        out.push_back(Angle3{std::atan2(v, u), b, c}.normalized());
      }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace extpoly::testing
