#pragma once

// Sparse trigonometric (Laurent) and power polynomials in three variables.
//
// A trigonometric polynomial is stored in the exponential basis
//
//   f(a,b,c) = sum_{|k|<=N1,|l|<=N2,|m|<=N3} q(k,l,m) exp(i(ka + lb + mc))
//
// with an explicit degree box (N1,N2,N3). The box is part of the value:
// vectorisation of analytic polynomials and the Toeplitz matrices built
// from them depend on the declared box, not on the support.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <compare>
#include <cstdlib>
#include <map>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace extpoly {

using cplx = std::complex<double>;

/// Malformed input or violated precondition.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A numerical procedure could not produce a valid result.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MultiIndex {
  int k = 0;
  int l = 0;
  int m = 0;

  constexpr MultiIndex operator-() const { return {-k, -l, -m}; }
  constexpr MultiIndex operator+(const MultiIndex& o) const { return {k + o.k, l + o.l, m + o.m}; }
  constexpr MultiIndex operator-(const MultiIndex& o) const { return {k - o.k, l - o.l, m - o.m}; }
  constexpr auto operator<=>(const MultiIndex&) const = default;

  /// True for the half of the lattice used as the canonical representative
  /// of each Hermitian pair {idx, -idx}: k>0, or k=0,l>0, or k=l=0,m>0.
  constexpr bool positive_half() const {
    return k > 0 || (k == 0 && (l > 0 || (l == 0 && m > 0)));
  }
  constexpr bool is_origin() const { return k == 0 && l == 0 && m == 0; }
};

inline std::string to_string(const MultiIndex& i) {
  return "(" + std::to_string(i.k) + "," + std::to_string(i.l) + "," + std::to_string(i.m) + ")";
}

struct DegreeBox {
  int n1 = 0;
  int n2 = 0;
  int n3 = 0;

  constexpr DegreeBox() = default;
  constexpr DegreeBox(int a, int b, int c) : n1(a), n2(b), n3(c) {
    if (a < 0 || b < 0 || c < 0) throw InputError("degree box components must be non-negative");
  }
  constexpr auto operator<=>(const DegreeBox&) const = default;

  constexpr std::array<int, 3> as_array() const { return {n1, n2, n3}; }

  /// |k|<=N1, |l|<=N2, |m|<=N3
  constexpr bool contains_symmetric(const MultiIndex& i) const {
    return std::abs(i.k) <= n1 && std::abs(i.l) <= n2 && std::abs(i.m) <= n3;
  }
  /// 0<=k<=N1, 0<=l<=N2, 0<=m<=N3
  constexpr bool contains_octant(const MultiIndex& i) const {
    return i.k >= 0 && i.l >= 0 && i.m >= 0 && i.k <= n1 && i.l <= n2 && i.m <= n3;
  }
  /// Componentwise <=.
  constexpr bool fits_in(const DegreeBox& o) const { return n1 <= o.n1 && n2 <= o.n2 && n3 <= o.n3; }

  /// Number of lattice points in the non-negative octant.
  constexpr int octant_size() const { return (n1 + 1) * (n2 + 1) * (n3 + 1); }
  /// Number of lattice points in the symmetric box.
  constexpr int symmetric_size() const { return (2 * n1 + 1) * (2 * n2 + 1) * (2 * n3 + 1); }
};

inline std::string to_string(const DegreeBox& b) {
  return "[" + std::to_string(b.n1) + "," + std::to_string(b.n2) + "," + std::to_string(b.n3) + "]";
}

/// All indices of the symmetric box, lexicographic order.
inline std::vector<MultiIndex> symmetric_indices(const DegreeBox& box) {
  std::vector<MultiIndex> out;
  out.reserve(box.symmetric_size());
  for (int k = -box.n1; k <= box.n1; ++k)
    for (int l = -box.n2; l <= box.n2; ++l)
      for (int m = -box.n3; m <= box.n3; ++m) out.push_back({k, l, m});
  return out;
}

/// Canonical half of the symmetric box (positive_half), lexicographic order.
inline std::vector<MultiIndex> half_lattice(const DegreeBox& box) {
  std::vector<MultiIndex> out;
  for (const auto& i : symmetric_indices(box))
    if (i.positive_half()) out.push_back(i);
  return out;
}

inline double wrap_angle(double t) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  if (t >= -std::numbers::pi && t < std::numbers::pi) return t;
  double r = std::fmod(t + std::numbers::pi, two_pi);
  if (r < 0) r += two_pi;
  r -= std::numbers::pi;
  // fmod rounding can land exactly on +pi
  if (r >= std::numbers::pi) r -= two_pi;
  return r;
}

struct Angle3 {
  double alpha = 0;
  double beta = 0;
  double gamma = 0;

  /// Representative in [-pi,pi)^3.
  Angle3 normalized() const { return {wrap_angle(alpha), wrap_angle(beta), wrap_angle(gamma)}; }
  std::array<double, 3> as_array() const { return {alpha, beta, gamma}; }
  auto operator<=>(const Angle3&) const = default;
};

/// Max over axes of the distance on the circle.
inline double periodic_distance(const Angle3& a, const Angle3& b) {
  return std::max({std::abs(wrap_angle(a.alpha - b.alpha)), std::abs(wrap_angle(a.beta - b.beta)),
                   std::abs(wrap_angle(a.gamma - b.gamma))});
}

namespace detail {

constexpr double kDustThreshold = 1e-14;

template <class Coeff>
void check_box(const std::map<MultiIndex, Coeff>& coeffs, bool (*ok)(const DegreeBox&, const MultiIndex&),
               const DegreeBox& box, const char* what) {
  for (const auto& [idx, c] : coeffs)
    if (!ok(box, idx))
      throw InputError(std::string(what) + ": index " + to_string(idx) + " outside degree box " + to_string(box));
}

template <class Coeff>
std::map<MultiIndex, Coeff> drop_dust(const std::map<MultiIndex, Coeff>& in) {
  std::map<MultiIndex, Coeff> out;
  for (const auto& [idx, c] : in)
    if (std::abs(c) >= kDustThreshold) out.emplace(idx, c);
  return out;
}

// exp(i n t) for n in [-N, N], stored at offset n + N
inline std::vector<cplx> exp_table(double t, int n) {
  std::vector<cplx> out(2 * n + 1);
  for (int j = -n; j <= n; ++j) out[j + n] = std::polar(1.0, j * t);
  return out;
}

}  // namespace detail

/// Trigonometric polynomial on the symmetric box.
class TrigPoly {
 public:
  using Map = std::map<MultiIndex, cplx>;

  TrigPoly() = default;
  explicit TrigPoly(DegreeBox box) : box_(box) {}
  TrigPoly(DegreeBox box, Map coeffs) : box_(box), coeffs_(std::move(coeffs)) {
    detail::check_box(coeffs_, [](const DegreeBox& b, const MultiIndex& i) { return b.contains_symmetric(i); },
                      box_, "TrigPoly");
  }

  static TrigPoly constant(DegreeBox box, double c) { return TrigPoly(box, {{MultiIndex{}, cplx(c)}}); }

  const DegreeBox& box() const { return box_; }
  const Map& coeffs() const { return coeffs_; }

  cplx coeff(const MultiIndex& i) const {
    auto it = coeffs_.find(i);
    return it == coeffs_.end() ? cplx{} : it->second;
  }

  /// Adds c to the coefficient of idx.
  TrigPoly& add(const MultiIndex& idx, cplx c) {
    if (!box_.contains_symmetric(idx))
      throw InputError("TrigPoly: index " + to_string(idx) + " outside degree box " + to_string(box_));
    coeffs_[idx] += c;
    return *this;
  }

  /// Adds c*cos(k a + l b + m c) = c/2 e^{i theta} + c/2 e^{-i theta}.
  TrigPoly& add_cos(const MultiIndex& idx, double c) {
    if (idx.is_origin()) return add(idx, c);
    add(idx, 0.5 * c);
    return add(-idx, 0.5 * c);
  }

  /// Adds c*sin(theta) = -i c/2 e^{i theta} + i c/2 e^{-i theta}.
  TrigPoly& add_sin(const MultiIndex& idx, double c) {
    if (idx.is_origin()) return *this;
    add(idx, cplx(0, -0.5 * c));
    return add(-idx, cplx(0, 0.5 * c));
  }

  /// Same polynomial viewed in a larger box.
  TrigPoly embedded(const DegreeBox& bigger) const {
    if (!box_.fits_in(bigger)) throw InputError("TrigPoly::embedded: target box is smaller");
    return TrigPoly(bigger, coeffs_);
  }

  TrigPoly& operator+=(const TrigPoly& o) {
    if (o.box_ != box_) throw InputError("TrigPoly: box mismatch in addition");
    for (const auto& [i, c] : o.coeffs_) coeffs_[i] += c;
    return *this;
  }
  TrigPoly& operator*=(cplx s) {
    for (auto& [i, c] : coeffs_) c *= s;
    return *this;
  }
  friend TrigPoly operator+(TrigPoly a, const TrigPoly& b) { return a += b; }
  friend TrigPoly operator-(TrigPoly a, const TrigPoly& b) {
    TrigPoly nb = b;
    nb *= -1.0;
    return a += nb;
  }
  friend TrigPoly operator*(cplx s, TrigPoly a) { return a *= s; }

  /// Equality after dropping coefficients below 1e-14 in magnitude.
  friend bool operator==(const TrigPoly& a, const TrigPoly& b) {
    return a.box_ == b.box_ && detail::drop_dust(a.coeffs_) == detail::drop_dust(b.coeffs_);
  }

  /// Sum of coefficient magnitudes; bounds |f| everywhere.
  double l1_norm() const {
    double s = 0;
    for (const auto& [i, c] : coeffs_) s += std::abs(c);
    return s;
  }

 private:
  DegreeBox box_;
  Map coeffs_;
};

/// F = sum_{0<=k<=N1,0<=l<=N2,0<=m<=N3} q(k,l,m) exp(i(ka+lb+mc)).
class AnalyticTrigPoly {
 public:
  using Map = std::map<MultiIndex, cplx>;

  AnalyticTrigPoly() = default;
  explicit AnalyticTrigPoly(DegreeBox box) : box_(box) {}
  AnalyticTrigPoly(DegreeBox box, Map coeffs) : box_(box), coeffs_(std::move(coeffs)) {
    detail::check_box(coeffs_, [](const DegreeBox& b, const MultiIndex& i) { return b.contains_octant(i); }, box_,
                      "AnalyticTrigPoly");
  }

  const DegreeBox& box() const { return box_; }
  const Map& coeffs() const { return coeffs_; }
  cplx coeff(const MultiIndex& i) const {
    auto it = coeffs_.find(i);
    return it == coeffs_.end() ? cplx{} : it->second;
  }

  friend bool operator==(const AnalyticTrigPoly& a, const AnalyticTrigPoly& b) {
    return a.box_ == b.box_ && detail::drop_dust(a.coeffs_) == detail::drop_dust(b.coeffs_);
  }

 private:
  DegreeBox box_;
  Map coeffs_;
};

/// Real polynomial sum a_{k,l,m} x^k y^l z^m with exponent bounds given by
/// the box (for Calderon images the box is (2N1,2N2,2N3)).
class PowerPoly {
 public:
  using Map = std::map<MultiIndex, double>;

  PowerPoly() = default;
  explicit PowerPoly(DegreeBox box) : box_(box) {}
  PowerPoly(DegreeBox box, Map coeffs) : box_(box), coeffs_(std::move(coeffs)) {
    detail::check_box(coeffs_, [](const DegreeBox& b, const MultiIndex& i) { return b.contains_octant(i); }, box_,
                      "PowerPoly");
  }

  const DegreeBox& box() const { return box_; }
  const Map& coeffs() const { return coeffs_; }
  double coeff(const MultiIndex& i) const {
    auto it = coeffs_.find(i);
    return it == coeffs_.end() ? 0.0 : it->second;
  }
  PowerPoly& add(const MultiIndex& idx, double c) {
    if (!box_.contains_octant(idx))
      throw InputError("PowerPoly: exponent " + to_string(idx) + " outside degree box " + to_string(box_));
    coeffs_[idx] += c;
    return *this;
  }

  double max_abs() const {
    double s = 0;
    for (const auto& [i, c] : coeffs_) s = std::max(s, std::abs(c));
    return s;
  }

  PowerPoly& operator+=(const PowerPoly& o) {
    if (!o.box_.fits_in(box_)) throw InputError("PowerPoly: box mismatch in addition");
    for (const auto& [i, c] : o.coeffs_) coeffs_[i] += c;
    return *this;
  }
  PowerPoly& operator*=(double s) {
    for (auto& [i, c] : coeffs_) c *= s;
    return *this;
  }
  friend PowerPoly operator+(PowerPoly a, const PowerPoly& b) { return a += b; }
  friend PowerPoly operator*(double s, PowerPoly a) { return a *= s; }

  /// Product; the result box is the sum of the boxes.
  friend PowerPoly operator*(const PowerPoly& a, const PowerPoly& b) {
    PowerPoly out({a.box_.n1 + b.box_.n1, a.box_.n2 + b.box_.n2, a.box_.n3 + b.box_.n3});
    for (const auto& [i, c] : a.coeffs_)
      for (const auto& [j, d] : b.coeffs_) out.coeffs_[i + j] += c * d;
    return out;
  }

  friend bool operator==(const PowerPoly& a, const PowerPoly& b) {
    return a.box_ == b.box_ && detail::drop_dust(a.coeffs_) == detail::drop_dust(b.coeffs_);
  }

 private:
  DegreeBox box_;
  Map coeffs_;
};

// ---------------------------------------------------------------------------
// evaluation

inline cplx eval_trig(const TrigPoly& p, const Angle3& pt) {
  const auto& b = p.box();
  auto ea = detail::exp_table(pt.alpha, b.n1);
  auto eb = detail::exp_table(pt.beta, b.n2);
  auto ec = detail::exp_table(pt.gamma, b.n3);
  cplx s{};
  for (const auto& [i, c] : p.coeffs()) s += c * ea[i.k + b.n1] * eb[i.l + b.n2] * ec[i.m + b.n3];
  return s;
}

inline cplx eval_analytic(const AnalyticTrigPoly& p, const Angle3& pt) {
  cplx s{};
  for (const auto& [i, c] : p.coeffs()) s += c * std::polar(1.0, i.k * pt.alpha + i.l * pt.beta + i.m * pt.gamma);
  return s;
}

/// Gradient and Hessian of the real part of f with respect to (a,b,c).
struct TrigDerivatives {
  double value = 0;
  std::array<double, 3> grad{};
  std::array<std::array<double, 3>, 3> hess{};
};

inline TrigDerivatives trig_derivatives(const TrigPoly& p, const Angle3& pt) {
  TrigDerivatives d;
  for (const auto& [i, c] : p.coeffs()) {
    const std::array<double, 3> n{double(i.k), double(i.l), double(i.m)};
    const cplx t = c * std::polar(1.0, i.k * pt.alpha + i.l * pt.beta + i.m * pt.gamma);
    // d/dx_j e^{i n.x} = i n_j e^{i n.x}
    d.value += t.real();
    for (int a = 0; a < 3; ++a) {
      d.grad[a] += -n[a] * t.imag();
      for (int b = 0; b < 3; ++b) d.hess[a][b] += -n[a] * n[b] * t.real();
    }
  }
  return d;
}

inline double eval_power(const PowerPoly& p, double x, double y, double z) {
  double s = 0;
  for (const auto& [i, c] : p.coeffs()) s += c * std::pow(x, i.k) * std::pow(y, i.l) * std::pow(z, i.m);
  return s;
}

// ---------------------------------------------------------------------------
// structure

/// |q(-i) - conj(q(i))| <= tol for every index.
inline bool is_real_valued(const TrigPoly& p, double tol = 1e-12) {
  for (const auto& [i, c] : p.coeffs())
    if (std::abs(p.coeff(-i) - std::conj(c)) > tol) return false;
  return true;
}

inline void require_real(const TrigPoly& p, double tol = 1e-9) {
  if (!is_real_valued(p, tol * std::max(1.0, p.l1_norm()))) throw InputError("polynomial not real-valued");
}

/// |F|^2: coefficient at d is sum over a-b=d of q(a) conj(q(b)).
inline TrigPoly mod_square(const AnalyticTrigPoly& F) {
  TrigPoly out(F.box());
  for (const auto& [a, ca] : F.coeffs())
    for (const auto& [b, cb] : F.coeffs()) out.add(a - b, ca * std::conj(cb));
  // enforce exact Hermitian symmetry against rounding in the accumulation order
  TrigPoly::Map sym;
  for (const auto& [i, c] : out.coeffs()) {
    if (i.is_origin())
      sym[i] = cplx(c.real(), 0.0);
    else if (i.positive_half()) {
      const cplx avg = 0.5 * (c + std::conj(out.coeff(-i)));
      sym[i] = avg;
      sym[-i] = std::conj(avg);
    }
  }
  return TrigPoly(F.box(), std::move(sym));
}

inline TrigPoly sum_of_mod_squares(std::span<const AnalyticTrigPoly> Fs, DegreeBox box_if_empty = {}) {
  if (Fs.empty()) return TrigPoly(box_if_empty);
  TrigPoly out(Fs.front().box());
  for (const auto& F : Fs) {
    if (F.box() != out.box()) throw InputError("sum_of_mod_squares: factors must share one degree box");
    out += mod_square(F);
  }
  return out;
}

// ---------------------------------------------------------------------------
// grids

/// Coordinate of grid node j on the uniform resolution-point grid of [-pi,pi).
inline double grid_coordinate(int j, int resolution) {
  return -std::numbers::pi + 2.0 * std::numbers::pi * j / resolution;
}

/// Values of Re f on the grid res[0] x res[1] x res[2]; flat index
/// (i*res[1] + j)*res[2] + l.
inline std::vector<double> grid_values(const TrigPoly& p, const std::array<int, 3>& res) {
  const auto& b = p.box();
  auto table = [](int n, int r) {
    std::vector<std::vector<cplx>> t(r);
    for (int j = 0; j < r; ++j) t[j] = detail::exp_table(r == 1 ? 0.0 : grid_coordinate(j, r), n);
    return t;
  };
  const auto ta = table(b.n1, res[0]);
  const auto tb = table(b.n2, res[1]);
  const auto tc = table(b.n3, res[2]);
  std::vector<std::pair<MultiIndex, cplx>> terms(p.coeffs().begin(), p.coeffs().end());

  std::vector<double> out(std::size_t(res[0]) * res[1] * res[2]);
  std::size_t flat = 0;
  for (int i = 0; i < res[0]; ++i)
    for (int j = 0; j < res[1]; ++j)
      for (int l = 0; l < res[2]; ++l) {
        double s = 0;
        for (const auto& [idx, c] : terms)
          s += (c * ta[i][idx.k + b.n1] * tb[j][idx.l + b.n2] * tc[l][idx.m + b.n3]).real();
        out[flat++] = s;
      }
  return out;
}

struct GridMin {
  double value = 0;
  Angle3 argmin;
};

/// Minimum of Re f over the uniform resolution^3 grid on [-pi,pi)^3. Ties
/// resolve to the lexicographically smallest grid index.
inline GridMin min_on_grid(const TrigPoly& p, int resolution) {
  if (resolution < 2) throw InputError("min_on_grid: resolution must be >= 2");
  if (!is_real_valued(p, 1e-12 * std::max(1.0, p.l1_norm()))) throw InputError("polynomial not real-valued");
  const std::array<int, 3> res{resolution, resolution, resolution};
  const auto v = grid_values(p, res);
  const auto best = std::min_element(v.begin(), v.end());  // first minimum = smallest flat index
  const auto flat = std::size_t(best - v.begin());
  const int i = int(flat / (std::size_t(resolution) * resolution));
  const int j = int((flat / resolution) % resolution);
  const int l = int(flat % resolution);
  return {*best, {grid_coordinate(i, resolution), grid_coordinate(j, resolution), grid_coordinate(l, resolution)}};
}

}  // namespace extpoly
