#pragma once

// Calderon transform: substitute
//
//   e^{ia} = (x+i)/(x-i),  e^{ib} = (y+i)/(y-i),  e^{ic} = (z+i)/(z-i)
//
// and clear denominators with (x^2+1)^N1 (y^2+1)^N2 (z^2+1)^N3. A monomial
// e^{ika} becomes (x+i)^(N1+k) (x-i)^(N1-k); those factors have Gaussian
// integer coefficients and are expanded exactly.

#include <cmath>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "polynomial.hpp"
#include "toeplitz.hpp"

namespace extpoly {

namespace detail {

struct GaussInt {
  std::int64_t re = 0;
  std::int64_t im = 0;
  friend GaussInt operator*(GaussInt a, GaussInt b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
  GaussInt& operator+=(GaussInt o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  cplx to_complex() const { return {double(re), double(im)}; }
};

using GaussPoly = std::vector<GaussInt>;  // ascending powers of x

inline GaussPoly gauss_mul(const GaussPoly& a, const GaussPoly& b) {
  GaussPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

/// (x+i)^p (x-i)^q
inline GaussPoly cayley_factor(int p, int q) {
  if (p < 0 || q < 0) throw InputError("cayley_factor: negative power");
  GaussPoly out{{1, 0}};
  const GaussPoly plus{{0, 1}, {1, 0}};
  const GaussPoly minus{{0, -1}, {1, 0}};
  for (int j = 0; j < p; ++j) out = gauss_mul(out, plus);
  for (int j = 0; j < q; ++j) out = gauss_mul(out, minus);
  return out;
}

struct ComplexPower {
  DegreeBox box;
  std::map<MultiIndex, cplx> coeffs;
};

inline void accumulate(ComplexPower& acc, cplx c, const GaussPoly& ux, const GaussPoly& uy, const GaussPoly& uz) {
  for (std::size_t a = 0; a < ux.size(); ++a)
    for (std::size_t b = 0; b < uy.size(); ++b) {
      const GaussInt xy = ux[a] * uy[b];
      for (std::size_t d = 0; d < uz.size(); ++d) {
        const GaussInt xyz = xy * uz[d];
        if (xyz.re == 0 && xyz.im == 0) continue;
        acc.coeffs[{int(a), int(b), int(d)}] += c * xyz.to_complex();
      }
    }
}

inline PowerPoly real_part_checked(const ComplexPower& p, double dust, const char* what) {
  double scale = 0;
  for (const auto& [i, c] : p.coeffs) scale = std::max(scale, std::abs(c));
  PowerPoly out(p.box);
  for (const auto& [i, c] : p.coeffs) {
    if (std::abs(c.imag()) > dust * std::max(1.0, scale))
      throw NumericalError(std::string(what) + ": imaginary part " + std::to_string(c.imag()) + " at " +
                           to_string(i));
    if (c.real() != 0.0) out.add(i, c.real());
  }
  return out;
}

}  // namespace detail

struct CalderonResult {
  PowerPoly power;
  double scale_hint = 0;  // max-abs coefficient of power
};

/// Image of a real-valued trigonometric polynomial on box (N1,N2,N3); the
/// result has exponent box (2N1,2N2,2N3).
inline CalderonResult calderon(const TrigPoly& f) {
  require_real(f);
  const auto& b = f.box();
  detail::ComplexPower acc{{2 * b.n1, 2 * b.n2, 2 * b.n3}, {}};
  for (const auto& [i, c] : f.coeffs())
    detail::accumulate(acc, c, detail::cayley_factor(b.n1 + i.k, b.n1 - i.k),
                       detail::cayley_factor(b.n2 + i.l, b.n2 - i.l), detail::cayley_factor(b.n3 + i.m, b.n3 - i.m));
  CalderonResult r{detail::real_part_checked(acc, 1e-9, "calderon"), 0.0};
  r.scale_hint = r.power.max_abs();
  return r;
}

/// Real and imaginary parts of G = F((x+i)/(x-i), ...) (x-i)^N1 (y-i)^N2 (z-i)^N3,
/// so that calderon(|F|^2) = re^2 + im^2.
struct CalderonFactor {
  PowerPoly re;
  PowerPoly im;
};

inline CalderonFactor calderon_factor(const AnalyticTrigPoly& F) {
  const auto& b = F.box();
  detail::ComplexPower acc{b, {}};
  for (const auto& [i, c] : F.coeffs())
    detail::accumulate(acc, c, detail::cayley_factor(i.k, b.n1 - i.k), detail::cayley_factor(i.l, b.n2 - i.l),
                       detail::cayley_factor(i.m, b.n3 - i.m));
  CalderonFactor out{PowerPoly(b), PowerPoly(b)};
  for (const auto& [i, c] : acc.coeffs) {
    if (c.real() != 0.0) out.re.add(i, c.real());
    if (c.imag() != 0.0) out.im.add(i, c.imag());
  }
  return out;
}

/// Image of each |F_j|^2, as re_j^2 + im_j^2 of its Calderon factor. The sum
/// of the outputs is calderon(sum_of_mod_squares(Fs)).
inline std::vector<PowerPoly> calderon_sos(std::span<const AnalyticTrigPoly> Fs) {
  std::vector<PowerPoly> out;
  out.reserve(Fs.size());
  for (const auto& F : Fs) {
    const auto g = calderon_factor(F);
    out.push_back(g.re * g.re + g.im * g.im);
  }
  return out;
}

struct Proportionality {
  bool is_prop = false;
  double ratio = 0;
};

/// p = ratio * q coefficientwise within tol * max|p|, with ratio read off the
/// coefficient where |q| is largest.
inline Proportionality proportional(const PowerPoly& p, const PowerPoly& q, double tol = 1e-9) {
  const double pmax = p.max_abs(), qmax = q.max_abs();
  if (pmax == 0.0 || qmax == 0.0) throw InputError("proportional: zero polynomial");
  MultiIndex at{};
  for (const auto& [i, c] : q.coeffs())
    if (std::abs(c) == qmax) {
      at = i;
      break;
    }
  Proportionality r{true, p.coeff(at) / q.coeff(at)};
  auto check = [&](const MultiIndex& i) {
    if (std::abs(p.coeff(i) - r.ratio * q.coeff(i)) > tol * pmax) r.is_prop = false;
  };
  for (const auto& [i, c] : p.coeffs()) check(i);
  for (const auto& [i, c] : q.coeffs()) check(i);
  return r;
}

}  // namespace extpoly
