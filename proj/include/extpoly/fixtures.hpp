#pragma once

// Reference data for the worked examples in box (1,1,1), stored as JSON so
// the CLI `reproduce` command and the test suites read the same values.

#include <array>
#include <string_view>
#include <vector>

#include "io.hpp"

namespace extpoly::fixtures {

// Lattice function whose Toeplitz matrix is [[E4, C1], [C1*, E4]] with
// B(0,0) = I, B(1,1) = [[0,1],[1,0]], B(-1,1) = [[0,1],[-1,0]].
inline constexpr std::string_view kExample1Phi = R"({"box":[1,1,1],"values":[
  {"idx":[0,0,0],"re":1,"im":0},
  {"idx":[0,0,1],"re":0,"im":0},
  {"idx":[0,1,-1],"re":0,"im":0},{"idx":[0,1,0],"re":0,"im":0},{"idx":[0,1,1],"re":0,"im":0},
  {"idx":[1,-1,-1],"re":1,"im":0},{"idx":[1,-1,0],"re":0,"im":0},{"idx":[1,-1,1],"re":1,"im":0},
  {"idx":[1,0,-1],"re":0,"im":0},{"idx":[1,0,0],"re":0,"im":0},{"idx":[1,0,1],"re":0,"im":0},
  {"idx":[1,1,-1],"re":-1,"im":0},{"idx":[1,1,0],"re":0,"im":0},{"idx":[1,1,1],"re":1,"im":0}]})";

// The printed kernel basis e_1..e_4 (flattened coefficient vectors).
inline constexpr std::array<std::array<double, 8>, 4> kExample1Kernel{{
    {0, 0, 0, 1, 1, 0, 0, 0},
    {0, 0, -1, 0, 0, 1, 0, 0},
    {0, -1, 0, 0, 0, 0, 1, 0},
    {-1, 0, 0, 0, 0, 0, 0, 1},
}};

// F_1 = e^{i(a+b)} + e^{ic},  F_2 = -e^{ib} + e^{i(a+c)},
// F_3 = -e^{ia} + e^{i(b+c)}, F_4 = -1 + e^{i(a+b+c)}
inline constexpr std::array<std::string_view, 4> kExample1F{
    R"({"kind":"analytic","box":[1,1,1],"coeffs":[{"idx":[1,1,0],"re":1,"im":0},{"idx":[0,0,1],"re":1,"im":0}]})",
    R"({"kind":"analytic","box":[1,1,1],"coeffs":[{"idx":[0,1,0],"re":-1,"im":0},{"idx":[1,0,1],"re":1,"im":0}]})",
    R"({"kind":"analytic","box":[1,1,1],"coeffs":[{"idx":[1,0,0],"re":-1,"im":0},{"idx":[0,1,1],"re":1,"im":0}]})",
    R"({"kind":"analytic","box":[1,1,1],"coeffs":[{"idx":[0,0,0],"re":-1,"im":0},{"idx":[1,1,1],"re":1,"im":0}]})",
};

// P_1 = (xyz - z + y + x)^2, P_2 = (yz - xz + xy + 1)^2,
// P_3 = (yz - xz - xy - 1)^2, P_4 = (xz + yz + xy - 1)^2, expanded.
inline constexpr std::array<std::string_view, 4> kPowerTargets{
    R"({"kind":"power","box":[2,2,2],"coeffs":[{"idx":[0,0,2],"re":1},{"idx":[0,1,1],"re":-2},{"idx":[0,2,0],"re":1},{"idx":[1,0,1],"re":-2},{"idx":[1,1,0],"re":2},{"idx":[1,1,2],"re":-2},{"idx":[1,2,1],"re":2},{"idx":[2,0,0],"re":1},{"idx":[2,1,1],"re":2},{"idx":[2,2,2],"re":1}]})",
    R"({"kind":"power","box":[2,2,2],"coeffs":[{"idx":[0,0,0],"re":1},{"idx":[0,1,1],"re":2},{"idx":[0,2,2],"re":1},{"idx":[1,0,1],"re":-2},{"idx":[1,1,0],"re":2},{"idx":[1,1,2],"re":-2},{"idx":[1,2,1],"re":2},{"idx":[2,0,2],"re":1},{"idx":[2,1,1],"re":-2},{"idx":[2,2,0],"re":1}]})",
    R"({"kind":"power","box":[2,2,2],"coeffs":[{"idx":[0,0,0],"re":1},{"idx":[0,1,1],"re":-2},{"idx":[0,2,2],"re":1},{"idx":[1,0,1],"re":2},{"idx":[1,1,0],"re":2},{"idx":[1,1,2],"re":-2},{"idx":[1,2,1],"re":-2},{"idx":[2,0,2],"re":1},{"idx":[2,1,1],"re":2},{"idx":[2,2,0],"re":1}]})",
    R"({"kind":"power","box":[2,2,2],"coeffs":[{"idx":[0,0,0],"re":1},{"idx":[0,1,1],"re":-2},{"idx":[0,2,2],"re":1},{"idx":[1,0,1],"re":-2},{"idx":[1,1,0],"re":-2},{"idx":[1,1,2],"re":2},{"idx":[1,2,1],"re":2},{"idx":[2,0,2],"re":1},{"idx":[2,1,1],"re":2},{"idx":[2,2,0],"re":1}]})",
};

// f0 = 4 - cos(a+b+c) - cos(-a+b+c) - cos(a-b+c) + cos(a+b-c)
inline constexpr std::string_view kF0 = R"({"kind":"trig","box":[1,1,1],"coeffs":[
  {"idx":[0,0,0],"re":4,"im":0},
  {"idx":[1,1,1],"re":-0.5,"im":0},{"idx":[-1,-1,-1],"re":-0.5,"im":0},
  {"idx":[-1,1,1],"re":-0.5,"im":0},{"idx":[1,-1,-1],"re":-0.5,"im":0},
  {"idx":[1,-1,1],"re":-0.5,"im":0},{"idx":[-1,1,-1],"re":-0.5,"im":0},
  {"idx":[1,1,-1],"re":0.5,"im":0},{"idx":[-1,-1,1],"re":0.5,"im":0}]})";

// The same cosine combination with constant 2^{3/2}; its minimum is 0.
inline constexpr std::string_view kExtremalSigma = R"({"kind":"trig","box":[1,1,1],"coeffs":[
  {"idx":[0,0,0],"re":2.8284271247461903,"im":0},
  {"idx":[1,1,1],"re":-0.5,"im":0},{"idx":[-1,-1,-1],"re":-0.5,"im":0},
  {"idx":[-1,1,1],"re":-0.5,"im":0},{"idx":[1,-1,-1],"re":-0.5,"im":0},
  {"idx":[1,-1,1],"re":-0.5,"im":0},{"idx":[-1,1,-1],"re":-0.5,"im":0},
  {"idx":[1,1,-1],"re":0.5,"im":0},{"idx":[-1,-1,1],"re":0.5,"im":0}]})";

// 2^{3/2}(1+x^2)(1+y^2)(1+z^2) + 8z(y+x)(yx-1) - 2(z^2-1)[(yx+1)^2 - (x-y)^2], expanded.
inline constexpr std::string_view kExtremalSigmaPower = R"({"kind":"power","box":[2,2,2],"coeffs":[
  {"idx":[0,0,0],"re":4.82842712474619},{"idx":[0,0,2],"re":0.8284271247461903},
  {"idx":[0,1,1],"re":-8},{"idx":[0,2,0],"re":0.8284271247461903},{"idx":[0,2,2],"re":4.82842712474619},
  {"idx":[1,0,1],"re":-8},{"idx":[1,1,0],"re":8},{"idx":[1,1,2],"re":-8},{"idx":[1,2,1],"re":8},
  {"idx":[2,0,0],"re":0.8284271247461903},{"idx":[2,0,2],"re":4.82842712474619},{"idx":[2,1,1],"re":8},
  {"idx":[2,2,0],"re":4.82842712474619},{"idx":[2,2,2],"re":0.8284271247461903}]})";

inline PhiTable example1_phi() { return io::phi_from_json(io::json::parse(kExample1Phi)); }

inline std::vector<CVector> example1_kernel() {
  std::vector<CVector> out;
  for (const auto& e : kExample1Kernel) {
    CVector v(8);
    for (int j = 0; j < 8; ++j) v[j] = e[j];
    out.push_back(v);
  }
  return out;
}

/// k in 1..4
inline AnalyticTrigPoly example1_F(int k) { return io::analytic_from_json(io::json::parse(kExample1F.at(k - 1))); }
inline PowerPoly power_target(int k) { return io::power_from_json(io::json::parse(kPowerTargets.at(k - 1))); }
inline TrigPoly f0() { return io::trig_from_json(io::json::parse(kF0)); }
inline TrigPoly extremal_sigma() { return io::trig_from_json(io::json::parse(kExtremalSigma)); }
inline PowerPoly extremal_sigma_power() { return io::power_from_json(io::json::parse(kExtremalSigmaPower)); }

}  // namespace extpoly::fixtures
