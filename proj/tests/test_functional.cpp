#include <gtest/gtest.h>

#include <numbers>

#include "properties.hpp"

using namespace extpoly;
using namespace extpoly::testing;

namespace {
const DegreeBox kBox111{1, 1, 1};
}

TEST(AtomicMeasure, ValidatesAndNormalizes) {
  AtomicMeasure mu;
  EXPECT_THROW(mu.add({0, 0, 0}, 0.0), InputError);
  EXPECT_THROW(mu.add({0, 0, 0}, -1.0), InputError);
  mu.add({4.0, -4.0, 7.0}, 2.0);
  const auto& a = mu.atoms().front();
  for (double t : a.point.as_array()) {
    EXPECT_GE(t, -std::numbers::pi);
    EXPECT_LT(t, std::numbers::pi);
  }
  EXPECT_NEAR(mu.normalized().total_weight(), kTwoPiCubed, 1e-12);
}

TEST(Lf, ConstantPicksOrigin) {
  std::mt19937 rng(kSeed);
  for (int t = 0; t < 20; ++t) {
    const auto phi = phi_from_measure(random_measure(rng), kBox111);
    const double c = uniform(rng, -5, 5);
    EXPECT_NEAR(std::abs(lf(phi, TrigPoly::constant(kBox111, c)) - c * phi({})), 0.0, 1e-14 * (1 + std::abs(c)));
  }
}

TEST(Lf, Example1OnF0IsZero) { EXPECT_NEAR(std::abs(lf(fixtures::example1_phi(), fixtures::f0())), 0.0, 1e-15); }

TEST(Lf, Example1OnF0MinusM) {
  for (double m : {-2.0, 0.1, 0.5, 1.0, 1.17}) {
    const cplx v = lf(fixtures::example1_phi(), fixtures::f0() - TrigPoly::constant(kBox111, m));
    EXPECT_NEAR(v.real(), -m, 1e-12);
    EXPECT_NEAR(v.imag(), 0.0, 1e-12);
  }
}

TEST(Lf, BoxOverflowIsAnError) {
  const TrigPoly big = TrigPoly::constant({2, 0, 0}, 1.0);
  EXPECT_THROW(lf(PhiTable::delta(kBox111), big), InputError);
  // a smaller box is fine
  EXPECT_NEAR(lf(fixtures::example1_phi(), TrigPoly::constant({0, 0, 0}, 3.0)).real(), 3.0, 0.0);
}

TEST(Lf, RealForRealPolynomials) {
  std::mt19937 rng(kSeed);
  for (int t = 0; t < 50; ++t) {
    const DegreeBox b = random_box(rng, 2);
    const auto f = random_real_trig(rng, b);
    EXPECT_LE(std::abs(lf(phi_from_measure(random_measure(rng), b), f).imag()), 1e-10 * (1 + f.l1_norm()));
  }
}

TEST(LfQuadratic, Examples) {
  const auto phi = fixtures::example1_phi();
  EXPECT_NEAR(lf_quadratic(phi, fixtures::example1_F(1)), 0.0, 1e-15);
  EXPECT_NEAR(lf_quadratic(phi, AnalyticTrigPoly(kBox111, {{MultiIndex{}, cplx(1)}})), 1.0, 1e-15);

  std::mt19937 rng(kSeed);
  for (int t = 0; t < 20; ++t) {
    const auto F = random_analytic(rng, kBox111);
    double s = 0;
    for (const auto& [i, c] : F.coeffs()) s += std::norm(c);
    EXPECT_NEAR(lf_quadratic(PhiTable::delta(kBox111), F), s, 1e-12 * s);
  }
}

TEST(LfQuadratic, EachFactorOfExample1IsInTheKernel) {
  for (int k = 1; k <= 4; ++k) {
    EXPECT_NEAR(lf_quadratic(fixtures::example1_phi(), fixtures::example1_F(k)), 0.0, 1e-10);
    EXPECT_NEAR(std::abs(lf(fixtures::example1_phi(), mod_square(fixtures::example1_F(k)))), 0.0, 1e-10);
  }
}

TEST(LfQuadratic, BoxMismatchIsAnError) {
  EXPECT_THROW(lf_quadratic(PhiTable::delta(kBox111), AnalyticTrigPoly({1, 0, 0})), InputError);
}

TEST(PhiFromMeasure, UnitMassAtOrigin) {
  AtomicMeasure mu;
  mu.add({0, 0, 0}, kTwoPiCubed);
  const auto phi = phi_from_measure(mu, kBox111);
  for (const auto& i : symmetric_indices(kBox111)) EXPECT_NEAR(std::abs(phi(i) - cplx(1)), 0.0, 1e-15);
}

TEST(PhiFromMeasure, TwoSymmetricAtoms) {
  const double pi = std::numbers::pi;
  AtomicMeasure mu;
  mu.add({pi / 2, 0, 0}, kTwoPiCubed / 2).add({-pi / 2, 0, 0}, kTwoPiCubed / 2);
  const DegreeBox b{2, 1, 1};
  const auto phi = phi_from_measure(mu, b);
  for (const auto& i : symmetric_indices(b)) {
    const double want = std::cos(i.k * pi / 2);
    EXPECT_NEAR(std::abs(phi(i) - cplx(want)), 0.0, 1e-15) << to_string(i);
  }
  EXPECT_NEAR(phi({1, 0, 0}).real(), 0.0, 1e-15);
  EXPECT_NEAR(phi({2, 0, 0}).real(), -1.0, 1e-15);
}

TEST(PhiFromMeasure, AtomsAtZerosSupportTheExtremalPolynomial) {
  const auto f = fixtures::extremal_sigma();
  AtomicMeasure mu;
  for (const auto& z : find_zeros(f)) mu.add(z.point, kTwoPiCubed / 8);
  const auto phi = phi_from_measure(mu, kBox111);
  EXPECT_NEAR(std::abs(lf(phi, f)), 0.0, 1e-9);
  EXPECT_TRUE(is_psd(build_matrix(phi)).psd);
}

TEST(PhiFromMeasure, EmptyMeasureIsAnError) { EXPECT_THROW(phi_from_measure(AtomicMeasure{}, kBox111), InputError); }

TEST(LfViaMeasure, Examples) {
  std::mt19937 rng(kSeed);
  // nonnegative f gives nonnegative values
  for (int t = 0; t < 20; ++t) EXPECT_GE(lf_via_measure(random_measure(rng), random_sos(rng, kBox111)), -1e-9);

  const auto zeros = find_zeros(fixtures::extremal_sigma());
  ASSERT_FALSE(zeros.empty());
  AtomicMeasure one;
  one.add(zeros.front().point, 3.0);
  const double want = eval_trig(fixtures::f0(), zeros.front().point).real() * 3.0 / kTwoPiCubed;
  EXPECT_NEAR(lf_via_measure(one, fixtures::f0()), want, 1e-14);
  EXPECT_GE(want, 0.0);

  AtomicMeasure split;
  split.add({0.1, 0.2, 0.3}, kTwoPiCubed / 4).add({-1, 2, -3}, 3 * kTwoPiCubed / 4);
  EXPECT_NEAR(lf_via_measure(split, TrigPoly::constant(kBox111, 1.0)), 1.0, 1e-14);
}

TEST(LfViaMeasure, RejectsComplexPolynomials) {
  AtomicMeasure mu;
  mu.add({0, 0, 0}, 1.0);
  EXPECT_THROW(lf_via_measure(mu, TrigPoly(kBox111).add({1, 0, 0}, 1.0)), InputError);
}

TEST(FunctionalProperties, AllHold) {
  for (const auto& p : functional_properties()) {
    const auto r = run_property(p);
    EXPECT_TRUE(r.ok) << p.name << ": " << r.failure;
  }
}
