#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "madelung/fisheye.hpp"
#include "madelung/gegenbauer.hpp"
#include "madelung/swscan.hpp"

using namespace madelung;
using namespace madelung::spectra;

TEST(Fisheye, UnitRadiusValue) {
  // r = a, gamma = 1, n0 = 2: denominator is 2, so V = -1
  EXPECT_DOUBLE_EQ(fisheye_potential(1.0, FisheyeParams(1.0, 2.0, 1.0)), -1.0);
}

TEST(Fisheye, GammaOneIsMaxwellShape) {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> r_dist(0.01, 20.0);
  const FisheyeParams p(1.7, 0.9, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const double r = r_dist(rng);
    const double x2 = (r / p.a) * (r / p.a);
    const double maxwell = -p.n0 * p.n0 / ((1.0 + x2) * (1.0 + x2));
    EXPECT_NEAR(fisheye_potential(r, p), maxwell, 1e-14 * std::abs(maxwell));
  }
}

TEST(Fisheye, StrictlyNegative) {
  const FisheyeParams p(0.5, 3.0, 0.5);
  for (double r : {1e-3, 0.1, 1.0, 7.0, 1e3})
    EXPECT_LT(fisheye_potential(r, p), 0.0);
}

TEST(Fisheye, DomainErrors) {
  EXPECT_THROW(fisheye_potential(0.0, FisheyeParams(1, 1, 1)), DomainError);
  EXPECT_THROW(fisheye_potential(-1.0, FisheyeParams(1, 1, 1)), DomainError);
  EXPECT_THROW(FisheyeParams(0.0, 1.0, 1.0), DomainError);
  EXPECT_THROW(FisheyeParams(1.0, -1.0, 1.0), DomainError);
}

TEST(CoulombToFisheye, HydrogenGroundState) {
  EXPECT_DOUBLE_EQ(coulomb_to_fisheye(1, -0.5), 4.0);
}

TEST(CoulombToFisheye, ChargeScalingAndPositivity) {
  for (double e : {-0.5, -0.125, -2.0}) {
    const double base = coulomb_to_fisheye(1, e);
    EXPECT_GT(base, 0.0);
    EXPECT_DOUBLE_EQ(coulomb_to_fisheye(3, e), 9.0 * base);
  }
  EXPECT_THROW(coulomb_to_fisheye(1, 0.0), DomainError);
}

TEST(Gegenbauer, ConstantEigenfunction) {
  EXPECT_DOUBLE_EQ(gegenbauer_residual(0, 0, 32), 0.0);
}

TEST(Gegenbauer, LinearEigenfunction) {
  // F = 2x: -(3x)(2) + 3(2x) = 0 pointwise
  EXPECT_LE(gegenbauer_residual(1, 0, 32), 1e-14);
}

TEST(Gegenbauer, LowDegreeResiduals) {
  for (int n = 0; n <= 10; ++n)
    for (int l = 0; l <= 10; ++l)
      EXPECT_LE(gegenbauer_residual(n, l, 64), 1e-10)
          << "n=" << n << " l=" << l;
}

TEST(Gegenbauer, WrongEigenvalueHasLargeResidual) {
  // shifting the eigenvalue by hand must break the identity: compare the
  // n=2 polynomial against the n=3 eigenvalue slot through the public API
  // by checking that residuals are tiny only at the correct (n, l)
  const auto f = gegenbauer_coefficients(2, 1.0);
  const auto fp = polynomial_derivative(f);
  const auto fpp = polynomial_derivative(fp);
  const double wrong_eigenvalue = 17.0; // correct one is (2+0+1)^2 - 1 = 8
  double residual = 0.0;
  for (double x : {-0.7, -0.2, 0.3, 0.8}) {
    const double r = (1 - x * x) * polynomial_eval(fpp, x) -
                     3.0 * x * polynomial_eval(fp, x) +
                     wrong_eigenvalue * polynomial_eval(f, x);
    residual = std::max(residual, std::abs(r));
  }
  EXPECT_GT(residual, 1.0);
}

TEST(Gegenbauer, InputValidation) {
  EXPECT_THROW(gegenbauer_residual(-1, 0, 32), DomainError);
  EXPECT_THROW(gegenbauer_residual(0, 31, 32), DomainError);
  EXPECT_THROW(gegenbauer_residual(2, 2, 9), DomainError);
}

TEST(GaussLegendre, IntegratesPolynomialsExactly) {
  const GaussLegendre gl(16);
  double integral = 0.0;
  for (int i = 0; i < 16; ++i)
    integral += gl.weights[i] * std::pow(gl.nodes[i], 8);
  EXPECT_NEAR(integral, 2.0 / 9.0, 1e-14); // int_{-1}^{1} x^8 dx
}

TEST(SwScan, AlphaZeroIsChargeIndependent) {
  const auto entries = sw_discreteness_scan(1, 1, -2, 120, 0.0);
  ASSERT_EQ(entries.size(), 120u);
  const double first = entries.front().margin;
  for (const auto &e : entries) {
    EXPECT_TRUE(e.defined);
    EXPECT_NEAR(e.margin, first, 1e-10);
  }
  EXPECT_TRUE(sign_changes(entries).empty());
}

TEST(SwScan, MarginDecreasesWithCharge) {
  const auto entries = sw_discreteness_scan(0, 0, -1, 137);
  for (std::size_t i = 1; i < entries.size(); ++i)
    EXPECT_LT(entries[i].margin, entries[i - 1].margin);
}

TEST(SwScan, SignChangeSetIsFiniteAndSmall) {
  // the ground-state margin crosses zero close to the supercritical edge
  const auto entries = sw_discreteness_scan(0, 0, -1, 137);
  const auto changes = sign_changes(entries);
  ASSERT_EQ(changes.size(), 1u);
  EXPECT_GT(changes.front(), 120);
  EXPECT_LE(changes.front(), 137);
}

TEST(SwScan, SupercriticalEntriesUndefined) {
  // with an inflated coupling, large Z turns supercritical for kappa = -1
  const double alpha = 0.01;
  const auto entries = sw_discreteness_scan(0, 0, -1, 137, alpha);
  int undefined = 0;
  for (const auto &e : entries) {
    if (!e.defined)
      ++undefined;
    EXPECT_EQ(e.defined, alpha * e.z < 1.0);
  }
  EXPECT_GT(undefined, 0);
}

TEST(SwScan, InputValidation) {
  EXPECT_THROW(sw_discreteness_scan(0, 0, -1, 138), DomainError);
  EXPECT_THROW(sw_discreteness_scan(0, 0, 0, 100), DomainError);
  EXPECT_THROW(sw_discreteness_scan(-1, 0, -1, 100), DomainError);
}
