#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "madelung/fock.hpp"
#include "madelung/pairing.hpp"

using namespace madelung;
using namespace madelung::pairing;

namespace {

PairingModel two_level_half() { return PairingModel({{0.0, 1}, {1.0, 1}}, 0.5); }

//! The models used for the randomized oracle sweep: spacings >= 0.5 and
//! couplings well below the first critical value.
PairingModel random_model(std::mt19937 &rng) {
  std::uniform_int_distribution<int> n_levels_dist(1, 4);
  std::uniform_int_distribution<int> omega_dist(1, 2);
  std::uniform_real_distribution<double> jitter(0.0, 0.15);
  std::uniform_real_distribution<double> g_dist(0.02, 0.12);
  const int n_levels = n_levels_dist(rng);
  std::vector<Level> levels;
  int capacity = 0;
  double eps = jitter(rng);
  for (int i = 0; i < n_levels && capacity < 6; ++i) {
    const int omega = std::min(omega_dist(rng), 6 - capacity);
    levels.push_back({eps, omega});
    capacity += omega;
    eps += 0.5 + jitter(rng);
  }
  return PairingModel(levels, g_dist(rng));
}

} // namespace

TEST(PairingModel, Validation) {
  EXPECT_THROW(PairingModel({}, 0.1), DomainError);
  EXPECT_THROW(PairingModel({{0.0, 0}}, 0.1), DomainError);
  EXPECT_THROW(PairingModel({{0.0, 1}}, -0.1), DomainError);
  EXPECT_EQ(PairingModel({{0.0, 2}, {1.0, 3}}, 0.1).pair_capacity(), 5);
}

TEST(Cooper, QuadraticRootCase) {
  // clearing denominators of 1/(-E) + 1/(2-E) = 2 gives E^2 - E - 1 = 0
  EXPECT_NEAR(cooper_pair_energy(two_level_half()),
              (1.0 - std::sqrt(5.0)) / 2.0, 1e-9);
}

TEST(Cooper, MatchesExactDiagonalization) {
  std::mt19937 rng(5150);
  for (int trial = 0; trial < 25; ++trial) {
    const auto model = random_model(rng);
    EXPECT_NEAR(cooper_pair_energy(model),
                fock::exact_ground_state(model, 1).energy, 1e-10);
  }
}

TEST(Cooper, WeakCouplingApproachesThreshold) {
  const double e_min = 0.3;
  double prev = -1e9;
  for (double g : {1e-2, 1e-3, 1e-4}) {
    const PairingModel model({{e_min, 1}, {1.0, 1}}, g);
    const double e = cooper_pair_energy(model);
    EXPECT_LT(e, 2.0 * e_min);
    EXPECT_GT(e, prev); // E -> 2 e_min from below as g -> 0+
    prev = e;
  }
  EXPECT_NEAR(prev, 2.0 * e_min, 1e-3);
}

TEST(Cooper, ZeroCouplingRejected) {
  EXPECT_THROW(cooper_pair_energy(PairingModel({{0.0, 1}}, 0.0)), DomainError);
}

TEST(Richardson, SinglePairReducesToCooper) {
  const auto model = two_level_half();
  const auto sol = richardson_solve(model, 1);
  ASSERT_EQ(sol.pair_energies.size(), 1u);
  EXPECT_NEAR(sol.total_energy, cooper_pair_energy(model), 1e-10);
  EXPECT_LE(sol.residual, 1e-10);
}

TEST(Richardson, WeakCouplingSeeds) {
  const PairingModel model({{0.1, 1}, {0.7, 1}, {1.3, 1}}, 1e-6);
  const auto sol = richardson_solve(model, 2);
  ASSERT_EQ(sol.pair_energies.size(), 2u);
  // E_i -> 2 eps_i as g -> 0
  EXPECT_NEAR(sol.pair_energies[0].real(), 0.2, 1e-4);
  EXPECT_NEAR(sol.pair_energies[1].real(), 1.4, 1e-4);
}

TEST(Richardson, OracleEquivalenceSweep) {
  std::mt19937 rng(190721);
  for (int trial = 0; trial < 100; ++trial) {
    const auto model = random_model(rng);
    std::uniform_int_distribution<int> pairs_dist(
        1, std::min(3, model.pair_capacity()));
    const int n_pairs = pairs_dist(rng);
    const auto sol = richardson_solve(model, n_pairs);
    const auto oracle = fock::exact_ground_state(model, n_pairs);
    EXPECT_NEAR(sol.total_energy, oracle.energy,
                1e-8 * std::max(1.0, std::abs(oracle.energy)))
        << "trial " << trial;
    EXPECT_LE(sol.residual, 1e-10) << "trial " << trial;
    EXPECT_LE(sol.imag_defect, 1e-10) << "trial " << trial;
    EXPECT_LE(sol.conjugation_defect, 1e-10) << "trial " << trial;
  }
}

TEST(Richardson, FullShellIsExactlySolvable) {
  // both levels filled: H gives sum 2 eps - 2 g independent of details
  const PairingModel model({{0.0, 1}, {1.0, 1}}, 0.13);
  const auto sol = richardson_solve(model, 2);
  EXPECT_NEAR(sol.total_energy, 2.0 - 2.0 * 0.13, 1e-10);
}

TEST(Richardson, DegenerateLevelConjugatePair) {
  // two pairs on one Omega = 2 level: the roots leave the real axis but
  // stay conjugation-symmetric, and the total matches the oracle
  const PairingModel model({{0.5, 2}}, 0.2);
  const auto sol = richardson_solve(model, 2);
  ASSERT_EQ(sol.pair_energies.size(), 2u);
  EXPECT_LE(sol.conjugation_defect, 1e-10);
  EXPECT_NEAR(sol.total_energy, fock::exact_ground_state(model, 2).energy,
              1e-9);
}

TEST(Richardson, PoleAvoidance) {
  std::mt19937 rng(33);
  for (int trial = 0; trial < 20; ++trial) {
    const auto model = random_model(rng);
    const int n_pairs = std::min(2, model.pair_capacity());
    const auto sol = richardson_solve(model, n_pairs);
    for (const auto &e : sol.pair_energies)
      for (const auto &lv : model.levels)
        EXPECT_GT(std::abs(e - 2.0 * lv.epsilon), 1e-12);
  }
}

TEST(Richardson, InputValidation) {
  const auto model = two_level_half();
  EXPECT_THROW(richardson_solve(model, 0), DomainError);
  EXPECT_THROW(richardson_solve(model, 3), DomainError);
}

TEST(RichardsonResidual, ConvergedSolutionIsTiny) {
  const auto model = two_level_half();
  const auto sol = richardson_solve(model, 1);
  EXPECT_LE(richardson_residual(model, sol), 1e-10);
}

TEST(RichardsonResidual, SensitiveToPerturbation) {
  const auto model = two_level_half();
  auto sol = richardson_solve(model, 1);
  sol.pair_energies[0] += 1e-3;
  EXPECT_GT(richardson_residual(model, sol), 1e-4);
}

TEST(RichardsonResidual, SinglePairEqualsCooperResidual) {
  const auto model = two_level_half();
  RichardsonSolution sol;
  sol.pair_energies = {Complex(-0.6, 0.0)};
  const double expected =
      std::abs(cooper_function(model, -0.6) - 1.0 / model.g);
  EXPECT_DOUBLE_EQ(richardson_residual(model, sol), expected);
}

TEST(RichardsonResidual, PoleCollisionIsInfinite) {
  const auto model = two_level_half();
  RichardsonSolution sol;
  sol.pair_energies = {Complex(0.0, 0.0)}; // exactly on the 2 eps_0 pole
  EXPECT_TRUE(std::isinf(richardson_residual(model, sol)));
}

TEST(BcsQuasiparticle, PythagoreanAndEdgeCases) {
  EXPECT_DOUBLE_EQ(bcs_quasiparticle(3.0, 4.0), 5.0);
  EXPECT_DOUBLE_EQ(bcs_quasiparticle(-2.5, 0.0), 2.5);
  EXPECT_DOUBLE_EQ(bcs_quasiparticle(0.0, 1.5), 1.5);
}

TEST(Bdg, PythagoreanEigenvalues) {
  const auto eig = bdg_eigen({3.0, 4.0});
  EXPECT_DOUBLE_EQ(eig.e_plus, 5.0);
  EXPECT_DOUBLE_EQ(eig.e_minus, -5.0);
}

TEST(Bdg, SymmetricMixingEigenvector) {
  const auto eig = bdg_eigen({0.0, 1.0});
  EXPECT_DOUBLE_EQ(eig.e_plus, 1.0);
  EXPECT_NEAR(eig.u, 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(eig.v, -1.0 / std::sqrt(2.0), 1e-15);
}

TEST(Bdg, DecoupledBlock) {
  const auto positive = bdg_eigen({2.0, 0.0});
  EXPECT_DOUBLE_EQ(positive.e_plus, 2.0);
  EXPECT_DOUBLE_EQ(positive.u, 1.0);
  EXPECT_DOUBLE_EQ(positive.v, 0.0);
  const auto negative = bdg_eigen({-2.0, 0.0});
  EXPECT_DOUBLE_EQ(negative.e_plus, 2.0);
  EXPECT_DOUBLE_EQ(negative.u, 0.0);
  EXPECT_DOUBLE_EQ(negative.v, 1.0);
}

TEST(Bdg, EigenEquationAndNormalization) {
  std::mt19937 rng(8);
  std::uniform_real_distribution<double> val(-5.0, 5.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const BdGBlock block{val(rng), val(rng)};
    const auto eig = bdg_eigen(block);
    EXPECT_LE(std::abs(block.epsilon * eig.u - block.delta * eig.v -
                       eig.e_plus * eig.u),
              1e-12);
    EXPECT_LE(std::abs(-block.delta * eig.u - block.epsilon * eig.v -
                       eig.e_plus * eig.v),
              1e-12);
    EXPECT_LE(std::abs(eig.u * eig.u + eig.v * eig.v - 1.0), 1e-14);
    EXPECT_GE(eig.u, 0.0);
    // spectrum depends on R^2 only
    EXPECT_DOUBLE_EQ(bdg_eigen({block.epsilon, -block.delta}).e_plus,
                     eig.e_plus);
  }
}

TEST(Bdg, MatchesQuasiparticleEnergy) {
  for (double eps : {-1.0, 0.0, 2.5})
    for (double delta : {0.0, 0.4, 3.0})
      EXPECT_DOUBLE_EQ(bdg_eigen({eps, delta}).e_plus,
                       bcs_quasiparticle(eps, delta));
}

TEST(Gap, SingleLevelClosedForm) {
  // 1 = g / (2 Delta) at eps = mu: Delta = g / 2
  const PairingModel model({{0.0, 1}}, 0.8);
  EXPECT_NEAR(gap_self_consistent(model), 0.4, 1e-12);
}

TEST(Gap, BelowThresholdIsNormalState) {
  // two levels split by 1: the Delta -> 0+ bound is g * 2 / 1, so any
  // g < 0.5 has no positive solution
  const PairingModel model({{0.0, 1}, {1.0, 1}}, 0.2);
  EXPECT_DOUBLE_EQ(gap_self_consistent(model), 0.0);
}

TEST(Gap, AboveThresholdOpensGap) {
  const PairingModel model({{0.0, 1}, {1.0, 1}}, 0.8);
  const double delta = gap_self_consistent(model);
  EXPECT_GT(delta, 0.0);
  // self-consistency: 1 = g * 2 / (2 sqrt(0.25 + Delta^2))
  EXPECT_NEAR(delta, std::sqrt(0.8 * 0.8 - 0.25), 1e-10);
}

TEST(Gap, MonotoneInCoupling) {
  double prev = 0.0;
  for (double g : {0.6, 0.8, 1.0, 1.4}) {
    const PairingModel model({{0.0, 1}, {1.0, 1}}, g);
    const double delta = gap_self_consistent(model);
    EXPECT_GE(delta, prev);
    prev = delta;
  }
}

TEST(Gap, ZeroCouplingIsNormalState) {
  EXPECT_DOUBLE_EQ(gap_self_consistent(PairingModel({{0.0, 1}}, 0.0)), 0.0);
}
