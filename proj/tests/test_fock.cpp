#include <gtest/gtest.h>

#include <chrono>
#include <cmath>
#include <random>

#include "madelung/fock.hpp"

using namespace madelung;
using namespace madelung::fock;
using madelung::pairing::Level;
using madelung::pairing::PairingModel;

TEST(FockSpace, Dimensions) {
  EXPECT_EQ(FockSpace(1).dimension(), 4);
  EXPECT_EQ(FockSpace(2).dimension(), 16);
  EXPECT_EQ(FockSpace(6).dimension(), 4096);
  EXPECT_THROW(FockSpace(0), DomainError);
  EXPECT_THROW(FockSpace(13), DomainError);
}

TEST(FockSpace, ModeOrdering) {
  const FockSpace space(3);
  EXPECT_EQ(space.mode(0, Spin::Plus), 0);
  EXPECT_EQ(space.mode(0, Spin::Minus), 1);
  EXPECT_EQ(space.mode(2, Spin::Plus), 4);
  EXPECT_THROW(space.mode(3, Spin::Plus), DomainError);
}

TEST(FockSpace, LargeSpaceConstructsQuickly) {
  const auto start = std::chrono::steady_clock::now();
  const FockSpace space(6);
  const auto a = annihilation_mode(space, 7);
  const auto elapsed = std::chrono::duration<double>(
      std::chrono::steady_clock::now() - start);
  EXPECT_EQ(a.cols(), 4096);
  EXPECT_LT(elapsed.count(), 1.0);
}

TEST(Car, NumberAnticommutatorIsIdentity) {
  const FockSpace space(1);
  const auto a = annihilation(space, 0, Spin::Plus);
  const SparseMatrix adag(a.transpose());
  const SparseMatrix sum(anticommutator(a, adag) - identity(space));
  EXPECT_EQ(max_abs(sum), 0.0);
}

TEST(Car, Nilpotency) {
  const FockSpace space(2);
  for (int m = 0; m < space.n_modes(); ++m) {
    const auto a = annihilation_mode(space, m);
    EXPECT_EQ(max_abs(SparseMatrix(a * a)), 0.0);
  }
}

TEST(Car, AllCrossAnticommutatorsVanish) {
  const FockSpace space(3);
  std::vector<SparseMatrix> a;
  for (int m = 0; m < space.n_modes(); ++m)
    a.push_back(annihilation_mode(space, m));
  const auto id = identity(space);
  for (int i = 0; i < space.n_modes(); ++i)
    for (int j = 0; j < space.n_modes(); ++j) {
      EXPECT_EQ(max_abs(anticommutator(a[i], a[j])), 0.0);
      const SparseMatrix adag_j(a[j].transpose());
      const SparseMatrix mixed(anticommutator(a[i], adag_j) -
                               (i == j ? 1.0 : 0.0) * id);
      EXPECT_EQ(max_abs(mixed), 0.0);
    }
}

TEST(Car, EntriesAreSigns) {
  const FockSpace space(3);
  for (int m = 0; m < space.n_modes(); ++m) {
    const auto a = annihilation_mode(space, m);
    for (int k = 0; k < a.outerSize(); ++k)
      for (SparseMatrix::InnerIterator it(a, k); it; ++it)
        EXPECT_EQ(std::abs(it.value()), 1.0);
  }
}

TEST(Clifford, SingleModeRelations) {
  const FockSpace space(1);
  const auto cliff = clifford_operators(space);
  const auto id = identity(space);
  // {e, e} = -2, {e+, e+} = +2, {e, e+} = 0
  EXPECT_EQ(max_abs(SparseMatrix(
                anticommutator(cliff[0].first, cliff[0].first) + 2.0 * id)),
            0.0);
  EXPECT_EQ(max_abs(SparseMatrix(
                anticommutator(cliff[0].second, cliff[0].second) - 2.0 * id)),
            0.0);
  EXPECT_EQ(max_abs(anticommutator(cliff[0].first, cliff[0].second)), 0.0);
}

TEST(Clifford, CrossModeMixedRelationVanishes) {
  const FockSpace space(1);
  const auto cliff = clifford_operators(space);
  EXPECT_EQ(max_abs(anticommutator(cliff[0].first, cliff[1].second)), 0.0);
}

TEST(Clifford, MixedSignatureAlgebra) {
  // with E(e_j) realized as e_j+ and c(e_i) as e_i the two Clifford factors
  // close with opposite signatures; in the Fock realization the mixed
  // products anticommute ({e_i, e_j+} = 0) rather than commute
  const FockSpace space(2);
  const auto cliff = clifford_operators(space);
  const auto id = identity(space);
  for (std::size_t i = 0; i < cliff.size(); ++i)
    for (std::size_t j = 0; j < cliff.size(); ++j) {
      const double delta = i == j ? 2.0 : 0.0;
      EXPECT_EQ(max_abs(SparseMatrix(
                    anticommutator(cliff[i].second, cliff[j].second) - delta * id)),
                0.0);
      EXPECT_EQ(max_abs(SparseMatrix(
                    anticommutator(cliff[i].first, cliff[j].first) + delta * id)),
                0.0);
      EXPECT_EQ(max_abs(anticommutator(cliff[i].first, cliff[j].second)), 0.0);
    }
}

TEST(Hamiltonian, DiagonalAtZeroCoupling) {
  const PairingModel model({{0.25, 1}, {1.5, 1}}, 0.0);
  const FockSpace space(2);
  const Eigen::MatrixXd h(pairing_hamiltonian(space, model));
  for (int i = 0; i < h.rows(); ++i)
    for (int j = 0; j < h.cols(); ++j)
      if (i != j)
        EXPECT_EQ(h(i, j), 0.0);
  // doubly occupied level f contributes 2 eps_f
  const int both_on_level0 = 0b0011;
  EXPECT_DOUBLE_EQ(h(both_on_level0, both_on_level0), 0.5);
}

TEST(Hamiltonian, SeniorityZeroBlockMatchesHandValue) {
  // L=2, eps = {0, 1}, g = 0.5 in the pair basis: [[-0.5, -0.5], [-0.5, 1.5]]
  const auto h = pair_sector_matrix({0.0, 1.0}, 0.5, 1);
  ASSERT_EQ(h.rows(), 2);
  EXPECT_DOUBLE_EQ(h(0, 0), -0.5);
  EXPECT_DOUBLE_EQ(h(0, 1), -0.5);
  EXPECT_DOUBLE_EQ(h(1, 0), -0.5);
  EXPECT_DOUBLE_EQ(h(1, 1), 1.5);
}

TEST(Hamiltonian, Hermitian) {
  const PairingModel model({{0.0, 1}, {0.7, 2}}, 0.3);
  const FockSpace space(3);
  const auto h = pairing_hamiltonian(space, model);
  EXPECT_EQ(max_abs(SparseMatrix(h - SparseMatrix(h.transpose()))), 0.0);
}

TEST(Hamiltonian, LevelCountMismatchRejected) {
  const PairingModel model({{0.0, 2}}, 0.1);
  EXPECT_THROW(pairing_hamiltonian(FockSpace(3), model), DomainError);
}

TEST(Seniority, EigenvaluesAreSigns) {
  const FockSpace space(2);
  for (int f = 0; f < 2; ++f) {
    const Eigen::MatrixXd nu(seniority(space, f));
    for (int s = 0; s < nu.rows(); ++s)
      EXPECT_TRUE(nu(s, s) == 0.0 || std::abs(nu(s, s)) == 1.0);
  }
}

TEST(Seniority, CommutesWithHamiltonian) {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> eps_dist(-1.0, 2.0);
  std::uniform_real_distribution<double> g_dist(0.0, 0.8);
  for (int trial = 0; trial < 5; ++trial) {
    const PairingModel model(
        {{eps_dist(rng), 1}, {eps_dist(rng), 2}, {eps_dist(rng), 1}},
        g_dist(rng));
    const FockSpace space(4);
    const auto h = pairing_hamiltonian(space, model);
    EXPECT_EQ(max_abs(commutator(h, total_number(space))), 0.0);
    for (int f = 0; f < space.levels; ++f)
      EXPECT_EQ(max_abs(commutator(h, seniority(space, f))), 0.0);
  }
}

TEST(PairCommutators, ExactHardCoreRelations) {
  EXPECT_EQ(pair_commutators_check(FockSpace(2)).max_deviation, 0.0);
  EXPECT_EQ(pair_commutators_check(FockSpace(3)).max_deviation, 0.0);
}

TEST(PairCommutators, NotIdealBosons) {
  // [b_f, b_f+] = 1 - 2 N_f differs from the identity on occupied states
  const FockSpace space(1);
  const auto b = pair_annihilation(space, 0);
  const SparseMatrix bdag(b.transpose());
  const SparseMatrix comm(commutator(b, bdag) - identity(space));
  EXPECT_GT(max_abs(comm), 0.0);
}

TEST(ExactGroundState, TwoLevelHandDiagonalization) {
  // eigenvalues of [[-0.5, -0.5], [-0.5, 1.5]] solve x^2 - x - 1 = 0
  const PairingModel model({{0.0, 1}, {1.0, 1}}, 0.5);
  const auto gs = exact_ground_state(model, 1);
  EXPECT_EQ(gs.sector_dimension, 2);
  EXPECT_NEAR(gs.energy, (1.0 - std::sqrt(5.0)) / 2.0, 1e-14);
}

TEST(ExactGroundState, ZeroCouplingFillsLowestLevels) {
  const PairingModel model({{-0.3, 1}, {0.4, 2}, {1.1, 1}}, 0.0);
  EXPECT_NEAR(exact_ground_state(model, 2).energy, 2.0 * (-0.3 + 0.4), 1e-14);
}

TEST(ExactGroundState, DegenerateLevelPairing) {
  // single level with Omega = 2: ground energy 2 eps - 2 g
  const PairingModel model({{0.6, 2}}, 0.3);
  const auto gs = exact_ground_state(model, 1);
  EXPECT_EQ(gs.sector_dimension, 2);
  EXPECT_NEAR(gs.energy, 2.0 * 0.6 - 2.0 * 0.3, 1e-14);
}

TEST(ExactGroundState, SectorValidation) {
  const PairingModel model({{0.0, 1}}, 0.1);
  EXPECT_THROW(exact_ground_state(model, 2), DomainError);
  EXPECT_DOUBLE_EQ(exact_ground_state(model, 0).energy, 0.0);
}

TEST(ExactGroundState, MatchesFullSpectrumGround) {
  const PairingModel model({{0.0, 1}, {0.9, 1}, {1.7, 1}}, 0.2);
  const FockSpace space(3);
  const auto spectrum = full_spectrum(space, model);
  double best = spectrum.front();
  for (int n_pairs = 0; n_pairs <= 3; ++n_pairs)
    best = std::min(best, exact_ground_state(model, n_pairs).energy);
  // the absolute ground state of this model is a pair-sector state
  EXPECT_NEAR(spectrum.front(), best, 1e-12);
}

TEST(SectorUnion, ReproducesFullSpectrum) {
  const PairingModel model({{0.1, 1}, {0.8, 2}}, 0.35);
  const FockSpace space(3);
  const auto full = full_spectrum(space, model);
  const auto sectors = sector_union_spectrum(model);
  ASSERT_EQ(full.size(), sectors.size());
  for (std::size_t i = 0; i < full.size(); ++i)
    EXPECT_NEAR(full[i], sectors[i], 1e-10);
}

TEST(Bogoliubov, IdentityTransform) {
  EXPECT_EQ(bogoliubov_check(1.0, 0.0).max_deviation, 0.0);
}

TEST(Bogoliubov, RationalAmplitudes) {
  EXPECT_EQ(bogoliubov_check(0.6, 0.8).max_deviation, 0.0);
}

TEST(Bogoliubov, EqualMixing) {
  const double r = 1.0 / std::sqrt(2.0);
  EXPECT_LE(bogoliubov_check(r, r).max_deviation, 1e-15);
}

TEST(Bogoliubov, ConstraintEnforced) {
  EXPECT_THROW(bogoliubov_check(1.0, 0.5), DomainError);
}

TEST(SpinorSigns, CreationMatchesWedgeInsertion) {
  const FockSpace space(3);
  std::mt19937 rng(2718);
  std::uniform_int_distribution<int> state_dist(
      0, static_cast<int>(space.dimension()) - 1);
  for (int trial = 0; trial < 100; ++trial) {
    const int s = state_dist(rng);
    for (int m = 0; m < space.n_modes(); ++m) {
      const auto adag = creation_mode(space, m);
      if (s & (1 << m)) {
        EXPECT_EQ(max_abs(SparseMatrix(adag.col(s))), 0.0);
        continue;
      }
      int preceding = 0;
      for (int k = 0; k < m; ++k)
        if (s & (1 << k))
          ++preceding;
      const double sign = preceding % 2 == 0 ? 1.0 : -1.0;
      EXPECT_EQ(adag.coeff(s | (1 << m), s), sign);
    }
  }
}

TEST(SpinorSigns, AnnihilationMatchesInteriorProduct) {
  // removing the p-th occupied mode (1-based) carries sign (-1)^(p-1)
  const FockSpace space(2);
  const int state = 0b1011; // occupied modes 0, 1, 3
  const auto a3 = annihilation_mode(space, 3);
  EXPECT_EQ(a3.coeff(0b0011, state), 1.0); // third occupied: (-1)^2
  const auto a1 = annihilation_mode(space, 1);
  EXPECT_EQ(a1.coeff(0b1001, state), -1.0); // second occupied: (-1)^1
}
