#pragma once
#include <bit>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "madelung/elements.hpp"
#include "madelung/fock.hpp"
#include "madelung/gegenbauer.hpp"
#include "madelung/pairing.hpp"
#include "madelung/spectra.hpp"
#include "madelung/swscan.hpp"

namespace madelung::verify {

enum class Outcome { Pass, Fail, Skip };

//! One verified property: pass when measured <= tolerance.
struct PropertyResult {
  std::string module;
  std::string name;
  Outcome outcome = Outcome::Pass;
  double measured = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

namespace detail {

inline PropertyResult make(const std::string &module, const std::string &name,
                           double measured, double tolerance,
                           const std::string &detail_msg = "") {
  PropertyResult r;
  r.module = module;
  r.name = name;
  r.measured = measured;
  r.tolerance = tolerance;
  r.outcome = measured <= tolerance ? Outcome::Pass : Outcome::Fail;
  r.detail = detail_msg;
  return r;
}

inline PropertyResult skip(const std::string &module, const std::string &name,
                           const std::string &why) {
  PropertyResult r;
  r.module = module;
  r.name = name;
  r.outcome = Outcome::Skip;
  r.detail = why;
  return r;
}

//! Random small pairing model with well-separated levels and a coupling
//! below the first critical value, so Richardson roots stay real.
inline pairing::PairingModel random_model(std::mt19937 &rng, int max_capacity) {
  std::uniform_int_distribution<int> n_levels_dist(1, 4);
  std::uniform_int_distribution<int> omega_dist(1, 2);
  std::uniform_real_distribution<double> eps_jitter(0.0, 0.15);
  std::uniform_real_distribution<double> g_dist(0.02, 0.12);

  const int n_levels = n_levels_dist(rng);
  std::vector<pairing::Level> levels;
  int capacity = 0;
  double eps = eps_jitter(rng);
  for (int i = 0; i < n_levels; ++i) {
    int omega = omega_dist(rng);
    omega = std::min(omega, max_capacity - capacity);
    if (omega < 1)
      break;
    levels.push_back({eps, omega});
    capacity += omega;
    eps += 0.5 + eps_jitter(rng); // keep spacings >= 0.5
    if (capacity >= max_capacity)
      break;
  }
  return pairing::PairingModel(std::move(levels), g_dist(rng));
}

inline std::vector<shells::Orbital> random_orbitals(std::mt19937 &rng) {
  std::vector<shells::Orbital> all;
  for (int n = 1; n <= shells::kMaxN; ++n)
    for (int l = 0; l < n && l <= shells::kMaxL; ++l)
      all.emplace_back(n, l);
  std::shuffle(all.begin(), all.end(), rng);
  std::uniform_int_distribution<std::size_t> size_dist(1, 8);
  all.resize(size_dist(rng));
  return all;
}

} // namespace detail

// ---------------------------------------------------------------------------
// shells

inline void verify_shells(std::vector<PropertyResult> &out,
                          const std::string &dataset_path) {
  using namespace shells;

  { // every fill has exactly z electrons and violates no capacity
    int violations = 0;
    for (auto rule : {FillingRule::FockN, FillingRule::HydrogenicNL,
                      FillingRule::Madelung})
      for (int z = 1; z <= kMaxZ; ++z) {
        const auto c = fill(rule, z); // capacity enforced at construction
        if (c.electrons() != z)
          ++violations;
      }
    out.push_back(detail::make("shells", "fill-electron-count-and-capacity",
                               violations, 0));
  }

  { // fill(z+1) adds exactly one electron to fill(z)
    int violations = 0;
    for (auto rule : {FillingRule::FockN, FillingRule::HydrogenicNL,
                      FillingRule::Madelung})
      for (int z = 1; z < kMaxZ; ++z) {
        const auto a = fill(rule, z);
        const auto b = fill(rule, z + 1);
        int added = 0;
        bool removed = false;
        for (const auto &[o, c] : b.occupations()) {
          const int d = c - a.count(o);
          if (d < 0)
            removed = true;
          added += std::max(d, 0);
        }
        for (const auto &[o, c] : a.occupations())
          if (b.count(o) < c)
            removed = true;
        if (removed || added != 1)
          ++violations;
      }
    out.push_back(detail::make("shells", "fill-monotone", violations, 0));
  }

  { // Madelung order is a strict total order on orbitals with n <= 8
    const auto orbitals = shells::detail::all_orbitals();
    MadelungLess less;
    int violations = 0;
    for (const auto &a : orbitals)
      for (const auto &b : orbitals) {
        const bool ab = less(a, b), ba = less(b, a);
        if (a == b ? (ab || ba) : (ab == ba))
          ++violations; // irreflexive + total
      }
    for (const auto &a : orbitals)
      for (const auto &b : orbitals)
        for (const auto &c : orbitals)
          if (less(a, b) && less(b, c) && !less(a, c))
            ++violations;
    out.push_back(detail::make("shells", "madelung-strict-total-order",
                               violations, 0));
  }

  { // period doubling
    const std::vector<int> expected = {2, 2, 8, 8, 18, 18, 32, 32};
    const auto got = period_lengths(FillingRule::Madelung, 8);
    double worst = 0.0;
    for (std::size_t i = 0; i < expected.size(); ++i)
      worst = std::max(worst, std::abs(static_cast<double>(got[i] - expected[i])));
    out.push_back(detail::make("shells", "period-doubling", worst, 0));
  }

  { // parse/format roundtrip on 500 random configurations
    std::mt19937 rng(20230211);
    int violations = 0;
    for (int trial = 0; trial < 500; ++trial) {
      Configuration c;
      for (const auto &o : detail::random_orbitals(rng)) {
        std::uniform_int_distribution<int> count_dist(1, o.capacity());
        c.set(o, count_dist(rng));
      }
      if (parse_configuration(format_configuration(c)) != c)
        ++violations;
      if (const auto core = best_core(c)) {
        if (c.electrons() > noble_gas_z(*core).value() &&
            parse_configuration(format_configuration(c, core)) != c)
          ++violations;
      }
    }
    out.push_back(detail::make("shells", "parse-format-roundtrip", violations, 0));
  }

  { // classify status Regular exactly when predicted equals experimental
    if (dataset_path.empty()) {
      out.push_back(detail::skip("shells", "classify-regular-iff-equal",
                                 "no dataset provided"));
    } else {
      try {
        const auto dataset = load_dataset(dataset_path);
        int violations = 0;
        for (const auto &rec : dataset) {
          const auto cls = classify(rec.z, dataset);
          const bool equal =
              fill(FillingRule::Madelung, rec.z) == rec.experimental;
          if ((cls.status == Status::Regular) != equal)
            ++violations;
          if ((cls.status == Status::Regular) != cls.diff.empty())
            ++violations;
        }
        out.push_back(detail::make("shells", "classify-regular-iff-equal",
                                   violations, 0,
                                   std::to_string(dataset.size()) + " elements"));
      } catch (const std::exception &e) {
        out.push_back(detail::make("shells", "classify-regular-iff-equal", 1, 0,
                                   e.what()));
      }
    }
  }
}

// ---------------------------------------------------------------------------
// spectra

inline void verify_spectra(std::vector<PropertyResult> &out) {
  using namespace spectra;

  { // alpha-continuity: Dirac binding -> hydrogen as alpha -> 0, error ~ a^2
    double prev_err = 0.0;
    bool shrink_ok = true;
    double worst_ratio = 0.0;
    for (double alpha : {1e-2, 1e-3, 1e-4}) {
      double err = 0.0;
      for (int kappa : {-3, -2, -1, 1, 2}) {
        for (int n_r = 0; n_r <= 3; ++n_r) {
          const RelativisticLevel level(n_r, kappa, 1, alpha);
          const double hyd =
              hydrogen_energy(1, n_r, kappa_decode(kappa).l).value;
          const double rel =
              std::abs(dirac_binding_hartree(level).value / hyd - 1.0);
          err = std::max(err, rel);
        }
      }
      worst_ratio = std::max(worst_ratio, err / (5.0 * alpha * alpha));
      if (prev_err != 0.0 && err > prev_err / 20.0)
        shrink_ok = false; // expect ~100x shrink per decade of alpha
      prev_err = err;
    }
    out.push_back(detail::make("spectra", "alpha-continuity",
                               shrink_ok ? worst_ratio : 1e9, 1.0,
                               "relative error / (5 alpha^2)"));
  }

  { // expansion agrees with the closed form to O(alpha^6)
    double worst = 0.0;
    for (int z = 1; z <= 40; ++z) {
      const double az6 = std::pow(kFineStructure * z, 6);
      for (int n_tilde = 1; n_tilde <= 4; ++n_tilde) {
        for (int two_j = 1; two_j <= 2 * n_tilde - 1; two_j += 2) {
          const int abs_kappa = (two_j + 1) / 2;
          const int n_r = n_tilde - abs_kappa;
          const RelativisticLevel level(n_r, -abs_kappa, z);
          const double exact = dirac_energy(level).value;
          const double approx =
              fine_structure_expansion(z, n_tilde, 0.5 * two_j).value;
          worst = std::max(worst, std::abs(exact - approx) / az6);
        }
      }
    }
    out.push_back(detail::make("spectra", "expansion-consistency", worst, 10.0,
                               "|expansion - exact| / (alpha Z)^6"));
  }

  { // degeneracy structure of the three spectra
    int violations = 0;
    for (int a_nr = 0; a_nr <= 6; ++a_nr)
      for (int a_l = 0; a_l <= 6; ++a_l)
        for (int b_nr = 0; b_nr <= 6; ++b_nr)
          for (int b_l = 0; b_l <= 6; ++b_l) {
            if (a_nr + a_l == b_nr + b_l &&
                hydrogen_energy(3, a_nr, a_l).value !=
                    hydrogen_energy(3, b_nr, b_l).value)
              ++violations;
            if (a_nr + 2 * a_l == b_nr + 2 * b_l &&
                madelung_energy(3, a_nr, a_l).value !=
                    madelung_energy(3, b_nr, b_l).value)
              ++violations;
          }
    // Dirac j-degeneracy: (n_r, +k) coincides with (n_r + 1, -k)
    for (int kappa = 1; kappa <= 6; ++kappa)
      for (int n_r = 0; n_r <= 6; ++n_r)
        if (dirac_energy(RelativisticLevel(n_r, kappa, 10)).value !=
            dirac_energy(RelativisticLevel(n_r + 1, -kappa, 10)).value)
          ++violations;
    out.push_back(detail::make("spectra", "degeneracy-structure", violations, 0));
  }

  { // bound-state window 0 < E/mc^2 < 1
    int violations = 0;
    for (int kappa = -6; kappa <= 6; ++kappa) {
      if (kappa == 0)
        continue;
      for (int n_r = 0; n_r <= 6; ++n_r)
        for (int z : {1, 20, 60, 100, 137}) {
          if (std::pow(kFineStructure * z, 2) >= kappa * kappa)
            continue;
          const double e = dirac_energy(RelativisticLevel(n_r, kappa, z)).value;
          if (!(e > 0.0 && e < 1.0))
            ++violations;
        }
    }
    out.push_back(detail::make("spectra", "bound-state-window", violations, 0));
  }

  { // Gegenbauer eigenvalue residual
    double worst = 0.0;
    for (int n = 0; n <= 10; ++n)
      for (int l = 0; l <= 10; ++l)
        worst = std::max(worst, gegenbauer_residual(n, l, 64));
    out.push_back(detail::make("spectra", "gegenbauer-residual", worst, 1e-10));
  }

  { // bisection solution of the quantization condition vs closed form
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> z_dist(1, 120);
    std::uniform_int_distribution<int> nr_dist(0, 5);
    std::uniform_int_distribution<int> kappa_dist(1, 4);
    std::uniform_int_distribution<int> sign_dist(0, 1);
    double worst = 0.0;
    int sampled = 0;
    while (sampled < 50) {
      const int kappa = kappa_dist(rng) * (sign_dist(rng) ? 1 : -1);
      const int z = z_dist(rng);
      if (std::pow(kFineStructure * z, 2) >= kappa * kappa)
        continue;
      const RelativisticLevel level(nr_dist(rng), kappa, z);
      const double closed = dirac_energy(level).value;
      worst = std::max(worst,
                       std::abs(dirac_energy_bisection(level) - closed) / closed);
      ++sampled;
    }
    out.push_back(detail::make("spectra", "quantization-bisection-oracle",
                               worst, 1e-12));
  }
}

// ---------------------------------------------------------------------------
// fock

inline void verify_fock(std::vector<PropertyResult> &out) {
  using namespace fock;

  { // CAR anticommutators are exact integer identities
    double worst = 0.0;
    for (int levels : {2, 3, 4, 6}) {
      const FockSpace space(levels);
      const auto id = identity(space);
      std::vector<SparseMatrix> a;
      for (int m = 0; m < space.n_modes(); ++m)
        a.push_back(annihilation_mode(space, m));
      for (int i = 0; i < space.n_modes(); ++i)
        for (int j = 0; j < space.n_modes(); ++j) {
          const SparseMatrix adag_j(a[j].transpose());
          const double delta = i == j ? 1.0 : 0.0;
          worst = std::max(
              worst,
              max_abs(SparseMatrix(anticommutator(a[i], adag_j) - delta * id)));
          worst = std::max(worst, max_abs(anticommutator(a[i], a[j])));
        }
    }
    out.push_back(detail::make("fock", "car-anticommutators", worst, 0));
  }

  { // Clifford auxiliaries: {e,e} = -2d, {e+,e+} = +2d, {e,e+} = 0
    double worst = 0.0;
    for (int levels : {1, 2, 3}) {
      const FockSpace space(levels);
      const auto id = identity(space);
      const auto cliff = clifford_operators(space);
      for (std::size_t i = 0; i < cliff.size(); ++i)
        for (std::size_t j = 0; j < cliff.size(); ++j) {
          const double delta = i == j ? 1.0 : 0.0;
          worst = std::max(worst,
                           max_abs(SparseMatrix(
                               anticommutator(cliff[i].first, cliff[j].first) +
                               2.0 * delta * id)));
          worst = std::max(worst,
                           max_abs(SparseMatrix(
                               anticommutator(cliff[i].second, cliff[j].second) -
                               2.0 * delta * id)));
          worst = std::max(worst, max_abs(anticommutator(cliff[i].first,
                                                         cliff[j].second)));
        }
    }
    out.push_back(detail::make("fock", "clifford-anticommutators", worst, 0));
  }

  { // hard-core boson pair relations
    double worst = 0.0;
    for (int levels : {2, 3, 4})
      worst = std::max(worst,
                       pair_commutators_check(FockSpace(levels)).max_deviation);
    out.push_back(detail::make("fock", "pair-commutators", worst, 0));
  }

  { // H commutes with total number and every seniority operator
    std::mt19937 rng(424242);
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
      const auto model = detail::random_model(rng, 4);
      const FockSpace space(model.pair_capacity());
      const auto h = pairing_hamiltonian(space, model);
      worst = std::max(worst, max_abs(commutator(h, total_number(space))));
      for (int f = 0; f < space.levels; ++f)
        worst = std::max(worst, max_abs(commutator(h, seniority(space, f))));
    }
    out.push_back(detail::make("fock", "hamiltonian-symmetries", worst, 0));
  }

  { // full spectrum equals the union over (blocked, n_pairs) sectors
    std::mt19937 rng(1951);
    double worst = 0.0;
    for (int trial = 0; trial < 6; ++trial) {
      const auto model = detail::random_model(rng, 3);
      const FockSpace space(model.pair_capacity());
      const auto full = full_spectrum(space, model);
      const auto sectors = sector_union_spectrum(model);
      if (full.size() != sectors.size()) {
        worst = 1e9;
        continue;
      }
      for (std::size_t i = 0; i < full.size(); ++i)
        worst = std::max(worst, std::abs(full[i] - sectors[i]));
    }
    out.push_back(detail::make("fock", "spectrum-sector-union", worst, 1e-10));
  }

  { // creation acts as (signed) exterior multiplication on bitmask states
    std::mt19937 rng(6174);
    const FockSpace space(3);
    std::vector<SparseMatrix> adag;
    for (int m = 0; m < space.n_modes(); ++m)
      adag.push_back(creation_mode(space, m));
    std::uniform_int_distribution<int> state_dist(
        0, static_cast<int>(space.dimension()) - 1);
    int violations = 0;
    for (int trial = 0; trial < 200; ++trial) {
      const int s = state_dist(rng);
      for (int m = 0; m < space.n_modes(); ++m) {
        // wedge-product sign: (-1)^(occupied modes preceding m)
        double expected = 0.0;
        if (!(s & (1 << m))) {
          int before = 0;
          for (int k = 0; k < m; ++k)
            if (s & (1 << k))
              ++before;
          expected = (before % 2 == 0) ? 1.0 : -1.0;
        }
        const double got = expected == 0.0
                               ? max_abs(SparseMatrix(adag[m].col(s)))
                               : adag[m].coeff(s | (1 << m), s);
        if (got != (expected == 0.0 ? 0.0 : expected))
          ++violations;
      }
    }
    out.push_back(detail::make("fock", "exterior-product-sign-rule",
                               violations, 0));
  }
}

// ---------------------------------------------------------------------------
// pairing

inline void verify_pairing(std::vector<PropertyResult> &out) {
  using namespace pairing;

  { // Richardson total energy vs exact diagonalization, plus diagnostics
    std::mt19937 rng(987654321);
    double worst_rel = 0.0;
    double worst_residual = 0.0;
    double worst_conj = 0.0;
    double worst_imag = 0.0;
    double min_pole_dist = 1e300;
    int failures = 0;
    for (int trial = 0; trial < 100; ++trial) {
      const auto model = detail::random_model(rng, 6);
      std::uniform_int_distribution<int> pairs_dist(
          1, std::min(3, model.pair_capacity()));
      const int n_pairs = pairs_dist(rng);
      try {
        const auto sol = richardson_solve(model, n_pairs);
        const auto exact = fock::exact_ground_state(model, n_pairs);
        worst_rel = std::max(worst_rel,
                             std::abs(sol.total_energy - exact.energy) /
                                 std::max(1.0, std::abs(exact.energy)));
        worst_residual = std::max(worst_residual, sol.residual);
        worst_conj = std::max(worst_conj, sol.conjugation_defect);
        worst_imag = std::max(worst_imag, sol.imag_defect);
        for (const auto &e : sol.pair_energies)
          for (const auto &lv : model.levels)
            min_pole_dist =
                std::min(min_pole_dist, std::abs(e - 2.0 * lv.epsilon));
      } catch (const std::exception &) {
        ++failures;
      }
    }
    out.push_back(detail::make("pairing", "richardson-oracle-equivalence",
                               failures > 0 ? 1e9 : worst_rel, 1e-8,
                               "100 random models"));
    out.push_back(detail::make("pairing", "richardson-residuals",
                               failures > 0 ? 1e9 : worst_residual, 1e-10));
    out.push_back(detail::make("pairing", "conjugation-closure",
                               failures > 0 ? 1e9 : worst_conj, 1e-10));
    out.push_back(detail::make("pairing", "imaginary-part-cancellation",
                               failures > 0 ? 1e9 : worst_imag, 1e-10));
    out.push_back(detail::make("pairing", "pole-avoidance",
                               min_pole_dist > 1e-12 ? 0.0 : 1.0, 0,
                               "min |E_i - 2 eps_n|"));
  }

  { // BdG eigenpairs: residual, normalization, R -> -R spectrum symmetry
    std::mt19937 rng(31415);
    std::uniform_real_distribution<double> val(-5.0, 5.0);
    double worst_residual = 0.0;
    double worst_norm = 0.0;
    double worst_sym = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
      const BdGBlock block{val(rng), val(rng)};
      const auto eig = bdg_eigen(block);
      const double r1 = std::abs(block.epsilon * eig.u - block.delta * eig.v -
                                 eig.e_plus * eig.u);
      const double r2 = std::abs(-block.delta * eig.u - block.epsilon * eig.v -
                                 eig.e_plus * eig.v);
      worst_residual = std::max({worst_residual, r1, r2});
      worst_norm = std::max(worst_norm,
                            std::abs(eig.u * eig.u + eig.v * eig.v - 1.0));
      const auto mirrored = bdg_eigen({block.epsilon, -block.delta});
      worst_sym = std::max(worst_sym, std::abs(mirrored.e_plus - eig.e_plus));
    }
    out.push_back(detail::make("pairing", "bdg-eigen-residual", worst_residual,
                               1e-12, "1000 random blocks"));
    out.push_back(detail::make("pairing", "bdg-normalization", worst_norm, 1e-14));
    out.push_back(detail::make("pairing", "bdg-sign-symmetry", worst_sym, 0));
  }
}

//! Runs every module's invariant suite. An empty dataset path skips the
//! dataset-dependent checks; a present but malformed dataset fails them.
inline std::vector<PropertyResult> verify_all(const std::string &dataset_path) {
  std::vector<PropertyResult> out;
  verify_shells(out, dataset_path);
  verify_spectra(out);
  verify_fock(out);
  verify_pairing(out);
  return out;
}

} // namespace madelung::verify
