#pragma once
#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <algorithm>
#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

#include "madelung/errors.hpp"
#include "madelung/pairing_model.hpp"

namespace madelung::fock {

using SparseMatrix = Eigen::SparseMatrix<double>;
using Triplet = Eigen::Triplet<double>;

enum class Spin { Plus, Minus }; // sigma = +/-

//! Fock space over L paired levels: 2L fermionic modes, dimension 4^L.
//! Basis states are occupation bitmasks; mode order is f ascending with
//! sigma = + before sigma = - (mode 2f holds (f,+), mode 2f+1 holds (f,-)).
//! This ordering fixes the Jordan-Wigner signs.
struct FockSpace {
  int levels = 1;

  explicit FockSpace(int in_levels) : levels(in_levels) {
    if (levels < 1 || levels > 12)
      throw DomainError("paired level count must lie in 1..12");
  }

  int n_modes() const { return 2 * levels; }
  std::int64_t dimension() const { return std::int64_t{1} << (2 * levels); }

  int mode(int f, Spin s) const {
    if (f < 0 || f >= levels)
      throw DomainError("no such level: f=" + std::to_string(f));
    return 2 * f + (s == Spin::Minus ? 1 : 0);
  }
};

namespace detail {
inline double jw_sign(std::uint64_t state, int mode) {
  const std::uint64_t below = state & ((std::uint64_t{1} << mode) - 1);
  return (std::popcount(below) & 1) ? -1.0 : 1.0;
}
} // namespace detail

//! a_mode in the occupation basis; entries are Jordan-Wigner signs +/-1.
inline SparseMatrix annihilation_mode(const FockSpace &space, int mode) {
  if (mode < 0 || mode >= space.n_modes())
    throw DomainError("no such mode: " + std::to_string(mode));
  const auto dim = space.dimension();
  std::vector<Triplet> entries;
  entries.reserve(static_cast<std::size_t>(dim / 2));
  const std::uint64_t bit = std::uint64_t{1} << mode;
  for (std::int64_t s = 0; s < dim; ++s) {
    if (static_cast<std::uint64_t>(s) & bit)
      entries.emplace_back(static_cast<int>(s & ~static_cast<std::int64_t>(bit)),
                           static_cast<int>(s),
                           detail::jw_sign(static_cast<std::uint64_t>(s), mode));
  }
  SparseMatrix m(static_cast<int>(dim), static_cast<int>(dim));
  m.setFromTriplets(entries.begin(), entries.end());
  return m;
}

inline SparseMatrix creation_mode(const FockSpace &space, int mode) {
  return SparseMatrix(annihilation_mode(space, mode).transpose());
}

inline SparseMatrix annihilation(const FockSpace &space, int f, Spin s) {
  return annihilation_mode(space, space.mode(f, s));
}

inline SparseMatrix creation(const FockSpace &space, int f, Spin s) {
  return creation_mode(space, space.mode(f, s));
}

inline SparseMatrix identity(const FockSpace &space) {
  SparseMatrix m(static_cast<int>(space.dimension()),
                 static_cast<int>(space.dimension()));
  m.setIdentity();
  return m;
}

inline SparseMatrix anticommutator(const SparseMatrix &a, const SparseMatrix &b) {
  return SparseMatrix(a * b + b * a);
}

inline SparseMatrix commutator(const SparseMatrix &a, const SparseMatrix &b) {
  return SparseMatrix(a * b - b * a);
}

inline double max_abs(const SparseMatrix &m) {
  double worst = 0.0;
  for (int k = 0; k < m.outerSize(); ++k)
    for (SparseMatrix::InnerIterator it(m, k); it; ++it)
      worst = std::max(worst, std::abs(it.value()));
  return worst;
}

//! Clifford auxiliaries e_i = a_i - a_i+, e_i+ = a_i + a_i+, returned per
//! mode. They satisfy {e_i, e_j} = -2 d_ij, {e_i+, e_j+} = +2 d_ij and
//! {e_i, e_j+} = 0.
inline std::vector<std::pair<SparseMatrix, SparseMatrix>>
clifford_operators(const FockSpace &space) {
  std::vector<std::pair<SparseMatrix, SparseMatrix>> out;
  out.reserve(space.n_modes());
  for (int m = 0; m < space.n_modes(); ++m) {
    const auto a = annihilation_mode(space, m);
    const SparseMatrix adag(a.transpose());
    out.emplace_back(SparseMatrix(a - adag), SparseMatrix(a + adag));
  }
  return out;
}

//! Diagonal pair-number operator N_f = (n_{f+} + n_{f-}) / 2.
inline SparseMatrix number_operator(const FockSpace &space, int f) {
  const auto dim = space.dimension();
  const std::uint64_t plus = std::uint64_t{1} << space.mode(f, Spin::Plus);
  const std::uint64_t minus = std::uint64_t{1} << space.mode(f, Spin::Minus);
  std::vector<Triplet> entries;
  for (std::int64_t s = 0; s < dim; ++s) {
    const auto u = static_cast<std::uint64_t>(s);
    const double n = 0.5 * (((u & plus) ? 1 : 0) + ((u & minus) ? 1 : 0));
    if (n != 0.0)
      entries.emplace_back(static_cast<int>(s), static_cast<int>(s), n);
  }
  SparseMatrix m(static_cast<int>(dim), static_cast<int>(dim));
  m.setFromTriplets(entries.begin(), entries.end());
  return m;
}

inline SparseMatrix total_number(const FockSpace &space) {
  SparseMatrix total = number_operator(space, 0);
  for (int f = 1; f < space.levels; ++f)
    total = SparseMatrix(total + number_operator(space, f));
  return total;
}

//! Seniority nu_f = n_{f+} - n_{f-}: counts unpaired fermions at level f
//! with eigenvalues in {-1, 0, +1}; commutes with the pairing Hamiltonian.
inline SparseMatrix seniority(const FockSpace &space, int f) {
  const auto dim = space.dimension();
  const std::uint64_t plus = std::uint64_t{1} << space.mode(f, Spin::Plus);
  const std::uint64_t minus = std::uint64_t{1} << space.mode(f, Spin::Minus);
  std::vector<Triplet> entries;
  for (std::int64_t s = 0; s < dim; ++s) {
    const auto u = static_cast<std::uint64_t>(s);
    const double v = ((u & plus) ? 1.0 : 0.0) - ((u & minus) ? 1.0 : 0.0);
    if (v != 0.0)
      entries.emplace_back(static_cast<int>(s), static_cast<int>(s), v);
  }
  SparseMatrix m(static_cast<int>(dim), static_cast<int>(dim));
  m.setFromTriplets(entries.begin(), entries.end());
  return m;
}

//! Pair annihilation b_f = c_{f-} c_{f+}. The two modes of a pair are
//! adjacent in the Jordan-Wigner order, so all pair amplitudes are +1.
inline SparseMatrix pair_annihilation(const FockSpace &space, int f) {
  const auto dim = space.dimension();
  const std::uint64_t pair =
      (std::uint64_t{1} << space.mode(f, Spin::Plus)) |
      (std::uint64_t{1} << space.mode(f, Spin::Minus));
  std::vector<Triplet> entries;
  for (std::int64_t s = 0; s < dim; ++s) {
    if ((static_cast<std::uint64_t>(s) & pair) == pair)
      entries.emplace_back(static_cast<int>(s & ~static_cast<std::int64_t>(pair)),
                           static_cast<int>(s), 1.0);
  }
  SparseMatrix m(static_cast<int>(dim), static_cast<int>(dim));
  m.setFromTriplets(entries.begin(), entries.end());
  return m;
}

//! H = sum_f 2 e_f N_f - g sum_{f,f'} b_f+ b_{f'}, assembled directly on
//! occupation bitmasks. Hermitian by construction. The model's levels are
//! expanded Omega-fold into degenerate sublevels, one per f; the expanded
//! count must equal the space's L.
inline SparseMatrix pairing_hamiltonian(const FockSpace &space,
                                        const pairing::PairingModel &model) {
  const auto eps = model.expanded_epsilons();
  if (static_cast<int>(eps.size()) != space.levels)
    throw DomainError("model has " + std::to_string(eps.size()) +
                      " sublevels but the space has " +
                      std::to_string(space.levels));
  const auto dim = space.dimension();
  std::vector<Triplet> entries;
  for (std::int64_t s = 0; s < dim; ++s) {
    const auto u = static_cast<std::uint64_t>(s);
    double diag = 0.0;
    for (int f = 0; f < space.levels; ++f) {
      const bool up = u & (std::uint64_t{1} << (2 * f));
      const bool dn = u & (std::uint64_t{1} << (2 * f + 1));
      diag += eps[f] * ((up ? 1 : 0) + (dn ? 1 : 0));
    }
    if (diag != 0.0)
      entries.emplace_back(static_cast<int>(s), static_cast<int>(s), diag);
    // -g b_f+ b_{f'}: move (or keep, f == f') one pair
    for (int fp = 0; fp < space.levels; ++fp) {
      const std::uint64_t pair_fp = std::uint64_t{3} << (2 * fp);
      if ((u & pair_fp) != pair_fp)
        continue;
      const std::uint64_t t = u & ~pair_fp;
      for (int f = 0; f < space.levels; ++f) {
        const std::uint64_t pair_f = std::uint64_t{3} << (2 * f);
        if (t & pair_f)
          continue;
        entries.emplace_back(static_cast<int>(t | pair_f), static_cast<int>(s),
                             -model.g);
      }
    }
  }
  SparseMatrix m(static_cast<int>(dim), static_cast<int>(dim));
  m.setFromTriplets(entries.begin(), entries.end());
  return m;
}

struct CommutatorReport {
  double max_deviation = 0.0;
  bool exact() const { return max_deviation == 0.0; }
};

//! Verifies the hard-core boson relations [b_f, N_f'] = d_ff' b_f and
//! [b_f, b_f'+] = d_ff' (1 - 2 N_f') as matrix identities.
inline CommutatorReport pair_commutators_check(const FockSpace &space) {
  CommutatorReport report;
  const auto id = identity(space);
  std::vector<SparseMatrix> b, n;
  for (int f = 0; f < space.levels; ++f) {
    b.push_back(pair_annihilation(space, f));
    n.push_back(number_operator(space, f));
  }
  for (int f = 0; f < space.levels; ++f) {
    for (int fp = 0; fp < space.levels; ++fp) {
      const double delta = f == fp ? 1.0 : 0.0;
      const SparseMatrix bdag(b[fp].transpose());
      const SparseMatrix r1(commutator(b[f], n[fp]) - delta * b[f]);
      const SparseMatrix r2(commutator(b[f], bdag) -
                            delta * SparseMatrix(id - 2.0 * n[fp]));
      report.max_deviation =
          std::max({report.max_deviation, max_abs(r1), max_abs(r2)});
    }
  }
  return report;
}

namespace detail {
//! All subsets of {0..count-1} with `take` bits set, ascending as integers.
inline std::vector<std::uint32_t> combinations(int count, int take) {
  std::vector<std::uint32_t> out;
  if (take < 0 || take > count)
    return out;
  if (take == 0) {
    out.push_back(0);
    return out;
  }
  std::uint32_t v = (std::uint32_t{1} << take) - 1;
  const std::uint32_t limit = std::uint32_t{1} << count;
  while (v < limit) {
    out.push_back(v);
    // Gosper's hack: next subset with the same popcount
    const std::uint32_t c = v & -v;
    const std::uint32_t r = v + c;
    v = (((r ^ v) >> 2) / c) | r;
  }
  return out;
}
} // namespace detail

//! Dense pairing Hamiltonian in the seniority-zero pair basis over the
//! given sublevel energies: diagonal sum_{f in S} 2 e_f - g n_pairs, and
//! -g for every single-pair move.
inline Eigen::MatrixXd pair_sector_matrix(const std::vector<double> &eps,
                                          double g, int n_pairs) {
  const int count = static_cast<int>(eps.size());
  const auto basis = detail::combinations(count, n_pairs);
  if (basis.empty())
    throw DomainError("empty seniority-zero sector");
  std::vector<int> index(std::size_t{1} << count, -1);
  for (std::size_t i = 0; i < basis.size(); ++i)
    index[basis[i]] = static_cast<int>(i);

  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(basis.size()),
                                            static_cast<Eigen::Index>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const std::uint32_t s = basis[i];
    double diag = -g * n_pairs;
    for (int f = 0; f < count; ++f)
      if (s & (std::uint32_t{1} << f))
        diag += 2.0 * eps[f];
    h(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = diag;
    for (int fp = 0; fp < count; ++fp) {
      if (!(s & (std::uint32_t{1} << fp)))
        continue;
      for (int f = 0; f < count; ++f) {
        if (f == fp || (s & (std::uint32_t{1} << f)))
          continue;
        const std::uint32_t sp = (s & ~(std::uint32_t{1} << fp)) |
                                 (std::uint32_t{1} << f);
        h(index[sp], static_cast<Eigen::Index>(i)) = -g;
      }
    }
  }
  return h;
}

struct GroundState {
  double energy = 0.0;
  std::int64_t sector_dimension = 0;
};

//! Lowest eigenvalue of the seniority-zero sector with n_pairs pairs,
//! Omega multiplicities expanded. This is the oracle the Richardson
//! solution is measured against.
inline GroundState exact_ground_state(const pairing::PairingModel &model,
                                      int n_pairs) {
  if (n_pairs < 0 || n_pairs > model.pair_capacity())
    throw DomainError("empty seniority-zero sector for n_pairs=" +
                      std::to_string(n_pairs));
  const auto eps = model.expanded_epsilons();
  const auto h = pair_sector_matrix(eps, model.g, n_pairs);
  if (n_pairs == 0)
    return {0.0, 1};
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
  return {solver.eigenvalues().minCoeff(), h.rows()};
}

//! All eigenvalues of the full 4^L space, dense (intended for small L).
inline std::vector<double> full_spectrum(const FockSpace &space,
                                         const pairing::PairingModel &model) {
  const Eigen::MatrixXd dense(pairing_hamiltonian(space, model));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense);
  std::vector<double> out(solver.eigenvalues().data(),
                          solver.eigenvalues().data() + solver.eigenvalues().size());
  std::sort(out.begin(), out.end());
  return out;
}

//! Union of sector spectra: blocked (singly occupied) levels contribute
//! e_f each and a twofold spin multiplicity; the remaining levels carry the
//! seniority-zero pair problem. Equals the full spectrum when the blocked
//! levels really decouple.
inline std::vector<double> sector_union_spectrum(const pairing::PairingModel &model) {
  const auto eps = model.expanded_epsilons();
  const int count = static_cast<int>(eps.size());
  std::vector<double> out;
  for (std::uint32_t blocked = 0; blocked < (std::uint32_t{1} << count); ++blocked) {
    double offset = 0.0;
    std::vector<double> free_eps;
    for (int f = 0; f < count; ++f) {
      if (blocked & (std::uint32_t{1} << f))
        offset += eps[f];
      else
        free_eps.push_back(eps[f]);
    }
    const auto multiplicity = std::int64_t{1} << std::popcount(blocked);
    for (int n_pairs = 0; n_pairs <= static_cast<int>(free_eps.size()); ++n_pairs) {
      std::vector<double> eigs;
      if (n_pairs == 0) {
        eigs.push_back(0.0);
      } else {
        const auto h = pair_sector_matrix(free_eps, model.g, n_pairs);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
        eigs.assign(solver.eigenvalues().data(),
                    solver.eigenvalues().data() + solver.eigenvalues().size());
      }
      for (double e : eigs)
        for (std::int64_t m = 0; m < multiplicity; ++m)
          out.push_back(e + offset);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct BogoliubovReport {
  double max_deviation = 0.0;
};

//! Builds gamma_1 = u c_0 - v c_1+, gamma_2 = u c_1 + v c_0+ on a 2-mode
//! space and verifies the canonical fermion relations {g_i+, g_j} = d_ij,
//! {g_i, g_j} = 0 as matrices.
inline BogoliubovReport bogoliubov_check(double u, double v) {
  if (std::abs(u * u + v * v - 1.0) > 1e-12)
    throw DomainError("Bogoliubov amplitudes must satisfy u^2 + v^2 = 1");
  const FockSpace space(1);
  const auto c0 = annihilation_mode(space, 0);
  const auto c1 = annihilation_mode(space, 1);
  const SparseMatrix c0dag(c0.transpose());
  const SparseMatrix c1dag(c1.transpose());
  const SparseMatrix g1(u * c0 - v * c1dag);
  const SparseMatrix g2(u * c1 + v * c0dag);
  const auto id = identity(space);

  BogoliubovReport report;
  const SparseMatrix gs[2] = {g1, g2};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const double delta = i == j ? 1.0 : 0.0;
      const SparseMatrix gjdag(gs[j].transpose());
      report.max_deviation = std::max(
          report.max_deviation,
          max_abs(SparseMatrix(anticommutator(gjdag, gs[i]) - delta * id)));
      report.max_deviation =
          std::max(report.max_deviation, max_abs(anticommutator(gs[i], gs[j])));
    }
  }
  return report;
}

} // namespace madelung::fock
