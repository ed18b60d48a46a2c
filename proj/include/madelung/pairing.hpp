#pragma once
#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include "madelung/errors.hpp"
#include "madelung/pairing_model.hpp"

namespace madelung::pairing {

using Complex = std::complex<double>;

//! F(E) = sum_n Omega_n / (2 e_n - E), the Cooper function.
inline Complex cooper_function(const PairingModel &model, Complex e) {
  Complex acc = 0.0;
  for (const auto &lv : model.levels)
    acc += static_cast<double>(lv.omega) / (2.0 * lv.epsilon - e);
  return acc;
}

//! The unique bound-pair root E < 2 min(e) of F(E) = 1/g, by bracketed
//! bisection. g = 0 supports no bound pair.
inline double cooper_pair_energy(const PairingModel &model) {
  if (model.g <= 0.0)
    throw DomainError("Cooper equation requires g > 0");
  double e_min = model.levels.front().epsilon;
  double omega_total = 0.0;
  for (const auto &lv : model.levels) {
    e_min = std::min(e_min, lv.epsilon);
    omega_total += lv.omega;
  }
  const double target = 1.0 / model.g;
  const auto f = [&](double e) { return cooper_function(model, e).real(); };

  // F increases monotonically on (-inf, 2 e_min): 0+ at -inf, +inf at the pole.
  double width = std::max(1.0, model.g * omega_total);
  double lo = 2.0 * e_min - width;
  for (int it = 0; f(lo) > target; ++it) {
    width *= 2.0;
    lo = 2.0 * e_min - width;
    if (it > 200)
      throw SolverError("Cooper bracket: no sign change below the spectrum");
  }
  double gap = 0.5 * width;
  double hi = 2.0 * e_min - gap;
  while (f(hi) < target) { // still below target: tighten toward the pole
    lo = hi;
    gap *= 0.5;
    hi = 2.0 * e_min - gap;
    if (gap < 1e-300)
      throw SolverError("Cooper bracket: pole side never exceeded 1/g");
  }
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) < target)
      lo = mid;
    else
      hi = mid;
    if (hi - lo <= 1e-15 * std::max(1.0, std::abs(lo)))
      break;
  }
  return 0.5 * (lo + hi);
}

//! Roots of the Richardson system plus convergence diagnostics.
struct RichardsonSolution {
  std::vector<Complex> pair_energies;
  double residual = 0.0;           // paper-form residual, max over i
  double total_energy = 0.0;       // Re(sum of pair energies)
  double imag_defect = 0.0;        // |Im(sum of pair energies)|
  double conjugation_defect = 0.0; // worst multiset-conjugation mismatch seen
};

namespace detail {

//! Residual of the rearranged system
//!   F(E_i) - 2 sum_{j != i} 1/(E_j - E_i) - 1/g  at coupling g.
inline void richardson_rearranged(const PairingModel &model,
                                  const std::vector<Complex> &e, double g,
                                  std::vector<Complex> &out) {
  const std::size_t n = e.size();
  out.assign(n, Complex(0.0));
  for (std::size_t i = 0; i < n; ++i) {
    Complex acc = cooper_function(model, e[i]) - 1.0 / g;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i)
        acc -= 2.0 / (e[j] - e[i]);
    out[i] = acc;
  }
}

inline double max_norm(const std::vector<Complex> &v) {
  double worst = 0.0;
  for (const auto &x : v)
    worst = std::max(worst, std::abs(x));
  return worst;
}

//! Rounding floor of the rearranged residual: each term 1/(x - E) cannot be
//! evaluated closer than ulp(x)/(x - E)^2, so near a pole the achievable
//! residual is bounded away from zero. Convergence tests measure against
//! this floor instead of demanding an unreachable absolute zero.
inline double residual_floor(const PairingModel &model,
                             const std::vector<Complex> &e, double g) {
  const double u = std::numeric_limits<double>::epsilon();
  double worst = 0.0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    double acc = u / g;
    const double mag_i = std::abs(e[i]);
    for (const auto &lv : model.levels) {
      const double d = std::abs(2.0 * lv.epsilon - e[i]);
      const double rep = std::max({std::abs(2.0 * lv.epsilon), mag_i, d});
      acc += lv.omega * u * rep / (d * d);
    }
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (j == i)
        continue;
      const double d = std::abs(e[j] - e[i]);
      acc += 2.0 * u * std::max({std::abs(e[j]), mag_i, d}) / (d * d);
    }
    worst = std::max(worst, acc);
  }
  return worst;
}

inline double newton_tolerance(const PairingModel &model,
                               const std::vector<Complex> &e, double g) {
  return std::max(1e-12, 16.0 * residual_floor(model, e, g));
}

//! Damped Newton on the rearranged system at fixed g. Returns true on
//! convergence; e is updated in place.
inline bool newton_at_coupling(const PairingModel &model, double g,
                               std::vector<Complex> &e) {
  const int n = static_cast<int>(e.size());
  std::vector<Complex> r;
  richardson_rearranged(model, e, g, r);
  for (int iter = 0; iter < 80; ++iter) {
    const double tol = newton_tolerance(model, e, g);
    if (max_norm(r) <= tol)
      return true;
    Eigen::MatrixXcd jac = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
      Complex diag = 0.0;
      for (const auto &lv : model.levels) {
        const Complex d = 2.0 * lv.epsilon - e[i];
        diag += static_cast<double>(lv.omega) / (d * d);
      }
      for (int j = 0; j < n; ++j) {
        if (j == i)
          continue;
        const Complex d = e[j] - e[i];
        jac(i, j) = 2.0 / (d * d);
        diag -= 2.0 / (d * d);
      }
      jac(i, i) = diag;
    }
    Eigen::VectorXcd rhs(n);
    for (int i = 0; i < n; ++i)
      rhs(i) = -r[i];
    const Eigen::VectorXcd step = jac.partialPivLu().solve(rhs);
    if (!step.allFinite())
      return false;

    const double r0 = max_norm(r);
    double damping = 1.0;
    std::vector<Complex> trial(e.size());
    bool advanced = false;
    for (int attempt = 0; attempt < 12; ++attempt) {
      for (int i = 0; i < n; ++i)
        trial[i] = e[i] + damping * step(i);
      std::vector<Complex> rt;
      richardson_rearranged(model, trial, g, rt);
      if (max_norm(rt) < r0 || max_norm(rt) <= tol) {
        e = trial;
        r = std::move(rt);
        advanced = true;
        break;
      }
      damping *= 0.5;
    }
    if (!advanced) // stagnation: accept only if pinned at the rounding floor
      return r0 <= newton_tolerance(model, e, g);
  }
  std::vector<Complex> rf;
  richardson_rearranged(model, e, g, rf);
  return max_norm(rf) <= newton_tolerance(model, e, g);
}

//! Worst distance between the multiset of roots and its conjugate.
inline double conjugation_mismatch(std::vector<Complex> roots) {
  double worst = 0.0;
  std::vector<bool> used(roots.size(), false);
  for (const auto &x : roots) {
    const Complex want = std::conj(x);
    double best = std::numeric_limits<double>::infinity();
    std::size_t best_j = 0;
    for (std::size_t j = 0; j < roots.size(); ++j) {
      if (used[j])
        continue;
      const double d = std::abs(roots[j] - want);
      if (d < best) {
        best = d;
        best_j = j;
      }
    }
    used[best_j] = true;
    worst = std::max(worst, best);
  }
  return worst;
}

} // namespace detail

//! Max over i of |F(E_i) - 1/g_i| with g_i = g [1 + 2g sum_{j != i}
//! (E_j - E_i)^-1]^-1, evaluated in the original (unrearranged) form.
//! A root colliding with a 2 e_n pole reports an infinite residual.
inline double richardson_residual(const PairingModel &model,
                                  const RichardsonSolution &solution) {
  const auto &e = solution.pair_energies;
  double worst = 0.0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (const auto &lv : model.levels)
      if (std::abs(2.0 * lv.epsilon - e[i]) < 1e-300)
        return std::numeric_limits<double>::infinity();
    Complex corr = 0.0;
    for (std::size_t j = 0; j < e.size(); ++j)
      if (j != i)
        corr += 1.0 / (e[j] - e[i]);
    const Complex inv_gi = (1.0 + 2.0 * model.g * corr) / model.g;
    worst = std::max(worst, std::abs(cooper_function(model, e[i]) - inv_gi));
  }
  return worst;
}

//! Solves the N-pair Richardson system by homotopy continuation in g:
//! seeds E_i = 2 e_{p_i} at g ~ 0 (with small imaginary offsets to split
//! degenerate starts), then damped complex Newton with step halving.
//! Roots are complex in general; below the first critical coupling they
//! stay real and sum to the seniority-zero ground energy.
inline RichardsonSolution richardson_solve(const PairingModel &model,
                                           int n_pairs) {
  if (n_pairs < 1 || n_pairs > model.pair_capacity())
    throw DomainError("n_pairs must lie in 1.." +
                      std::to_string(model.pair_capacity()));
  if (model.g <= 0.0)
    throw DomainError("Richardson continuation requires g > 0");

  // ground-state seeds: the n_pairs lowest sublevels, Omega expanded
  auto eps = model.expanded_epsilons();
  std::sort(eps.begin(), eps.end());
  const double g0 = model.g / 100.0;
  std::vector<Complex> e(n_pairs);
  for (int i = 0; i < n_pairs; ++i)
    e[i] = Complex(2.0 * eps[i], -g0 * 1e-3 * (1.0 + i));

  RichardsonSolution solution;
  double g_cur = 0.0;
  double step = g0;
  while (g_cur < model.g) {
    const double g_next = std::min(g_cur + step, model.g);
    std::vector<Complex> trial = e;
    if (detail::newton_at_coupling(model, g_next, trial)) {
      e = std::move(trial);
      g_cur = g_next;
      solution.conjugation_defect = std::max(
          solution.conjugation_defect, detail::conjugation_mismatch(e));
      step = std::min(step * 1.5, model.g / 10.0);
    } else {
      step *= 0.5;
      if (step < model.g * 1e-12)
        throw SolverError("Richardson continuation stalled at g=" +
                          std::to_string(g_cur));
    }
  }

  solution.pair_energies = e;
  Complex total = 0.0;
  for (const auto &x : e)
    total += x;
  solution.total_energy = total.real();
  solution.imag_defect = std::abs(total.imag());
  solution.residual = richardson_residual(model, solution);
  return solution;
}

//! BCS quasiparticle energy sqrt(eps^2 + |Delta|^2).
inline double bcs_quasiparticle(double epsilon, double delta) {
  return std::hypot(epsilon, delta);
}

//! The 2x2 particle-hole block [[eps, -R], [-R, -eps]].
struct BdGBlock {
  double epsilon = 0.0;
  double delta = 0.0; // the off-diagonal R slot
};

struct BdGEigen {
  double e_plus = 0.0;
  double e_minus = 0.0;
  double u = 1.0;
  double v = 0.0;
};

//! Eigenvalues +-sqrt(eps^2 + R^2); (u, v) is the E_plus eigenvector with
//! u >= 0 and u^2 + v^2 = 1.
inline BdGEigen bdg_eigen(const BdGBlock &block) {
  const double eps = block.epsilon;
  const double r = block.delta;
  BdGEigen out;
  out.e_plus = std::hypot(eps, r);
  out.e_minus = -out.e_plus;
  if (r == 0.0) {
    out.u = eps >= 0.0 ? 1.0 : 0.0;
    out.v = eps >= 0.0 ? 0.0 : 1.0;
    return out;
  }
  // unnormalized eigenvector (R, eps - E) for eigenvalue E = e_plus
  double u = r;
  double v = eps - out.e_plus;
  if (u < 0.0) {
    u = -u;
    v = -v;
  }
  const double norm = std::hypot(u, v);
  out.u = u / norm;
  out.v = v / norm;
  return out;
}

//! Self-consistent gap: solves 1 = g sum_f Omega_f / (2 sqrt(et_f^2 + D^2))
//! for D >= 0 by bisection, with et measured from the mid-spectrum chemical
//! potential (midpoint of highest filled and lowest empty sublevel at g = 0,
//! half filling). Returns 0 when no positive solution exists.
inline double gap_self_consistent(const PairingModel &model) {
  if (model.g == 0.0)
    return 0.0;
  auto eps = model.expanded_epsilons();
  std::sort(eps.begin(), eps.end());
  const int count = static_cast<int>(eps.size());
  const int n_fill = count / 2;
  const double mu =
      n_fill == 0 ? eps.front() : 0.5 * (eps[n_fill - 1] + eps[n_fill]);

  const auto rhs = [&](double delta) {
    double acc = 0.0;
    for (const auto &lv : model.levels)
      acc += lv.omega / (2.0 * std::hypot(lv.epsilon - mu, delta));
    return model.g * acc;
  };

  // no solution when the Delta -> 0+ bound already sits below 1
  bool gapless = false;
  for (const auto &lv : model.levels)
    if (lv.epsilon == mu)
      gapless = true;
  if (!gapless && rhs(0.0) <= 1.0)
    return 0.0;

  double lo = 0.0;
  double hi = 0.5 * model.g * model.pair_capacity() + 1.0;
  while (rhs(hi) > 1.0)
    hi *= 2.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (rhs(mid) > 1.0)
      lo = mid;
    else
      hi = mid;
    if (hi - lo <= 1e-15 * std::max(1.0, hi))
      break;
  }
  return 0.5 * (lo + hi);
}

} // namespace madelung::pairing
