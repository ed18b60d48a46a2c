#pragma once
#include <cmath>
#include <string>

#include "madelung/errors.hpp"

namespace madelung::spectra {

//! CODATA value of the fine-structure constant.
inline constexpr double kFineStructure = 7.2973525693e-3;

enum class Units { RestMass, Hartree };

//! Energy with an explicit units tag. Rest-mass values are E/mc^2 (bound
//! states sit in (0, 1)); hartree values are the binding part only.
struct EnergyValue {
  double value = 0.0;
  Units units = Units::Hartree;
};

//! (l, j) encoded by the Dirac quantum number kappa.
struct KappaDecoded {
  int l = 0;
  int two_j = 1;
  double j() const { return 0.5 * two_j; }
};

//! l = kappa for kappa > 0, |kappa| - 1 for kappa < 0; j = |kappa| - 1/2.
inline KappaDecoded kappa_decode(int kappa) {
  if (kappa == 0)
    throw DomainError("kappa must be nonzero");
  KappaDecoded out;
  out.l = kappa > 0 ? kappa : -kappa - 1;
  out.two_j = 2 * std::abs(kappa) - 1;
  return out;
}

//! A bound Dirac-Coulomb level (n_r, kappa) of charge Z at coupling alpha.
struct RelativisticLevel {
  int n_r = 0;
  int kappa = -1;
  int z = 1;
  double alpha = kFineStructure;

  RelativisticLevel() = default;
  RelativisticLevel(int in_n_r, int in_kappa, int in_z,
                    double in_alpha = kFineStructure)
      : n_r(in_n_r), kappa(in_kappa), z(in_z), alpha(in_alpha) {
    if (kappa == 0)
      throw DomainError("kappa must be nonzero");
    if (n_r < 0)
      throw DomainError("n_r must be >= 0");
    if (z < 1)
      throw DomainError("z must be >= 1");
    if (alpha < 0)
      throw DomainError("alpha must be >= 0");
    const double az = alpha * z;
    if (az * az >= static_cast<double>(kappa) * kappa)
      throw DomainError("supercritical charge: (alpha*Z)^2 >= kappa^2");
  }
};

//! Signed Lippmann-Johnson eigenvalue: sign(kappa) * sqrt(kappa^2 - (aZ)^2).
inline double gamma_kappa(const RelativisticLevel &level) {
  const double az = level.alpha * level.z;
  const double root =
      std::sqrt(static_cast<double>(level.kappa) * level.kappa - az * az);
  return level.kappa > 0 ? root : -root;
}

//! Effective angular momentum: gk for the positive branch, |gk| - 1 for the
//! negative branch. Real-valued once alpha > 0.
inline double effective_l(double gk) { return gk > 0 ? gk : -gk - 1.0; }

//! Effective principal number of the radial problem, n_r + l(gk) + 1.
inline double dirac_n_tilde(const RelativisticLevel &level) {
  return level.n_r + effective_l(gamma_kappa(level)) + 1.0;
}

//! Schroedinger hydrogen spectrum, E = -Z^2 / (2 n~^2) hartree.
inline EnergyValue hydrogen_energy(int z, int n_r, int l) {
  if (n_r < 0 || l < 0 || z < 1)
    throw DomainError("hydrogen_energy: bad quantum numbers");
  const double n_tilde = n_r + l + 1;
  return {-static_cast<double>(z) * z / (2.0 * n_tilde * n_tilde),
          Units::Hartree};
}

//! Madelung-regular spectrum: binding part -Z^2 / (2 (n~ + l)^2) hartree.
//! Depends on n~ + l = n_r + 2l + 1 only, which reproduces the (n+l, n)
//! filling order. The rest-mass term is never added to the hartree value.
inline EnergyValue madelung_energy(int z, int n_r, int l) {
  if (n_r < 0 || l < 0 || z < 1)
    throw DomainError("madelung_energy: bad quantum numbers");
  const double s = (n_r + l + 1) + l;
  return {-static_cast<double>(z) * z / (2.0 * s * s), Units::Hartree};
}

//! Closed-form Dirac-Coulomb energy, E/mc^2 = [1 + (aZ/N~)^2]^(-1/2) with
//! N~ = n_r + l(gk) + 1. The (n_r, kappa) labels count radial nodes of the
//! effective problem: (0, -1) is the ground state and (n_r, +k) coincides
//! with (n_r + 1, -k), the j-degeneracy of the Dirac spectrum.
inline EnergyValue dirac_energy(const RelativisticLevel &level) {
  const double az = level.alpha * level.z;
  const double n_tilde = dirac_n_tilde(level);
  return {n_tilde / std::hypot(n_tilde, az), Units::RestMass};
}

//! Binding part of the Dirac energy in hartree: (E/mc^2 - 1) / alpha^2,
//! evaluated as -Z^2 / (h (N~ + h)) with h = hypot(N~, aZ), which avoids
//! the cancellation of E - 1 at small alpha.
inline EnergyValue dirac_binding_hartree(const RelativisticLevel &level) {
  if (level.alpha <= 0)
    throw DomainError("hartree conversion requires alpha > 0");
  const double az = level.alpha * level.z;
  const double n_tilde = dirac_n_tilde(level);
  const double h = std::hypot(n_tilde, az);
  return {-static_cast<double>(level.z) * level.z / (h * (n_tilde + h)),
          Units::Hartree};
}

//! Sommerfeld fine-structure expansion,
//! E/mc^2 = 1 - (aZ)^2/(2 n~^2) - (aZ)^4/(2 n~^4) [n~/(j+1/2) - 3/4].
inline EnergyValue fine_structure_expansion(int z, int n_tilde, double j,
                                            double alpha = kFineStructure) {
  if (n_tilde < 1)
    throw DomainError("n~ must be >= 1");
  const double two_j = 2.0 * j;
  if (std::abs(two_j - std::round(two_j)) > 1e-9 ||
      static_cast<long>(std::llround(two_j)) % 2 == 0)
    throw DomainError("j must be a half-integer");
  if (j < 0.5 - 1e-12 || j > n_tilde - 0.5 + 1e-12)
    throw DomainError("j out of range for n~=" + std::to_string(n_tilde));
  const double x2 = alpha * z * alpha * z;
  const double n2 = static_cast<double>(n_tilde) * n_tilde;
  const double bracket = n_tilde / (j + 0.5) - 0.75;
  return {1.0 - x2 / (2.0 * n2) - x2 * x2 / (2.0 * n2 * n2) * bracket,
          Units::RestMass};
}

//! Independent root of (omega/4)^2 = N~^2 by bisection on E in (0, m):
//! omega = 4 Z e^2 E / mu, mu = sqrt(m^2 - E^2), e^2 = alpha, m = 1, so the
//! residual is aZ E / sqrt(1 - E^2) - N~, monotone increasing in E.
inline double dirac_energy_bisection(const RelativisticLevel &level) {
  const double az = level.alpha * level.z;
  const double n_tilde = dirac_n_tilde(level);
  if (az == 0.0)
    return 1.0; // omega/4 = N~ only in the E -> m limit
  const auto f = [&](double e) { return az * e / std::sqrt(1.0 - e * e) - n_tilde; };
  double lo = 0.0, hi = 1.0; // f(lo) = -N~ < 0, f(hi-) = +inf
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) < 0.0)
      lo = mid;
    else
      hi = mid;
    if (hi - lo <= 4e-16 * hi)
      break;
  }
  return 0.5 * (lo + hi);
}

} // namespace madelung::spectra
