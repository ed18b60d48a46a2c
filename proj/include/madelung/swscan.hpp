#pragma once
#include <cmath>
#include <utility>
#include <vector>

#include "madelung/gegenbauer.hpp"
#include "madelung/spectra.hpp"

namespace madelung::spectra {

//! Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration on P_n.
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;

  explicit GaussLegendre(int n) {
    if (n < 2)
      throw DomainError("Gauss-Legendre order must be >= 2");
    nodes.resize(n);
    weights.resize(n);
    const double pi = std::acos(-1.0);
    for (int i = 0; i < n; ++i) {
      double x = std::cos(pi * (i + 0.75) / (n + 0.5));
      double dp = 0.0;
      for (int it = 0; it < 100; ++it) {
        // P_n(x) and P_n'(x) by the ascending recurrence
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
          const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double dx = p1 / dp;
        x -= dx;
        if (std::abs(dx) < 1e-15)
          break;
      }
      nodes[i] = x;
      weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
  }
};

inline double legendre_p(int l, double x) {
  double p0 = 1.0, p1 = x;
  if (l == 0)
    return p0;
  for (int k = 2; k <= l; ++k) {
    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

//! One scanned nuclear charge: the Cauchy-Schwarz margin
//!   integral(R^2) - (1/2) integral(|psi|^4)
//! over S^3, with R the relativistic eigenvalue (n_r + l(gk) + 1)^2 treated
//! as constant and psi the unit-normalized hyperspherical harmonic
//! Y_{n_r+l, l, m=0}. Entries with supercritical alpha*Z are undefined.
struct ScanEntry {
  int z = 0;
  double margin = 0.0;
  bool defined = true;
};

namespace detail {
//! Quadrature moments of the (unnormalized) harmonic on S^3:
//! returns {integral |u|^2 dvol, integral |u|^4 dvol}. The phi integral is
//! analytic (2 pi); chi and theta use product Gauss-Legendre.
inline std::pair<double, double> harmonic_moments(int degree, int l,
                                                  int quad_order = 64) {
  const double pi = std::acos(-1.0);
  const GaussLegendre gl(quad_order);
  const auto radial = gegenbauer_coefficients(degree - l, l + 1.0);
  double i2 = 0.0, i4 = 0.0;
  for (int a = 0; a < quad_order; ++a) {
    const double chi = 0.5 * pi * (gl.nodes[a] + 1.0);
    const double wchi = 0.5 * pi * gl.weights[a] * std::sin(chi) * std::sin(chi);
    const double fa = std::pow(std::sin(chi), l) *
                      polynomial_eval(radial, std::cos(chi));
    for (int b = 0; b < quad_order; ++b) {
      const double t = gl.nodes[b]; // t = cos(theta)
      const double u = fa * legendre_p(l, t);
      const double w = wchi * gl.weights[b] * 2.0 * pi;
      i2 += w * u * u;
      i4 += w * u * u * u * u;
    }
  }
  return {i2, i4};
}
} // namespace detail

//! Scans Z = 1..z_max. With alpha = 0 the margin carries no Z dependence;
//! with alpha > 0 it decreases with Z through the shrinking eigenvalue.
inline std::vector<ScanEntry> sw_discreteness_scan(int n_r, int l, int kappa,
                                                   int z_max,
                                                   double alpha = kFineStructure) {
  if (z_max < 1 || z_max > 137)
    throw DomainError("z_max must lie in 1..137");
  if (n_r < 0 || l < 0)
    throw DomainError("n_r and l must be >= 0");
  if (kappa == 0)
    throw DomainError("kappa must be nonzero");
  const double pi = std::acos(-1.0);
  const auto [i2, i4] = detail::harmonic_moments(n_r + l, l);
  const double quartic = i4 / (i2 * i2); // integral |psi|^4, psi normalized

  std::vector<ScanEntry> out;
  out.reserve(z_max);
  for (int z = 1; z <= z_max; ++z) {
    ScanEntry entry;
    entry.z = z;
    const double az = alpha * z;
    if (az * az >= static_cast<double>(kappa) * kappa) {
      entry.defined = false;
      out.push_back(entry);
      continue;
    }
    const RelativisticLevel level(n_r, kappa, z, alpha);
    const double eig = dirac_n_tilde(level) * dirac_n_tilde(level);
    entry.margin = 2.0 * pi * pi * eig * eig - 0.5 * quartic;
    out.push_back(entry);
  }
  return out;
}

//! Charges at which the margin changes sign (the first z of the new sign).
inline std::vector<int> sign_changes(const std::vector<ScanEntry> &entries) {
  std::vector<int> out;
  const ScanEntry *prev = nullptr;
  for (const auto &e : entries) {
    if (!e.defined)
      continue;
    if (prev && ((prev->margin > 0) != (e.margin > 0)))
      out.push_back(e.z);
    prev = &e;
  }
  return out;
}

} // namespace madelung::spectra
