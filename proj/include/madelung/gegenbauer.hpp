#pragma once
#include <cmath>
#include <cstddef>
#include <vector>

#include "madelung/errors.hpp"

namespace madelung::spectra {

//! Monomial coefficients of the Gegenbauer polynomial C_n^lambda, built by
//! the standard three-term recurrence
//!   n C_n = 2 x (n + lambda - 1) C_{n-1} - (n + 2 lambda - 2) C_{n-2}.
inline std::vector<double> gegenbauer_coefficients(int n, double lambda) {
  if (n < 0)
    throw DomainError("gegenbauer degree must be >= 0");
  std::vector<double> prev2 = {1.0};          // C_0
  if (n == 0)
    return prev2;
  std::vector<double> prev1 = {0.0, 2.0 * lambda}; // C_1
  if (n == 1)
    return prev1;
  for (int k = 2; k <= n; ++k) {
    std::vector<double> cur(static_cast<std::size_t>(k) + 1, 0.0);
    for (std::size_t i = 0; i < prev1.size(); ++i)
      cur[i + 1] += 2.0 * (k + lambda - 1.0) * prev1[i] / k;
    for (std::size_t i = 0; i < prev2.size(); ++i)
      cur[i] -= (k + 2.0 * lambda - 2.0) * prev2[i] / k;
    prev2 = std::move(prev1);
    prev1 = std::move(cur);
  }
  return prev1;
}

inline double polynomial_eval(const std::vector<double> &coeffs, double x) {
  double acc = 0.0;
  for (std::size_t i = coeffs.size(); i-- > 0;)
    acc = acc * x + coeffs[i];
  return acc;
}

inline std::vector<double> polynomial_derivative(const std::vector<double> &coeffs) {
  if (coeffs.size() <= 1)
    return {0.0};
  std::vector<double> d(coeffs.size() - 1);
  for (std::size_t i = 1; i < coeffs.size(); ++i)
    d[i - 1] = coeffs[i] * static_cast<double>(i);
  return d;
}

//! Residual of the S^3 radial-angle eigenvalue equation
//!   (1 - x^2) F'' - (2l + 3) x F' + [I - l(l+2)] F = 0
//! for F = C_n^(l+1) and I = (n + l + 1)^2 - 1, sampled at `sample_count`
//! Chebyshev points in (-1, 1) and normalized by the largest coefficient
//! magnitude. A correct eigenvalue drives this to rounding level.
inline double gegenbauer_residual(int n, int l, int sample_count) {
  if (n < 0 || l < 0 || n > 30 || l > 30)
    throw DomainError("gegenbauer_residual: n, l must lie in 0..30");
  if (sample_count < 10)
    throw DomainError("gegenbauer_residual: need at least 10 sample points");
  const auto f = gegenbauer_coefficients(n, l + 1.0);
  const auto fp = polynomial_derivative(f);
  const auto fpp = polynomial_derivative(fp);
  const double eigenvalue = static_cast<double>(n + l + 1) * (n + l + 1) - 1.0;
  const double shift = eigenvalue - static_cast<double>(l) * (l + 2);

  double scale = 0.0;
  for (double c : f)
    scale = std::max(scale, std::abs(c));

  double worst = 0.0;
  const double pi = std::acos(-1.0);
  for (int k = 0; k < sample_count; ++k) {
    const double x = std::cos(pi * (2.0 * k + 1.0) / (2.0 * sample_count));
    const double r = (1.0 - x * x) * polynomial_eval(fpp, x) -
                     (2.0 * l + 3.0) * x * polynomial_eval(fp, x) +
                     shift * polynomial_eval(f, x);
    worst = std::max(worst, std::abs(r));
  }
  return worst / scale;
}

} // namespace madelung::spectra
