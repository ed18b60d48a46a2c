#pragma once
#include <cmath>

#include "madelung/errors.hpp"

namespace madelung::spectra {

//! Conformally deformed Maxwell fish-eye potential. gamma = 1 recovers the
//! hydrogenic Coulomb image, gamma = 1/2 the multielectron deformation.
struct FisheyeParams {
  double a = 1.0;      // length scale
  double n0 = 1.0;     // refractive amplitude
  double gamma = 1.0;  // deformation exponent

  FisheyeParams() = default;
  FisheyeParams(double in_a, double in_n0, double in_gamma)
      : a(in_a), n0(in_n0), gamma(in_gamma) {
    if (a <= 0 || n0 <= 0)
      throw DomainError("fish-eye parameters require a > 0 and n0 > 0");
  }
};

//! V(r) = -(a/r)^2 [ n0 / ((r/a)^-gamma + (r/a)^gamma) ]^2.
//! At gamma = 1 this equals -n0^2 / (1 + (r/a)^2)^2.
inline double fisheye_potential(double r, const FisheyeParams &p) {
  if (r <= 0)
    throw DomainError("fish-eye potential requires r > 0");
  const double x = r / p.a;
  const double denom = std::pow(x, -p.gamma) + std::pow(x, p.gamma);
  const double amp = p.n0 / denom;
  return -(p.a / r) * (p.a / r) * amp * amp;
}

//! Sturmian coupling of the fish-eye image of a Coulomb level:
//! beta_n = (Z e / E_n)^2 with e = 1.
inline double coulomb_to_fisheye(int z, double e_n) {
  if (e_n == 0.0)
    throw DomainError("coulomb_to_fisheye: E_n must be nonzero");
  const double ratio = static_cast<double>(z) / e_n;
  return ratio * ratio;
}

} // namespace madelung::spectra
