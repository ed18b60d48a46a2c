#pragma once
#include <cmath>
#include <string>
#include <vector>

#include "madelung/errors.hpp"

namespace madelung::pairing {

//! One single-particle level: energy epsilon and pair degeneracy Omega
//! (the number of distinct f's sharing this energy).
struct Level {
  double epsilon = 0.0;
  int omega = 1;
};

//! Constant-g pairing model: input to both the Richardson solver and the
//! exact-diagonalization oracle.
struct PairingModel {
  std::vector<Level> levels;
  double g = 0.0;

  PairingModel() = default;
  PairingModel(std::vector<Level> in_levels, double in_g)
      : levels(std::move(in_levels)), g(in_g) {
    if (levels.empty())
      throw DomainError("pairing model needs at least one level");
    for (const auto &lv : levels) {
      if (lv.omega < 1)
        throw DomainError("pair degeneracy must be >= 1");
      if (!std::isfinite(lv.epsilon))
        throw DomainError("level energy must be finite");
    }
    if (!(g >= 0.0))
      throw DomainError("coupling g must be >= 0");
  }

  int pair_capacity() const {
    int total = 0;
    for (const auto &lv : levels)
      total += lv.omega;
    return total;
  }

  //! Sublevel energies with Omega multiplicity expanded, in level order.
  std::vector<double> expanded_epsilons() const {
    std::vector<double> out;
    out.reserve(pair_capacity());
    for (const auto &lv : levels)
      for (int k = 0; k < lv.omega; ++k)
        out.push_back(lv.epsilon);
    return out;
  }
};

} // namespace madelung::pairing
