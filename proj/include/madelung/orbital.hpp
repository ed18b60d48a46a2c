#pragma once
#include <compare>
#include <string>
#include <utility>

#include "madelung/errors.hpp"

namespace madelung::shells {

//! Spectroscopic letters for l = 0..6.
inline constexpr char kLLetters[] = "spdfghi";
inline constexpr int kMaxL = 6;

//! Largest principal quantum number the filling machinery enumerates.
//! n <= 8 covers every orbital touched by Z <= 118.
inline constexpr int kMaxN = 8;

//! Hard cap on atomic number for filling operations.
inline constexpr int kMaxZ = 118;

inline char l_letter(int l) {
  if (l < 0 || l > kMaxL)
    throw DomainError("no spectroscopic letter for l=" + std::to_string(l));
  return kLLetters[l];
}

inline int letter_l(char c) {
  for (int l = 0; l <= kMaxL; ++l)
    if (kLLetters[l] == c)
      return l;
  return -1;
}

//! A non-relativistic (n, l) shell. m and m_s are never stored; they are
//! absorbed into the capacity 2(2l+1).
struct Orbital {
  int n = 1;
  int l = 0;

  Orbital() = default;
  Orbital(int in_n, int in_l) : n(in_n), l(in_l) {
    if (n < 1 || l < 0 || l > n - 1)
      throw DomainError("invalid orbital n=" + std::to_string(n) +
                        " l=" + std::to_string(l));
  }

  int capacity() const { return 2 * (2 * l + 1); }

  std::string symbol() const { return std::to_string(n) + l_letter(l); }

  friend auto operator<=>(const Orbital &a, const Orbital &b) = default;
};

//! Madelung sort key (N, n) with N = n + l; lexicographic comparison of
//! keys realizes the (n+l, n) filling order.
inline std::pair<int, int> madelung_key(const Orbital &o) {
  return {o.n + o.l, o.n};
}

//! Comparator for the Madelung order.
struct MadelungLess {
  bool operator()(const Orbital &a, const Orbital &b) const {
    return madelung_key(a) < madelung_key(b);
  }
};

} // namespace madelung::shells
