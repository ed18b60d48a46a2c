#pragma once
#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "madelung/orbital.hpp"

namespace madelung::shells {

//! The three orbital-filling rules. FockN orders by n alone (ties broken by
//! increasing l, which keeps the three rules nested); HydrogenicNL orders by
//! (n, l); Madelung orders by (n+l, n).
enum class FillingRule { FockN, HydrogenicNL, Madelung };

inline std::string rule_name(FillingRule r) {
  switch (r) {
  case FillingRule::FockN:
    return "fockn";
  case FillingRule::HydrogenicNL:
    return "hydrogenic";
  case FillingRule::Madelung:
    return "madelung";
  }
  throw DomainError("unknown filling rule");
}

inline FillingRule rule_from_name(const std::string &name) {
  if (name == "fockn")
    return FillingRule::FockN;
  if (name == "hydrogenic")
    return FillingRule::HydrogenicNL;
  if (name == "madelung")
    return FillingRule::Madelung;
  throw DomainError("unknown filling rule: " + name);
}

namespace detail {
inline std::pair<int, int> rule_key(FillingRule rule, const Orbital &o) {
  switch (rule) {
  case FillingRule::FockN:
  case FillingRule::HydrogenicNL:
    return {o.n, o.l};
  case FillingRule::Madelung:
    return madelung_key(o);
  }
  throw DomainError("unknown filling rule");
}

inline std::vector<Orbital> all_orbitals() {
  std::vector<Orbital> out;
  for (int n = 1; n <= kMaxN; ++n)
    for (int l = 0; l < n; ++l)
      out.emplace_back(n, l);
  return out;
}
} // namespace detail

//! A multiset of orbital occupations. Orbitals with zero occupation are
//! absent; no occupation may exceed its orbital's capacity.
class Configuration {
public:
  using Map = std::map<Orbital, int>;

  Configuration() = default;

  void set(const Orbital &o, int count) {
    if (count < 0 || count > o.capacity())
      throw DomainError("occupation " + std::to_string(count) +
                        " out of range for " + o.symbol());
    if (count == 0)
      m_occ.erase(o);
    else
      m_occ[o] = count;
  }

  void add(const Orbital &o, int count) {
    auto it = m_occ.find(o);
    set(o, count + (it == m_occ.end() ? 0 : it->second));
  }

  int count(const Orbital &o) const {
    auto it = m_occ.find(o);
    return it == m_occ.end() ? 0 : it->second;
  }

  int electrons() const {
    int z = 0;
    for (const auto &[o, c] : m_occ)
      z += c;
    return z;
  }

  const Map &occupations() const { return m_occ; }
  bool empty() const { return m_occ.empty(); }

  //! True when every occupation of `other` is contained in *this.
  bool contains(const Configuration &other) const {
    for (const auto &[o, c] : other.m_occ)
      if (count(o) < c)
        return false;
    return true;
  }

  friend bool operator==(const Configuration &a, const Configuration &b) {
    return a.m_occ == b.m_occ;
  }

private:
  Map m_occ; // keyed by (n, l); zero entries never stored
};

//! First `count` orbitals in the rule's total order.
inline std::vector<Orbital> filling_order(FillingRule rule, int count) {
  auto orbitals = detail::all_orbitals();
  if (count < 1 || count > static_cast<int>(orbitals.size()))
    throw DomainError("orbital count out of range: " + std::to_string(count));
  std::stable_sort(orbitals.begin(), orbitals.end(),
                   [rule](const Orbital &a, const Orbital &b) {
                     return detail::rule_key(rule, a) <
                            detail::rule_key(rule, b);
                   });
  orbitals.resize(count);
  return orbitals;
}

//! Aufbau filling: place z electrons greedily in rule order; the last
//! orbital may be partially occupied.
inline Configuration fill(FillingRule rule, int z) {
  if (z < 1 || z > kMaxZ)
    throw DomainError("atomic number out of range: " + std::to_string(z));
  Configuration config;
  int remaining = z;
  for (const auto &o :
       filling_order(rule, static_cast<int>(detail::all_orbitals().size()))) {
    const int take = std::min(remaining, o.capacity());
    config.set(o, take);
    remaining -= take;
    if (remaining == 0)
      break;
  }
  return config;
}

//! Total capacity of the N-th Madelung shell, N = n + l, for N = 1..max_N.
//! Reproduces the period-doubled sequence 2-2-8-8-18-18-32-32.
inline std::vector<int> period_lengths(FillingRule rule, int max_n) {
  if (rule != FillingRule::Madelung)
    throw DomainError("period_lengths is defined for the Madelung rule only");
  if (max_n < 1)
    throw DomainError("max_N must be >= 1");
  std::vector<int> periods;
  periods.reserve(max_n);
  for (int bigN = 1; bigN <= max_n; ++bigN) {
    int total = 0;
    for (int l = 0; 2 * l <= bigN - 1; ++l)
      total += 2 * (2 * l + 1); // n = N - l >= l + 1
    periods.push_back(total);
  }
  return periods;
}

} // namespace madelung::shells
