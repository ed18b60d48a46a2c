#pragma once
#include <array>
#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "madelung/filling.hpp"

namespace madelung::shells {

//! Noble-gas cores usable in bracket notation, e.g. "[Kr] 4d5 5s1".
struct NobleGas {
  const char *symbol;
  int z;
};
inline constexpr std::array<NobleGas, 7> kNobleGases = {
    {{"He", 2}, {"Ne", 10}, {"Ar", 18}, {"Kr", 36},
     {"Xe", 54}, {"Rn", 86}, {"Og", 118}}};

inline std::optional<int> noble_gas_z(std::string_view symbol) {
  for (const auto &ng : kNobleGases)
    if (symbol == ng.symbol)
      return ng.z;
  return std::nullopt;
}

//! Ground configuration of a noble gas; used to expand "[Sym]" cores.
//! All noble gases are Madelung-regular, so the Madelung fill is exact.
inline Configuration noble_gas_core(std::string_view symbol) {
  auto z = noble_gas_z(symbol);
  if (!z)
    throw DomainError("unknown noble-gas core symbol: " + std::string(symbol));
  return fill(FillingRule::Madelung, *z);
}

//! Parses ASCII configuration notation: either fully explicit
//! ("1s2 2s2 2p3") or with a noble-gas core ("[Kr] 4d5 5s1").
inline Configuration parse_configuration(std::string_view text) {
  Configuration config;
  std::size_t pos = 0;
  const auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };

  skip_ws();
  bool first_token = true;
  while (pos < text.size()) {
    const std::size_t token_start = pos;
    if (text[pos] == '[') {
      if (!first_token)
        throw ParseError("core must be the first token", token_start);
      const auto close = text.find(']', pos);
      if (close == std::string_view::npos)
        throw ParseError("unterminated core bracket", token_start);
      const auto symbol = text.substr(pos + 1, close - pos - 1);
      if (!noble_gas_z(symbol))
        throw ParseError("unknown core symbol '" + std::string(symbol) + "'",
                         token_start);
      const auto core_config = noble_gas_core(symbol);
      for (const auto &[o, c] : core_config.occupations())
        config.add(o, c);
      pos = close + 1;
    } else {
      // orbital token: digits, one l letter, digits
      std::size_t p = pos;
      while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p])))
        ++p;
      if (p == pos || p >= text.size())
        throw ParseError("malformed orbital token", token_start);
      const int n = std::stoi(std::string(text.substr(pos, p - pos)));
      const int l = letter_l(text[p]);
      if (l < 0)
        throw ParseError(std::string("unknown orbital letter '") + text[p] +
                             "'",
                         p);
      ++p;
      const std::size_t count_start = p;
      while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p])))
        ++p;
      if (p == count_start)
        throw ParseError("missing electron count", count_start);
      const int count = std::stoi(std::string(text.substr(count_start, p - count_start)));
      if (n < 1 || l > n - 1)
        throw ParseError("invalid orbital " + std::to_string(n) + l_letter(l),
                         token_start);
      const Orbital o(n, l);
      if (count < 1 || count > o.capacity())
        throw ParseError("occupation " + std::to_string(count) +
                             " exceeds capacity of " + o.symbol(),
                         count_start);
      if (config.count(o) != 0)
        throw ParseError("duplicate orbital " + o.symbol(), token_start);
      config.add(o, count);
      pos = p;
    }
    if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])))
      throw ParseError("malformed token", pos);
    skip_ws();
    first_token = false;
  }
  if (config.empty())
    throw ParseError("empty configuration", 0);
  return config;
}

//! Canonical ASCII form, orbitals in (n, l) order, e.g. "1s2 2s2 2p3".
//! With a core symbol the core's electrons are factored out first:
//! format(Mo_exp, "Kr") == "[Kr] 4d5 5s1".
inline std::string format_configuration(
    const Configuration &config,
    std::optional<std::string> core = std::nullopt) {
  Configuration rest = config;
  std::string out;
  if (core) {
    const auto core_config = noble_gas_core(*core);
    if (!config.contains(core_config))
      throw DomainError("core [" + *core + "] is not a subset of the configuration");
    for (const auto &[o, c] : core_config.occupations())
      rest.set(o, rest.count(o) - c);
    out = "[" + *core + "]";
  }
  for (const auto &[o, c] : rest.occupations()) {
    if (!out.empty())
      out += ' ';
    out += o.symbol() + std::to_string(c);
  }
  if (out.empty())
    throw DomainError("nothing to format: configuration equals its core");
  return out;
}

//! Largest noble gas whose configuration is contained in `config`, if any.
inline std::optional<std::string> best_core(const Configuration &config) {
  std::optional<std::string> best;
  for (const auto &ng : kNobleGases) {
    if (ng.z >= config.electrons())
      break;
    if (config.contains(fill(FillingRule::Madelung, ng.z)))
      best = ng.symbol;
  }
  return best;
}

} // namespace madelung::shells
