#pragma once
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "madelung/notation.hpp"

namespace madelung::shells {

//! One row of the experimental ground-state dataset.
struct ElementRecord {
  int z = 0;
  std::string symbol;
  Configuration experimental;
};

enum class Status { Regular, Exceptional };

inline std::string status_name(Status s) {
  return s == Status::Regular ? "Regular" : "Exceptional";
}

//! One orbital whose predicted and experimental occupations differ.
struct OrbitalDiff {
  Orbital orbital;
  int predicted = 0;
  int experimental = 0;
};

//! Outcome of comparing the Madelung prediction with experiment.
//! status == Regular exactly when diff is empty.
struct Classification {
  Status status = Status::Regular;
  std::vector<OrbitalDiff> diff; // sorted by Madelung key
};

//! Reads the element dataset: CSV with header `z,symbol,configuration`.
//! Throws ParseError/DomainError on malformed rows (including capacity
//! violations inside a configuration).
inline std::vector<ElementRecord> load_dataset(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw DomainError("cannot open dataset file: " + path);
  std::vector<ElementRecord> records;
  std::set<std::string> seen_symbols;
  std::set<int> seen_z;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    if (line.empty())
      continue;
    if (line_no == 1) {
      if (line != "z,symbol,configuration")
        throw DomainError("dataset " + path + ": unexpected header '" + line + "'");
      continue;
    }
    const auto where = path + ":" + std::to_string(line_no);
    const auto c1 = line.find(',');
    const auto c2 = line.find(',', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
      throw DomainError("dataset " + where + ": expected 3 comma-separated fields");
    ElementRecord rec;
    try {
      rec.z = std::stoi(line.substr(0, c1));
    } catch (const std::exception &) {
      throw DomainError("dataset " + where + ": bad atomic number");
    }
    rec.symbol = line.substr(c1 + 1, c2 - c1 - 1);
    try {
      rec.experimental = parse_configuration(line.substr(c2 + 1));
    } catch (const std::exception &e) {
      throw DomainError("dataset " + where + ": " + e.what());
    }
    if (rec.experimental.electrons() != rec.z)
      throw DomainError("dataset " + where + ": configuration has " +
                        std::to_string(rec.experimental.electrons()) +
                        " electrons but z=" + std::to_string(rec.z));
    if (!seen_symbols.insert(rec.symbol).second)
      throw DomainError("dataset " + where + ": duplicate symbol " + rec.symbol);
    if (!seen_z.insert(rec.z).second)
      throw DomainError("dataset " + where + ": duplicate z");
    records.push_back(std::move(rec));
  }
  if (records.empty())
    throw DomainError("dataset " + path + ": no records");
  return records;
}

inline const ElementRecord &find_record(const std::vector<ElementRecord> &dataset,
                                        int z) {
  for (const auto &rec : dataset)
    if (rec.z == z)
      return rec;
  throw DomainError("no dataset record for z=" + std::to_string(z));
}

//! Orbital-by-orbital diff of two configurations, in Madelung-key order.
inline std::vector<OrbitalDiff> configuration_diff(const Configuration &predicted,
                                                   const Configuration &experimental) {
  std::set<Orbital, MadelungLess> orbitals;
  for (const auto &[o, c] : predicted.occupations())
    orbitals.insert(o);
  for (const auto &[o, c] : experimental.occupations())
    orbitals.insert(o);
  std::vector<OrbitalDiff> diff;
  for (const auto &o : orbitals) {
    const int p = predicted.count(o);
    const int e = experimental.count(o);
    if (p != e)
      diff.push_back({o, p, e});
  }
  return diff;
}

//! Compares fill(Madelung, z) with the experimental record for z.
inline Classification classify(int z, const std::vector<ElementRecord> &dataset) {
  const auto &rec = find_record(dataset, z);
  Classification result;
  result.diff = configuration_diff(fill(FillingRule::Madelung, z), rec.experimental);
  result.status = result.diff.empty() ? Status::Regular : Status::Exceptional;
  return result;
}

} // namespace madelung::shells
