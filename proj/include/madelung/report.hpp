#pragma once
#include <cmath>
#include <cstdio>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace madelung::cli {

//! One serialized value. Doubles are always printed via format_number so
//! JSON and CSV agree byte-for-byte on every numeric field.
using Cell = std::variant<bool, long long, double, std::string>;

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

//! Machine-readable command output: scalars plus zero or more tables.
struct Report {
  std::string command;
  std::vector<std::pair<std::string, Cell>> inputs;
  std::vector<std::pair<std::string, Cell>> scalars;
  std::vector<Table> tables;
  std::vector<std::string> warnings;
};

//! 15 significant digits, C locale, deterministic.
inline std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15g", x);
  return buf;
}

namespace detail {

inline std::string json_escape(const std::string &s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
    case '"':
      out += "\\\"";
      break;
    case '\\':
      out += "\\\\";
      break;
    case '\n':
      out += "\\n";
      break;
    case '\t':
      out += "\\t";
      break;
    default:
      if (static_cast<unsigned char>(c) < 0x20) {
        char buf[8];
        std::snprintf(buf, sizeof(buf), "\\u%04x", c);
        out += buf;
      } else {
        out += c;
      }
    }
  }
  return out;
}

inline std::string cell_json(const Cell &cell) {
  if (std::holds_alternative<bool>(cell))
    return std::get<bool>(cell) ? "true" : "false";
  if (std::holds_alternative<long long>(cell))
    return std::to_string(std::get<long long>(cell));
  if (std::holds_alternative<double>(cell)) {
    const double x = std::get<double>(cell);
    if (!std::isfinite(x)) // not representable as a JSON number
      return "\"" + format_number(x) + "\"";
    return format_number(x);
  }
  return "\"" + json_escape(std::get<std::string>(cell)) + "\"";
}

inline std::string cell_csv(const Cell &cell) {
  if (std::holds_alternative<bool>(cell))
    return std::get<bool>(cell) ? "true" : "false";
  if (std::holds_alternative<long long>(cell))
    return std::to_string(std::get<long long>(cell));
  if (std::holds_alternative<double>(cell))
    return format_number(std::get<double>(cell));
  const auto &s = std::get<std::string>(cell);
  if (s.find(',') != std::string::npos || s.find('"') != std::string::npos) {
    std::string quoted = "\"";
    for (char c : s) {
      if (c == '"')
        quoted += '"';
      quoted += c;
    }
    return quoted + "\"";
  }
  return s;
}

} // namespace detail

inline std::string to_json(const Report &report) {
  std::string out = "{\"command\":\"" + detail::json_escape(report.command) +
                    "\",\"inputs\":{";
  for (std::size_t i = 0; i < report.inputs.size(); ++i) {
    if (i)
      out += ',';
    out += "\"" + detail::json_escape(report.inputs[i].first) +
           "\":" + detail::cell_json(report.inputs[i].second);
  }
  out += "},\"results\":{";
  bool first = true;
  for (const auto &[key, value] : report.scalars) {
    if (!first)
      out += ',';
    first = false;
    out += "\"" + detail::json_escape(key) + "\":" + detail::cell_json(value);
  }
  for (const auto &table : report.tables) {
    if (!first)
      out += ',';
    first = false;
    out += "\"" + detail::json_escape(table.name) + "\":[";
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
      if (r)
        out += ',';
      out += '{';
      for (std::size_t c = 0; c < table.columns.size(); ++c) {
        if (c)
          out += ',';
        out += "\"" + detail::json_escape(table.columns[c]) +
               "\":" + detail::cell_json(table.rows[r][c]);
      }
      out += '}';
    }
    out += ']';
  }
  out += "},\"warnings\":[";
  for (std::size_t i = 0; i < report.warnings.size(); ++i) {
    if (i)
      out += ',';
    out += "\"" + detail::json_escape(report.warnings[i]) + "\"";
  }
  out += "]}\n";
  return out;
}

inline std::string to_csv(const Report &report) {
  std::string out = "# command: " + report.command + "\n";
  out += "# inputs\nkey,value\n";
  for (const auto &[key, value] : report.inputs)
    out += key + "," + detail::cell_csv(value) + "\n";
  if (!report.scalars.empty()) {
    out += "# results\nkey,value\n";
    for (const auto &[key, value] : report.scalars)
      out += key + "," + detail::cell_csv(value) + "\n";
  }
  for (const auto &table : report.tables) {
    out += "# table: " + table.name + "\n";
    for (std::size_t c = 0; c < table.columns.size(); ++c)
      out += (c ? "," : "") + table.columns[c];
    out += "\n";
    for (const auto &row : table.rows) {
      for (std::size_t c = 0; c < row.size(); ++c)
        out += (c ? "," : "") + detail::cell_csv(row[c]);
      out += "\n";
    }
  }
  for (const auto &w : report.warnings)
    out += "# warning: " + w + "\n";
  return out;
}

} // namespace madelung::cli
