#pragma once
#include <cstddef>
#include <stdexcept>
#include <string>

namespace madelung {

//! Invalid input value or precondition violation (maps to CLI exit 1).
class DomainError : public std::runtime_error {
public:
  explicit DomainError(const std::string &what) : std::runtime_error(what) {}
};

//! Text could not be parsed; carries the byte offset of the offending token.
class ParseError : public DomainError {
public:
  ParseError(const std::string &what, std::size_t offset)
      : DomainError(what + " (at offset " + std::to_string(offset) + ")"),
        m_offset(offset) {}
  std::size_t offset() const { return m_offset; }

private:
  std::size_t m_offset;
};

//! Iteration/continuation failed to converge (maps to CLI exit 2).
class SolverError : public std::runtime_error {
public:
  explicit SolverError(const std::string &what) : std::runtime_error(what) {}
};

} // namespace madelung
