#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polyclass {

/// Caller passed something outside an operation's domain.
class ArgumentError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A computed result contradicts an identity that must hold (a rank that
/// should equal dim+1, a Segre structure that must exist). Always a bug or a
/// counterexample, never an input problem.
class InvariantViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string &what, std::size_t line, std::size_t column)
      : std::runtime_error(what), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

} // namespace polyclass
