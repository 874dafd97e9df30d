#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lpod {

/// Syntax error in textual input, with 1-based source position.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                           std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// An enumeration was requested over more atoms than the configured cap allows.
class CapExceededError : public std::runtime_error {
 public:
  CapExceededError(std::size_t atoms, std::size_t cap)
      : std::runtime_error("instance too large for exhaustive enumeration: " +
                           std::to_string(atoms) + " atoms exceeds cap " +
                           std::to_string(cap)),
        atoms_(atoms),
        cap_(cap) {}

  std::size_t atoms() const { return atoms_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t atoms_;
  std::size_t cap_;
};

/// A rule with more than one head atom was given where a normal program is required.
class NotNormalError : public std::runtime_error {
 public:
  NotNormalError() : std::runtime_error("not a normal program") {}
};

/// An operation's input contract was violated by the caller.
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& message)
      : std::runtime_error(message) {}
};

/// A constructed context failed its mandatory separation check. This signals
/// a bug in the construction, never a property of the input.
class VerificationError : public std::runtime_error {
 public:
  explicit VerificationError(const std::string& message)
      : std::runtime_error(message) {}
};

}  // namespace lpod
