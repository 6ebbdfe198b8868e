#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wildnum {

// Value outside the mathematical domain of an operation (zero denominator,
// Collatz at 0, negative input).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A rule cannot be applied at a particular state (nonpositive divisor).
class StepError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller violated an operation's precondition (unsorted records, empty
// search box, trace not retained, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed text input. line() is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line == 0 ? what
                                     : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Well-formed lines that violate a file-level constraint (index ordering).
class FormatError : public ParseError {
 public:
  using ParseError::ParseError;
};

}  // namespace wildnum
