#ifndef GQC_ERRORS_HPP
#define GQC_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gqc {

/// Division by the zero element or the zero polynomial.
class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An exhaustive enumeration would exceed the configured budget. Oracles never
/// fall back to an estimate; they refuse.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed code-spec input. Carries the 1-based line number (0 if unknown).
class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::invalid_argument(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace gqc

#endif  // GQC_ERRORS_HPP
