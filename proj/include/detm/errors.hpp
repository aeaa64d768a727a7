#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace detm {

/// Malformed user input: bad text, wrong lengths, unknown variables.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Text that does not parse. Positions are 1-based.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// An operation was asked for a value it is not defined at (zero polynomial, HF = 0, f = 0).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A precondition of the caller was violated (degree above a truncation cap, non-homogeneous input).
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Exhaustive search would exceed the configured budget.
class BudgetError : public std::runtime_error {
 public:
  BudgetError(const std::string& what, double required, double budget)
      : std::runtime_error(what), required_(required), budget_(budget) {}

  double required() const noexcept { return required_; }
  double budget() const noexcept { return budget_; }

 private:
  double required_;
  double budget_;
};

}  // namespace detm
