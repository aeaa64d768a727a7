#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "detm/polynomial.hpp"

namespace detm {

/// Variable names used to read and print polynomials. Index i of a polynomial maps to names[i].
class VariableNames {
 public:
  /// x{offset}, x{offset+1}, ..., for `count` variables.
  static VariableNames indexed(std::size_t count, std::size_t offset = 0);
  explicit VariableNames(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& operator[](std::size_t i) const { return names_[i]; }
  /// Index of `name`, or -1.
  long find(std::string_view name) const;

 private:
  std::vector<std::string> names_;
};

/// Parse one polynomial. Grammar: integer or p/q literals, variables, + - * ^ and parentheses.
/// Implicit multiplication is rejected. `line` is used for error positions only.
Polynomial parse_polynomial(std::string_view text, const VariableNames& names, MonomialOrder order = MonomialOrder{},
                            std::size_t line = 1);

/// Terms in descending order under `order`.
std::string format_polynomial(const Polynomial& f, const VariableNames& names, MonomialOrder order);
std::string format_polynomial(const Polynomial& f, const VariableNames& names);

}  // namespace detm
