#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "detm/exponent.hpp"

namespace detm {

enum class OrderKind {
  /// Graded; at equal degree a < b iff the left-most nonzero entry of a - b is positive,
  /// so x0 is the smallest variable.
  grlex_left,
  /// Graded reverse lexicographic with x0 > x1 > ... > xn.
  grevlex,
};

/// A graded monomial ordering. Usable as a strict-weak-order comparator.
class MonomialOrder {
 public:
  constexpr MonomialOrder() = default;
  constexpr explicit MonomialOrder(OrderKind kind) : kind_(kind) {}

  OrderKind kind() const noexcept { return kind_; }

  /// Three-way comparison; throws InputError on length mismatch.
  std::strong_ordering compare(const Exponent& a, const Exponent& b) const;

  bool operator()(const Exponent& a, const Exponent& b) const { return compare(a, b) < 0; }

  friend bool operator==(MonomialOrder, MonomialOrder) = default;

 private:
  OrderKind kind_ = OrderKind::grlex_left;
};

std::string_view to_string(OrderKind kind);
/// Accepts "grlex-left", "grlex_left", "grevlex".
OrderKind parse_order_kind(std::string_view text);

}  // namespace detm
