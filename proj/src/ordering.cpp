#include "detm/ordering.hpp"

#include "detm/errors.hpp"

namespace detm {

std::strong_ordering MonomialOrder::compare(const Exponent& a, const Exponent& b) const {
  if (a.size() != b.size()) throw InputError("cannot compare exponent vectors of different lengths");
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  switch (kind_) {
    case OrderKind::grlex_left:
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] > b[i] ? std::strong_ordering::less : std::strong_ordering::greater;
      }
      return std::strong_ordering::equal;
    case OrderKind::grevlex:
      for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? std::strong_ordering::greater : std::strong_ordering::less;
      }
      return std::strong_ordering::equal;
  }
  return std::strong_ordering::equal;
}

std::string_view to_string(OrderKind kind) {
  switch (kind) {
    case OrderKind::grlex_left:
      return "grlex-left";
    case OrderKind::grevlex:
      return "grevlex";
  }
  return "?";
}

OrderKind parse_order_kind(std::string_view text) {
  if (text == "grlex-left" || text == "grlex_left") return OrderKind::grlex_left;
  if (text == "grevlex") return OrderKind::grevlex;
  throw InputError("unknown monomial ordering '" + std::string(text) + "'");
}

}  // namespace detm
