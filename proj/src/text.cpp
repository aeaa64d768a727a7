#include "detm/text.hpp"

#include <cctype>
#include <sstream>

#include "detm/errors.hpp"

namespace detm {

VariableNames VariableNames::indexed(std::size_t count, std::size_t offset) {
  std::vector<std::string> names;
  names.reserve(count);
  for (std::size_t i = 0; i < count; ++i) names.push_back("x" + std::to_string(offset + i));
  return VariableNames(std::move(names));
}

VariableNames::VariableNames(std::vector<std::string> names) : names_(std::move(names)) {}

long VariableNames::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<long>(i);
  return -1;
}

namespace {

// Recursive-descent parser:
//   expr   := term (('+' | '-') term)*
//   term   := unary ('*' unary)*
//   unary  := '-' unary | '+' unary | power
//   power  := atom ('^' digits)?
//   atom   := digits ('/' digits)? | name | '(' expr ')'
class Parser {
 public:
  Parser(std::string_view text, const VariableNames& names, MonomialOrder order, std::size_t line)
      : text_(text), names_(names), order_(order), line_(line) {}

  Polynomial parse() {
    skip_space();
    if (at_end()) fail("empty polynomial");
    Polynomial p = expr();
    skip_space();
    if (!at_end()) fail(std::string("unexpected '") + peek() + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_, pos_ + 1, what); }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    while (accept('*')) acc = acc * unary();
    // Anything that can start an atom right after a factor is implicit multiplication.
    skip_space();
    if (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '(' || peek() == '_'))
      fail("implicit multiplication is not allowed; use '*'");
    return acc;
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (!accept('^')) return base;
    skip_space();
    if (peek() == '-') fail("negative exponent");
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("exponent must be a nonnegative integer");
    Integer k = digits();
    if (k > 100000) fail("exponent too large");
    return base.pow(static_cast<unsigned>(k.get_ui()));
  }

  Integer digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Polynomial atom() {
    skip_space();
    if (at_end()) fail("unexpected end of input");
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Rational value(digits());
      if (accept('/')) {
        skip_space();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a denominator");
        Integer den = digits();
        if (den == 0) fail("zero denominator");
        value /= Rational(den);
      }
      return Polynomial::constant(names_.size(), value, order_);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      const long idx = names_.find(name);
      if (idx < 0) {
        pos_ = start;
        fail("unknown variable '" + std::string(name) + "'");
      }
      return Polynomial::variable(names_.size(), static_cast<std::size_t>(idx), order_);
    }
    if (accept('(')) {
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  const VariableNames& names_;
  MonomialOrder order_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const VariableNames& names, MonomialOrder order,
                            std::size_t line) {
  return Parser(text, names, order, line).parse();
}

std::string format_polynomial(const Polynomial& f, const VariableNames& names, MonomialOrder order) {
  if (names.size() != f.num_vars()) throw InputError("variable name count does not match the polynomial");
  if (f.is_zero()) return "0";
  const Polynomial sorted = f.with_order(order);
  std::ostringstream out;
  bool first = true;
  for (auto it = sorted.terms().rbegin(); it != sorted.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << '-';
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (mag != 1 || e.degree() == 0) {
      out << mag.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) out << '*';
      out << names[i];
      if (e[i] > 1) out << '^' << e[i];
      wrote = true;
    }
  }
  return out.str();
}

std::string format_polynomial(const Polynomial& f, const VariableNames& names) {
  return format_polynomial(f, names, f.order());
}

}  // namespace detm
