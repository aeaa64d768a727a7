#include "detm/polynomial.hpp"

#include <algorithm>

#include "detm/errors.hpp"

namespace detm {

Polynomial::Polynomial(std::size_t nvars, MonomialOrder order) : nvars_(nvars), order_(order), terms_(order) {}

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c, MonomialOrder order) {
  Polynomial p(nvars, order);
  p.add_term(Exponent(nvars), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index, MonomialOrder order) {
  if (index >= nvars) throw InputError("variable index out of range");
  Exponent e(nvars);
  e.set(index, 1);
  return monomial(e, 1, order);
}

Polynomial Polynomial::monomial(const Exponent& e, const Rational& c, MonomialOrder order) {
  Polynomial p(e.size(), order);
  p.add_term(e, c);
  return p;
}

Rational Polynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Exponent& e, const Rational& c) {
  if (e.size() != nvars_) throw InputError("exponent length does not match the number of variables");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

unsigned Polynomial::degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const unsigned d = terms_.begin()->first.degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return t.first.degree() == d; });
}

Polynomial Polynomial::with_order(MonomialOrder order) const {
  if (order == order_) return *this;
  Polynomial p(nvars_, order);
  for (const auto& [e, c] : terms_) p.terms_.emplace(e, c);
  return p;
}

const Exponent& Polynomial::leading_monomial() const {
  if (terms_.empty()) throw DomainError("leading monomial of the zero polynomial");
  return terms_.rbegin()->first;
}

std::pair<Exponent, Rational> Polynomial::leading_term() const {
  if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
  return *terms_.rbegin();
}

const Rational& Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw DomainError("leading coefficient of the zero polynomial");
  return terms_.rbegin()->second;
}

void Polynomial::check_same_vars(const Polynomial& other) const {
  if (other.nvars_ != nvars_) throw InputError("polynomials live in rings with different numbers of variables");
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  check_same_vars(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  check_same_vars(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coef] : terms_) coef *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_same_vars(b);
  Polynomial r(a.nvars_, a.order_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Polynomial Polynomial::mul_term(const Exponent& e, const Rational& c) const {
  Polynomial r(nvars_, order_);
  if (sgn(c) == 0) return r;
  // Translation invariance of a monomial order keeps the sorted position; hint at the end.
  for (const auto& [te, tc] : terms_) r.terms_.emplace_hint(r.terms_.end(), te + e, tc * c);
  return r;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(nvars_, 1, order_);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return result;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
  for (const auto& [e, c] : a.terms_) {
    auto it = b.terms_.find(e);
    if (it == b.terms_.end() || it->second != c) return false;
  }
  return true;
}

Rational evaluate(const Polynomial& f, std::span<const Rational> point) {
  if (point.size() != f.num_vars()) throw InputError("point length does not match the number of variables");
  Rational sum = 0;
  Rational term;
  Rational power;
  for (const auto& [e, c] : f.terms()) {
    term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      mpz_pow_ui(power.get_num_mpz_t(), point[i].get_num_mpz_t(), e[i]);
      mpz_pow_ui(power.get_den_mpz_t(), point[i].get_den_mpz_t(), e[i]);
      term *= power;
    }
    sum += term;
  }
  return sum;
}

Integer evaluate_integer(const Polynomial& f, std::span<const Integer> point) {
  if (point.size() != f.num_vars()) throw InputError("point length does not match the number of variables");
  Integer sum = 0;
  Integer term;
  Integer power;
  for (const auto& [e, c] : f.terms()) {
    if (c.get_den() != 1) throw InputError("evaluate_integer requires integer coefficients");
    term = c.get_num();
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      mpz_pow_ui(power.get_mpz_t(), point[i].get_mpz_t(), e[i]);
      term *= power;
    }
    sum += term;
  }
  return sum;
}

Polynomial partial_derivative(const Polynomial& f, const Exponent& a) {
  if (a.size() != f.num_vars()) throw InputError("derivative multi-index length does not match");
  Polynomial r(f.num_vars(), f.order());
  for (const auto& [e, c] : f.terms()) {
    if (!a.divides(e)) continue;
    Rational factor = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (Exponent::value_type k = 0; k < a[i]; ++k) factor *= e[i] - k;
    r.add_term(e - a, factor);
  }
  return r;
}

Polynomial homogenize(const Polynomial& f, std::size_t new_var_position) {
  if (f.is_zero()) throw DomainError("cannot homogenize the zero polynomial");
  if (new_var_position > f.num_vars()) throw InputError("variable position out of range");
  const unsigned d = f.degree();
  Polynomial r(f.num_vars() + 1, f.order());
  for (const auto& [e, c] : f.terms()) r.add_term(insert_coordinate(e, new_var_position, d - e.degree()), c);
  return r;
}

Polynomial dehomogenize(const Polynomial& g, std::size_t var_position) {
  if (var_position >= g.num_vars()) throw InputError("variable position out of range");
  Polynomial r(g.num_vars() - 1, g.order());
  for (const auto& [e, c] : g.terms()) r.add_term(erase_coordinate(e, var_position), c);
  return r;
}

Polynomial compose(const Polynomial& f, std::span<const Polynomial> substitutions) {
  if (substitutions.size() != f.num_vars()) throw InputError("need one substitution per variable");
  if (substitutions.empty()) {
    return f;
  }
  const std::size_t target_vars = substitutions.front().num_vars();
  for (const auto& s : substitutions)
    if (s.num_vars() != target_vars) throw InputError("substitutions must share one ring");
  const MonomialOrder order = substitutions.front().order();
  Polynomial r(target_vars, order);
  for (const auto& [e, c] : f.terms()) {
    Polynomial term = Polynomial::constant(target_vars, c, order);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) term = term * substitutions[i].pow(e[i]);
    r += term;
  }
  return r;
}

bool has_integer_coefficients(const Polynomial& f) {
  return std::all_of(f.terms().begin(), f.terms().end(), [](const auto& t) { return t.second.get_den() == 1; });
}

Polynomial primitive_part(const Polynomial& f) {
  if (f.is_zero()) return f;
  Integer den_lcm = 1;
  for (const auto& [e, c] : f.terms()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  Integer content = 0;
  for (const auto& [e, c] : f.terms()) {
    Integer scaled = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), scaled.get_mpz_t());
  }
  Rational factor(den_lcm, content);
  factor.canonicalize();
  if (sgn(f.leading_coefficient()) < 0) factor = -factor;
  return f * factor;
}

}  // namespace detm
