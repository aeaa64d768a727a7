#pragma once

#include <cstddef>
#include <gmpxx.h>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "detm/exponent.hpp"
#include "detm/ordering.hpp"

namespace detm {

using Rational = mpq_class;
using Integer = mpz_class;

/// Sparse multivariate polynomial over Q.
///
/// Terms are kept in a map sorted ascending under the polynomial's monomial order, so the
/// leading term is the last entry. No stored coefficient is ever zero; the zero polynomial is
/// the empty map. Binary operations require equal variable counts and produce a result in the
/// left operand's order.
class Polynomial {
 public:
  using TermMap = std::map<Exponent, Rational, MonomialOrder>;

  explicit Polynomial(std::size_t nvars, MonomialOrder order = MonomialOrder{});

  static Polynomial constant(std::size_t nvars, const Rational& c, MonomialOrder order = MonomialOrder{});
  static Polynomial variable(std::size_t nvars, std::size_t index, MonomialOrder order = MonomialOrder{});
  static Polynomial monomial(const Exponent& e, const Rational& c, MonomialOrder order = MonomialOrder{});

  std::size_t num_vars() const noexcept { return nvars_; }
  MonomialOrder order() const noexcept { return order_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Coefficient of x^e (zero when absent).
  Rational coefficient(const Exponent& e) const;

  /// Adds c*x^e, dropping the term if it cancels.
  void add_term(const Exponent& e, const Rational& c);

  /// Maximum total degree over the support; 0 for the zero polynomial.
  unsigned degree() const;
  /// Recomputed from the support on every call.
  bool is_homogeneous() const;

  /// Same polynomial, terms re-keyed under another order.
  Polynomial with_order(MonomialOrder order) const;

  const Exponent& leading_monomial() const;
  std::pair<Exponent, Rational> leading_term() const;
  const Rational& leading_coefficient() const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;

  /// Multiply by the term c*x^e.
  Polynomial mul_term(const Exponent& e, const Rational& c) const;

  Polynomial pow(unsigned k) const;

  /// Equality of term sets, independent of the order the terms are keyed by.
  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void check_same_vars(const Polynomial& other) const;

  std::size_t nvars_;
  MonomialOrder order_;
  TermMap terms_;
};

Rational evaluate(const Polynomial& f, std::span<const Rational> point);
/// Exact evaluation at an integer point for polynomials with integer coefficients.
Integer evaluate_integer(const Polynomial& f, std::span<const Integer> point);

/// Iterated formal derivative d^a f.
Polynomial partial_derivative(const Polynomial& f, const Exponent& a);

/// Homogenize to degree deg f with a new variable inserted at `new_var_position`.
Polynomial homogenize(const Polynomial& f, std::size_t new_var_position);
/// Substitute 1 for the variable at `var_position` and drop it.
Polynomial dehomogenize(const Polynomial& g, std::size_t var_position);

/// Substitute polynomials (all in the same ring) for each variable of f.
Polynomial compose(const Polynomial& f, std::span<const Polynomial> substitutions);

/// Content-normalized integer polynomial: coefficients coprime integers, leading coefficient positive.
Polynomial primitive_part(const Polynomial& f);
bool has_integer_coefficients(const Polynomial& f);

}  // namespace detm
