#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "detm/polynomial.hpp"

namespace detm {

/// Number of monomials of degree exactly k in m variables: binom(k+m-1, m-1).
std::uint64_t monomials_exact_degree(unsigned m, unsigned k);
/// Number of monomials of degree at most k in m variables: binom(k+m, m).
std::uint64_t monomials_up_to_degree(unsigned m, unsigned k);

/// Taylor order nu and vanishing exponent e for a mu x mu determinant in m parameters.
struct ExponentBudget {
  unsigned nu = 0;
  std::uint64_t e = 0;
};

/// Smallest nu with D_m(nu-1) <= mu <= D_m(nu), and
/// e = sum_{i<nu} i L_m(i) + nu (mu - D_m(nu-1)).
ExponentBudget choose_nu(std::uint64_t mu, unsigned m);

/// A nonnegative real kept as its natural logarithm. Every operation rounds upward, so a
/// LogBound never understates the quantity it bounds.
class LogBound {
 public:
  static LogBound zero() { return LogBound(-std::numeric_limits<double>::infinity()); }
  static LogBound from_log(double log_value) { return LogBound(log_value); }
  /// Upper bound for a nonnegative value.
  static LogBound of(double value);

  bool is_zero() const noexcept { return log_ == -std::numeric_limits<double>::infinity(); }
  double log() const noexcept { return log_; }
  /// exp(log), rounded up; +inf when it overflows.
  double value() const;

 private:
  explicit LogBound(double log_value) : log_(log_value) {}
  double log_;
};

/// Nudge a computed double upward past any accumulated rounding error.
double round_up(double x);
/// Nudge downward.
double round_down(double x);
/// Smallest double >= q.
double to_double_up(const Rational& q);

/// Axis-aligned box in R^m with exact rational corners.
struct ParameterBox {
  std::vector<Rational> lo;
  std::vector<Rational> hi;

  static ParameterBox unit(std::size_t m);  // [-1,1]^m
  std::size_t dims() const noexcept { return lo.size(); }
};

/// Upper bound for max over the box and |alpha| <= k of |d^alpha phi_j|.
/// Each derivative is rewritten in coordinates v in [-1,1]^m (u = center + halfwidth * v) and
/// bounded by the sum of the absolute values of its coefficients.
Rational ck_norm_bound(std::span<const Polynomial> components, unsigned k, const ParameterBox& box);

/// l^k * prod(norms), l = norms.size().
LogBound product_norm_bound(std::span<const double> norms, unsigned k);

struct DetBoundInput {
  std::uint64_t mu = 1;
  unsigned m = 1;
  std::vector<double> norms;  // one per row function, nonnegative
  double r = 0.5;             // diameter of the convex set holding the points, 0 < r < 1
};

/// mu! * D_m(nu)^mu * prod(norms) * r^e. Zero when any norm is zero.
LogBound determinant_bound(const DetBoundInput& input);
/// The same bound in exact rational arithmetic; for small mu.
Rational determinant_bound_exact(std::uint64_t mu, unsigned m, std::span<const Rational> norms, const Rational& r);

struct AsymptoticExponents {
  std::vector<double> finite;  // m sigma_i / f at the given delta
  std::vector<double> limit;   // (m+1) a_i / d^(1/m)
  std::vector<double> slack;   // finite - limit
};

/// Throws DomainError when f = 0 (mu <= 1).
AsymptoticExponents asymptotic_exponents(std::span<const Integer> sigma, std::uint64_t mu, unsigned m,
                                         const Integer& d, std::span<const Rational> a);

}  // namespace detm
