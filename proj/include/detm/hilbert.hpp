#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "detm/groebner.hpp"

namespace detm {

/// M(delta): the degree-delta monomials outside the leading-term ideal, ascending in the basis
/// order. These index the rows of every determinant the engine builds.
struct Staircase {
  unsigned delta = 0;
  MonomialOrder order;
  std::vector<Exponent> exponents;

  std::size_t size() const noexcept { return exponents.size(); }
  bool contains(const Exponent& e) const;
};

Staircase staircase(const GroebnerBasis& gb, unsigned delta);

/// Number of degree-s monomials outside LT(I).
std::size_t hilbert_function(const GroebnerBasis& gb, unsigned s);

/// Sum of the i-th exponent over the degree-s staircase.
Integer sigma(const GroebnerBasis& gb, std::size_t i, unsigned s);
std::vector<Integer> sigma_vector(const Staircase& st);

/// Univariate polynomial over Q in the variable s, coefficients low to high.
struct HilbertPolynomial {
  std::vector<Rational> coefficients;

  Rational operator()(const Rational& s) const;
  std::size_t degree() const { return coefficients.empty() ? 0 : coefficients.size() - 1; }
  std::string to_string() const;
};

struct DimensionDegree {
  unsigned dimension = 0;     // m
  Integer degree;             // d = m! * leading coefficient
  HilbertPolynomial polynomial;
  unsigned stable_from = 0;   // smallest window point the fit was checked on
};

/// Fit a Hilbert polynomial to HF on [lo, hi]. Tries the earliest start and lowest degree
/// whose interpolant through degree+1 consecutive values predicts every remaining value in the
/// window (at least two predictions). Throws DomainError("window too small") otherwise.
DimensionDegree dimension_and_degree(const GroebnerBasis& gb, unsigned lo, unsigned hi);

/// a_i(s) = sigma_i(s) / (s HF(s)), exact. Entries lie in [0,1] and sum to 1.
/// The values are finite-s estimates of limits that are only approached at rate O(1/s).
std::vector<Rational> a_estimates(const GroebnerBasis& gb, unsigned s);

struct AffineOrderingBound {
  unsigned s = 0;
  Rational lhs;            // (sigma_1 + ... + sigma_n)(s) / (s HF_{I^h}(s))
  Rational a0;             // sigma_0(s) / (s HF_{I^h}(s))
  Rational intermediate;   // sum_{t<=s} t HF_J(t) / (s HF_{I^h}(s)),  J = I^h + (x0)
  bool holds = false;      // lhs <= intermediate, exact
  Rational limit;          // m/(m+1)
  unsigned dimension = 0;
};

/// Precomputed bases for repeated affine ordering-bound queries.
class AffineBoundContext {
 public:
  /// Bases are truncated at `max_s`; dimension is read off HF of I^h on [0, max(probe window)].
  AffineBoundContext(const Ideal& affine, unsigned max_s);

  AffineOrderingBound at(unsigned s) const;
  const GroebnerBasis& homogenized() const noexcept { return gb_h_; }
  const GroebnerBasis& hyperplane_section() const noexcept { return gb_j_; }
  unsigned dimension() const noexcept { return dimension_; }

 private:
  GroebnerBasis gb_h_;
  GroebnerBasis gb_j_;
  unsigned dimension_ = 0;
  std::vector<std::size_t> hf_j_;
};

/// One-shot form of AffineBoundContext::at under grlex_left.
AffineOrderingBound affine_ordering_bound(const Ideal& affine, unsigned s);

}  // namespace detm
