#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "detm/ideal.hpp"

namespace detm {

struct GroebnerOptions {
  /// Discard S-pairs whose lcm has degree above this. Only sound for homogeneous ideals.
  std::optional<unsigned> degree_cap;
  /// Safety valve for unbounded runs on non-homogeneous input.
  std::size_t max_reductions = 1'000'000;
};

/// Reduced Groebner basis (monic, interreduced, sorted by leading monomial) of an ideal,
/// possibly truncated at a degree.
class GroebnerBasis {
 public:
  GroebnerBasis(Ideal ideal, MonomialOrder order, std::vector<Polynomial> basis, std::optional<unsigned> cap);

  const Ideal& ideal() const noexcept { return ideal_; }
  MonomialOrder order() const noexcept { return order_; }
  const std::vector<Polynomial>& basis() const noexcept { return basis_; }
  const std::vector<Exponent>& leading_monomials() const noexcept { return leading_; }
  std::optional<unsigned> truncation_degree() const noexcept { return cap_; }
  std::size_t num_vars() const noexcept { return ideal_.num_vars(); }

  /// True iff x^e lies in the leading-term ideal (as certified up to the cap).
  bool in_leading_ideal(const Exponent& e) const;

  /// Throws ContractError when `degree` exceeds the truncation cap.
  void require_degree(unsigned degree, const char* what) const;

 private:
  Ideal ideal_;
  MonomialOrder order_;
  std::vector<Polynomial> basis_;
  std::vector<Exponent> leading_;
  std::optional<unsigned> cap_;
};

/// Buchberger with the normal selection strategy and the coprime-leading-monomial criterion.
/// A degree cap on a non-homogeneous ideal is a ContractError.
GroebnerBasis groebner(const Ideal& ideal, MonomialOrder order, std::optional<unsigned> degree_cap = std::nullopt,
                       const GroebnerOptions& options = {});

/// Fully reduced remainder of f modulo the basis. f is in the ideal iff the result is zero.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

/// Remainder of f by an arbitrary list of divisors (division algorithm, full reduction).
Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& divisors);

/// The homogenization I^h of an affine ideal, computed by homogenizing a Groebner basis for a
/// graded order. The new variable is x0 (index 0).
Ideal homogenization(const Ideal& affine);

/// I^h + (x0) style sums: the ideal generated by `ideal` and one extra generator.
Ideal with_generator(const Ideal& ideal, const Polynomial& extra);

}  // namespace detm
