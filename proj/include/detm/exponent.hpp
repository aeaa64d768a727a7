#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace detm {

/// Exponent vector of a monomial x^a = x0^a0 ... x{n}^a{n}, with the total degree cached.
class Exponent {
 public:
  using value_type = std::uint32_t;

  Exponent() = default;
  explicit Exponent(std::size_t nvars) : entries_(nvars, 0) {}
  Exponent(std::initializer_list<value_type> entries);
  explicit Exponent(std::vector<value_type> entries);

  std::size_t size() const noexcept { return entries_.size(); }
  unsigned degree() const noexcept { return degree_; }
  value_type operator[](std::size_t i) const { return entries_[i]; }
  std::span<const value_type> entries() const noexcept { return entries_; }

  void set(std::size_t i, value_type v);

  /// True iff this monomial divides `other`.
  bool divides(const Exponent& other) const;

  friend Exponent operator+(const Exponent& a, const Exponent& b);
  /// Componentwise difference; requires b | a.
  friend Exponent operator-(const Exponent& a, const Exponent& b);
  friend bool operator==(const Exponent& a, const Exponent& b) noexcept { return a.entries_ == b.entries_; }

  /// Plain lexicographic order on entries. Not a monomial ordering; used for canonical sorting only.
  friend bool lex_less(const Exponent& a, const Exponent& b) noexcept { return a.entries_ < b.entries_; }

 private:
  std::vector<value_type> entries_;
  unsigned degree_ = 0;
};

Exponent lcm(const Exponent& a, const Exponent& b);
bool coprime(const Exponent& a, const Exponent& b);

/// Insert a new coordinate with value `v` at `pos`.
Exponent insert_coordinate(const Exponent& a, std::size_t pos, Exponent::value_type v);
/// Remove the coordinate at `pos`.
Exponent erase_coordinate(const Exponent& a, std::size_t pos);

/// All exponent vectors of total degree `degree` in `nvars` variables, in plain lex order.
std::vector<Exponent> monomials_of_degree(std::size_t nvars, unsigned degree);

}  // namespace detm
