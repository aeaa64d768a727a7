#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "detm/ideal.hpp"

namespace detm {

using IntPoint = std::vector<std::int64_t>;

/// Coordinate bounds (B_0, ..., B_n), all positive. Integer coordinates range over
/// [-floor(B_i), floor(B_i)].
class HeightBox {
 public:
  explicit HeightBox(std::vector<double> bounds);
  static HeightBox uniform(std::size_t count, double b) { return HeightBox(std::vector<double>(count, b)); }

  std::size_t size() const noexcept { return bounds_.size(); }
  double operator[](std::size_t i) const { return bounds_[i]; }
  const std::vector<double>& bounds() const noexcept { return bounds_; }
  std::int64_t integer_bound(std::size_t i) const;
  /// Number of integer vectors in the box, as a double (it can be astronomically large).
  double lattice_count() const;

 private:
  std::vector<double> bounds_;
};

enum class PointMode { affine, projective };

struct PointSet {
  PointMode mode = PointMode::affine;
  std::vector<IntPoint> points;  // sorted lexicographically
  HeightBox box{std::vector<double>{1.0}};
};

struct EnumerationOptions {
  double budget = 1e9;          // maximum number of lattice vectors in the box
  unsigned jobs = 1;
  bool linear_solve = true;     // solve the first generator for a coordinate it is linear in
};

/// X(Z, B): integer points with max |x_i| <= B on the affine variety.
PointSet enumerate_affine(const Ideal& ideal, double bound, const EnumerationOptions& options = {});

/// S(X, B) up to sign and scaling: primitive integer vectors with first nonzero entry positive,
/// |x_i| <= B_i, killing every generator of the homogeneous ideal.
PointSet enumerate_projective(const Ideal& ideal, const HeightBox& box, const EnumerationOptions& options = {});

/// Smallest i attaining max_j |x_j| / B_j, compared exactly.
std::size_t point_class(const IntPoint& x, const HeightBox& box);

/// Split a projective point set into the classes S_0, ..., S_n.
std::vector<PointSet> partition_classes(const PointSet& points, const HeightBox& box);

/// (x_0 / B_0, ..., x_n / B_n), exact. Throws ContractError when x is outside the box.
std::vector<Rational> tau_normalize(const IntPoint& x, const HeightBox& box);

std::vector<Integer> to_integers(const IntPoint& x);
/// True iff every generator vanishes at x (exact).
bool kills_all(const Ideal& ideal, const IntPoint& x);

}  // namespace detm
