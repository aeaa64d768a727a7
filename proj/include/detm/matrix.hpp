#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "detm/hilbert.hpp"
#include "detm/points.hpp"

namespace detm {

using IntegerMatrix = std::vector<std::vector<Integer>>;  // row-major

/// Rows are staircase monomials in ascending order, columns are points:
/// entry (e, j) = (x^(j))^e, exact.
struct MonomialMatrix {
  std::vector<Exponent> rows;
  std::vector<IntPoint> cols;
  IntegerMatrix entries;

  std::size_t num_rows() const noexcept { return rows.size(); }
  std::size_t num_cols() const noexcept { return cols.size(); }
};

MonomialMatrix build_matrix(std::span<const IntPoint> points, const Staircase& st);

/// Result of fraction-free Gauss-Jordan elimination.
struct Elimination {
  IntegerMatrix reduced;               // pivot entries all equal `scale`, zero elsewhere in pivot columns
  std::vector<std::size_t> pivot_cols; // ascending
  Integer scale;                       // last pivot (1 when rank is 0)
  std::size_t rank() const noexcept { return pivot_cols.size(); }
};

Elimination gauss_jordan(IntegerMatrix a);
std::size_t exact_rank(const IntegerMatrix& a);

/// Integer basis of {c : sum_e c_e (x^(j))^e = 0 for all j}, one primitive vector per free
/// monomial in ascending staircase order. Its length is mu - rank.
std::vector<std::vector<Integer>> exact_kernel(const MonomialMatrix& mat);

/// Bareiss determinant of a square integer matrix.
Integer determinant(IntegerMatrix a);

IntegerMatrix transpose(const IntegerMatrix& a);

}  // namespace detm
