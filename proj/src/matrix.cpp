#include "detm/matrix.hpp"

#include <numeric>
#include <utility>

#include "detm/errors.hpp"

namespace detm {

namespace {

Integer monomial_value(const Exponent& e, const IntPoint& x) {
  Integer v = 1;
  Integer base;
  Integer power;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (e[i] == 0) continue;
    base = static_cast<long>(x[i]);
    mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), e[i]);
    v *= power;
  }
  return v;
}

}  // namespace

MonomialMatrix build_matrix(std::span<const IntPoint> points, const Staircase& st) {
  MonomialMatrix mat;
  mat.rows = st.exponents;
  mat.cols.assign(points.begin(), points.end());
  mat.entries.assign(mat.rows.size(), std::vector<Integer>(points.size()));
  for (std::size_t j = 0; j < points.size(); ++j) {
    if (!st.exponents.empty() && points[j].size() != st.exponents.front().size())
      throw InputError("point dimension does not match the staircase");
    for (std::size_t r = 0; r < mat.rows.size(); ++r) mat.entries[r][j] = monomial_value(mat.rows[r], points[j]);
  }
  return mat;
}

IntegerMatrix transpose(const IntegerMatrix& a) {
  if (a.empty()) return {};
  IntegerMatrix t(a.front().size(), std::vector<Integer>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

// Fraction-free Gauss-Jordan: every entry stays a minor of the input, so the division by the
// previous pivot is exact.
Elimination gauss_jordan(IntegerMatrix a) {
  Elimination out;
  out.scale = 1;
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a.front().size();
  Integer prev = 1;
  Integer tmp;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const Integer pivot = a[r][c];
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const Integer factor = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) {
        if (j == c) continue;
        tmp = pivot * a[i][j] - factor * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = pivot;
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.scale = prev;
  out.reduced = std::move(a);
  return out;
}

std::size_t exact_rank(const IntegerMatrix& a) { return gauss_jordan(a).rank(); }

std::vector<std::vector<Integer>> exact_kernel(const MonomialMatrix& mat) {
  const std::size_t mu = mat.num_rows();
  // Equations: one per point, unknowns: one coefficient per staircase monomial.
  IntegerMatrix system = transpose(mat.entries);
  if (system.empty()) system.assign(0, std::vector<Integer>(mu));
  const Elimination el = gauss_jordan(std::move(system));

  std::vector<bool> is_pivot(mu, false);
  for (auto c : el.pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<Integer>> basis;
  for (std::size_t f = 0; f < mu; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Integer> v(mu);
    v[f] = el.scale;
    for (std::size_t k = 0; k < el.pivot_cols.size(); ++k) v[el.pivot_cols[k]] = -el.reduced[k][f];
    Integer g = 0;
    for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    basis.push_back(std::move(v));
  }
  return basis;
}

Integer determinant(IntegerMatrix a) {
  const std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw InputError("determinant needs a square matrix");
  if (n == 0) return 1;
  int sign = 1;
  Integer prev = 1;
  Integer tmp;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        tmp = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k][k];
  }
  return sign < 0 ? Integer(-a[n - 1][n - 1]) : a[n - 1][n - 1];
}

}  // namespace detm
