#pragma once
// Reference implementations used only by the tests. Deliberately naive and independent of the
// library code paths they check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "detm/ideal.hpp"
#include "detm/points.hpp"
#include "detm/polynomial.hpp"
#include "detm/text.hpp"

namespace oracle {

using detm::Exponent;
using detm::Integer;
using detm::IntPoint;
using detm::Polynomial;
using detm::Rational;

/// Canonical p/q; gmpxx leaves two-argument constructions unreduced.
inline Rational q(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string corpus(const std::string& name) { return std::string(DETM_CORPUS_DIR) + "/" + name; }

/// Exponents of total degree d in n variables, any order.
inline std::vector<std::vector<unsigned>> monomials(std::size_t n, unsigned d) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur(n, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i + 1 == n) {
      cur[i] = left;
      out.push_back(cur);
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      cur[i] = k;
      rec(i + 1, left - k);
    }
  };
  if (n == 0) return out;
  rec(0, d);
  return out;
}

/// Rank over Q by plain Gaussian elimination on rationals.
inline std::size_t rank(std::vector<std::vector<Rational>> a) {
  std::size_t r = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      if (a[i][c] == 0) continue;
      const Rational f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

/// Determinant over Q by elimination.
inline Rational det(std::vector<std::vector<Rational>> a) {
  Rational d = 1;
  const std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      d = -d;
    }
    d *= a[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      const Rational f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return d;
}

/// HF_I(s) = dim K[x]_s - rank of {x^beta g : g generator, |beta| = s - deg g}. Homogeneous I.
inline std::size_t hilbert_oracle(const detm::Ideal& ideal, unsigned s) {
  const std::size_t n = ideal.num_vars();
  const auto mons = monomials(n, s);
  std::vector<std::vector<Rational>> rows;
  for (const auto& g : ideal.generators()) {
    const unsigned dg = g.degree();
    if (dg > s) continue;
    for (const auto& beta : monomials(n, s - dg)) {
      std::vector<Rational> row(mons.size());
      for (const auto& [e, c] : g.terms()) {
        std::vector<unsigned> sum(n);
        for (std::size_t i = 0; i < n; ++i) sum[i] = e[i] + beta[i];
        const auto it = std::find(mons.begin(), mons.end(), sum);
        row[static_cast<std::size_t>(it - mons.begin())] += c;
      }
      rows.push_back(std::move(row));
    }
  }
  return mons.size() - rank(std::move(rows));
}

inline Integer binom(unsigned n, unsigned k) {
  // Pascal's triangle, no library binomial.
  std::vector<Integer> row{1};
  for (unsigned i = 1; i <= n; ++i) {
    std::vector<Integer> next(i + 1);
    next[0] = next[i] = 1;
    for (unsigned j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  return k <= n ? row[k] : Integer(0);
}

inline bool vanishes(const detm::Ideal& ideal, const IntPoint& x) {
  std::vector<Rational> q;
  for (auto v : x) q.emplace_back(static_cast<long>(v));
  for (const auto& g : ideal.generators())
    if (detm::evaluate(g, q) != 0) return false;
  return true;
}

/// Full scan of [-B, B]^n with exact evaluation; no shortcuts.
inline std::vector<IntPoint> affine_points(const detm::Ideal& ideal, long b) {
  const std::size_t n = ideal.num_vars();
  std::vector<IntPoint> out;
  IntPoint x(n, -b);
  for (;;) {
    if (vanishes(ideal, x)) out.push_back(x);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (x[i] < b) {
        ++x[i];
        break;
      }
      x[i] = -b;
      if (i == 0) {
        std::sort(out.begin(), out.end());
        return out;
      }
    }
    if (n == 0) return out;
  }
}

/// Full scan with gcd and sign filtering.
inline std::vector<IntPoint> projective_points(const detm::Ideal& ideal, const std::vector<long>& bounds) {
  const std::size_t n = bounds.size();
  std::vector<IntPoint> out;
  IntPoint x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = -bounds[i];
  for (;;) {
    std::int64_t g = 0, first = 0;
    for (auto v : x) {
      g = std::gcd(g, v);
      if (first == 0) first = v;
    }
    if (g == 1 && first > 0 && vanishes(ideal, x)) out.push_back(x);
    std::size_t i = n;
    bool moved = false;
    while (i > 0) {
      --i;
      if (x[i] < bounds[i]) {
        ++x[i];
        moved = true;
        break;
      }
      x[i] = -bounds[i];
    }
    if (!moved) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline Polynomial random_poly(std::mt19937_64& rng, std::size_t nvars, unsigned max_degree, std::size_t terms,
                              detm::MonomialOrder order = detm::MonomialOrder{}) {
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  std::uniform_int_distribution<std::size_t> var(0, nvars - 1);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 4);
  Polynomial f(nvars, order);
  for (std::size_t t = 0; t < terms; ++t) {
    std::vector<std::uint32_t> e(nvars, 0);
    const unsigned d = deg(rng);
    for (unsigned k = 0; k < d; ++k) ++e[var(rng)];
    Rational c(num(rng), den(rng));
    c.canonicalize();
    f.add_term(Exponent(e), c);
  }
  return f;
}

inline std::vector<Rational> random_point(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> num(-12, 12);
  std::uniform_int_distribution<long> den(1, 5);
  std::vector<Rational> p;
  for (std::size_t i = 0; i < n; ++i) {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    p.push_back(q);
  }
  return p;
}

inline Polynomial parse(const std::string& text, std::size_t nvars,
                        detm::MonomialOrder order = detm::MonomialOrder{}) {
  return detm::parse_polynomial(text, detm::VariableNames::indexed(nvars, 0), order);
}

}  // namespace oracle
