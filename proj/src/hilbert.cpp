#include "detm/hilbert.hpp"

#include <algorithm>
#include <sstream>

#include "detm/errors.hpp"

namespace detm {

bool Staircase::contains(const Exponent& e) const {
  return std::binary_search(exponents.begin(), exponents.end(), e, order);
}

Staircase staircase(const GroebnerBasis& gb, unsigned delta) {
  gb.require_degree(delta, "staircase");
  Staircase st;
  st.delta = delta;
  st.order = gb.order();
  for (auto& e : monomials_of_degree(gb.num_vars(), delta))
    if (!gb.in_leading_ideal(e)) st.exponents.push_back(std::move(e));
  std::sort(st.exponents.begin(), st.exponents.end(), st.order);
  return st;
}

std::size_t hilbert_function(const GroebnerBasis& gb, unsigned s) {
  gb.require_degree(s, "hilbert_function");
  std::size_t count = 0;
  for (const auto& e : monomials_of_degree(gb.num_vars(), s))
    if (!gb.in_leading_ideal(e)) ++count;
  return count;
}

std::vector<Integer> sigma_vector(const Staircase& st) {
  std::vector<Integer> out;
  if (st.exponents.empty()) return out;
  out.assign(st.exponents.front().size(), 0);
  for (const auto& e : st.exponents)
    for (std::size_t i = 0; i < e.size(); ++i) out[i] += e[i];
  return out;
}

Integer sigma(const GroebnerBasis& gb, std::size_t i, unsigned s) {
  if (i >= gb.num_vars()) throw InputError("variable index out of range");
  gb.require_degree(s, "sigma");
  Integer total = 0;
  for (const auto& e : monomials_of_degree(gb.num_vars(), s))
    if (!gb.in_leading_ideal(e)) total += e[i];
  return total;
}

Rational HilbertPolynomial::operator()(const Rational& s) const {
  Rational acc = 0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * s + *it;
  return acc;
}

std::string HilbertPolynomial::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = coefficients.size(); k-- > 0;) {
    const Rational& c = coefficients[k];
    if (sgn(c) == 0) continue;
    if (!first) out << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) out << '-';
    first = false;
    const Rational mag = abs(c);
    if (k == 0 || mag != 1) out << mag.get_str() << (k > 0 ? "*" : "");
    if (k >= 1) out << 's';
    if (k >= 2) out << '^' << k;
  }
  if (first) out << '0';
  return out.str();
}

namespace {

// Coefficients of the polynomial through (xs[j], ys[j]), by Lagrange expansion.
std::vector<Rational> interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  const std::size_t n = xs.size();
  std::vector<Rational> result(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> basis{1};
    Rational denom = 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == j) continue;
      std::vector<Rational> next(basis.size() + 1, 0);
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] -= basis[k] * xs[i];
      }
      basis = std::move(next);
      denom *= xs[j] - xs[i];
    }
    const Rational scale = ys[j] / denom;
    for (std::size_t k = 0; k < basis.size(); ++k) result[k] += basis[k] * scale;
  }
  while (!result.empty() && sgn(result.back()) == 0) result.pop_back();
  return result;
}

}  // namespace

DimensionDegree dimension_and_degree(const GroebnerBasis& gb, unsigned lo, unsigned hi) {
  if (hi < lo) throw InputError("empty degree window");
  gb.require_degree(hi, "dimension_and_degree");
  std::vector<Rational> hf;
  for (unsigned s = lo; s <= hi; ++s) hf.emplace_back(static_cast<unsigned long>(hilbert_function(gb, s)));

  unsigned longest_prefix = 0;
  for (unsigned start = lo; start + 2 <= hi; ++start) {
    for (unsigned k = 0; start + k + 2 <= hi; ++k) {
      std::vector<Rational> xs, ys;
      for (unsigned s = start; s <= start + k; ++s) {
        xs.emplace_back(s);
        ys.push_back(hf[s - lo]);
      }
      HilbertPolynomial p{interpolate(xs, ys)};
      unsigned s = start + k + 1;
      for (; s <= hi; ++s)
        if (p(Rational(s)) != hf[s - lo]) break;
      longest_prefix = std::max(longest_prefix, s - start);
      if (s <= hi) continue;
      DimensionDegree out;
      out.polynomial = std::move(p);
      out.stable_from = start;
      if (out.polynomial.coefficients.empty()) {
        out.dimension = 0;
        out.degree = 0;
        return out;
      }
      out.dimension = static_cast<unsigned>(out.polynomial.degree());
      Rational d = out.polynomial.coefficients.back();
      for (unsigned i = 2; i <= out.dimension; ++i) d *= i;
      if (d.get_den() != 1) throw DomainError("Hilbert polynomial fit has a non-integral degree");
      out.degree = d.get_num();
      return out;
    }
  }
  throw DomainError("window too small: no single polynomial fits HF on [" + std::to_string(lo) + ", " +
                    std::to_string(hi) + "]; longest consistent run has " + std::to_string(longest_prefix) +
                    " values");
}

std::vector<Rational> a_estimates(const GroebnerBasis& gb, unsigned s) {
  if (s == 0) throw DomainError("a_estimates needs s >= 1");
  const Staircase st = staircase(gb, s);
  if (st.size() == 0) throw DomainError("degenerate ideal: HF(s) = 0");
  const auto sig = sigma_vector(st);
  const Rational denom(Integer(s) * Integer(static_cast<unsigned long>(st.size())));
  std::vector<Rational> out;
  for (const auto& v : sig) {
    Rational a(v);
    a /= denom;
    out.push_back(a);
  }
  return out;
}

AffineBoundContext::AffineBoundContext(const Ideal& affine, unsigned max_s)
    : gb_h_(groebner(homogenization(affine), MonomialOrder(OrderKind::grlex_left), std::max(max_s, 12u))),
      gb_j_(groebner(with_generator(gb_h_.ideal(), Polynomial::variable(affine.num_vars() + 1, 0)),
                     MonomialOrder(OrderKind::grlex_left), std::max(max_s, 12u))) {
  const unsigned cap = std::max(max_s, 12u);
  dimension_ = dimension_and_degree(gb_h_, 0, cap).dimension;
  for (unsigned t = 0; t <= cap; ++t) hf_j_.push_back(hilbert_function(gb_j_, t));
}

AffineOrderingBound AffineBoundContext::at(unsigned s) const {
  if (s == 0) throw DomainError("affine ordering bound needs s >= 1");
  if (s >= hf_j_.size()) throw ContractError("affine ordering bound: s above the precomputed cap");
  const Staircase st = staircase(gb_h_, s);
  if (st.size() == 0) throw DomainError("degenerate ideal: HF(s) = 0");
  const auto sig = sigma_vector(st);
  const Integer denom = Integer(s) * Integer(static_cast<unsigned long>(st.size()));

  AffineOrderingBound out;
  out.s = s;
  Integer tail = 0;
  for (std::size_t i = 1; i < sig.size(); ++i) tail += sig[i];
  out.lhs = Rational(tail, denom);
  out.lhs.canonicalize();
  out.a0 = Rational(sig[0], denom);
  out.a0.canonicalize();
  Integer section = 0;
  for (unsigned t = 1; t <= s; ++t) section += Integer(t) * Integer(static_cast<unsigned long>(hf_j_[t]));
  out.intermediate = Rational(section, denom);
  out.intermediate.canonicalize();
  out.holds = out.lhs <= out.intermediate;
  out.dimension = dimension_;
  out.limit = Rational(dimension_, dimension_ + 1);
  return out;
}

AffineOrderingBound affine_ordering_bound(const Ideal& affine, unsigned s) {
  return AffineBoundContext(affine, s).at(s);
}

}  // namespace detm
