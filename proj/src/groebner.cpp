#include "detm/groebner.hpp"

#include <algorithm>
#include <string>
#include <tuple>

#include "detm/errors.hpp"

namespace detm {

GroebnerBasis::GroebnerBasis(Ideal ideal, MonomialOrder order, std::vector<Polynomial> basis,
                             std::optional<unsigned> cap)
    : ideal_(std::move(ideal)), order_(order), basis_(std::move(basis)), cap_(cap) {
  leading_.reserve(basis_.size());
  for (const auto& g : basis_) leading_.push_back(g.leading_monomial());
}

bool GroebnerBasis::in_leading_ideal(const Exponent& e) const {
  return std::any_of(leading_.begin(), leading_.end(), [&](const Exponent& lm) { return lm.divides(e); });
}

void GroebnerBasis::require_degree(unsigned degree, const char* what) const {
  if (cap_ && degree > *cap_)
    throw ContractError(std::string(what) + ": degree " + std::to_string(degree) +
                        " exceeds the Groebner basis truncation degree " + std::to_string(*cap_));
}

Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& divisors) {
  if (divisors.empty()) return f;
  const MonomialOrder order = divisors.front().order();
  Polynomial p = f.with_order(order);
  Polynomial r(f.num_vars(), order);
  while (!p.is_zero()) {
    auto [e, c] = p.leading_term();
    const Polynomial* divisor = nullptr;
    for (const auto& g : divisors) {
      if (g.leading_monomial().divides(e)) {
        divisor = &g;
        break;
      }
    }
    if (divisor != nullptr) {
      p -= divisor->mul_term(e - divisor->leading_monomial(), c / divisor->leading_coefficient());
    } else {
      r.add_term(e, c);
      p.add_term(e, -c);
    }
  }
  return r;
}

namespace {

Polynomial monic(Polynomial p) {
  if (p.is_zero()) return p;
  const Rational inv = 1 / p.leading_coefficient();
  return p * inv;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const Exponent l = lcm(f.leading_monomial(), g.leading_monomial());
  return f.mul_term(l - f.leading_monomial(), 1 / f.leading_coefficient()) -
         g.mul_term(l - g.leading_monomial(), 1 / g.leading_coefficient());
}

struct Pair {
  unsigned lcm_degree;
  std::size_t i;
  std::size_t j;
};

std::vector<Polynomial> interreduce(std::vector<Polynomial> g, MonomialOrder order) {
  // Drop elements whose leading monomial is divisible by another's (first occurrence wins).
  std::vector<Polynomial> minimal;
  for (std::size_t a = 0; a < g.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < g.size() && !redundant; ++b) {
      if (a == b) continue;
      const auto& la = g[a].leading_monomial();
      const auto& lb = g[b].leading_monomial();
      if (lb.divides(la) && (!(la == lb) || b < a)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[a]);
  }
  std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order(a.leading_monomial(), b.leading_monomial());
  });
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    std::vector<Polynomial> others;
    for (std::size_t b = 0; b < minimal.size(); ++b)
      if (b != a) others.push_back(minimal[b]);
    auto [e, c] = minimal[a].leading_term();
    Polynomial tail = minimal[a] - Polynomial::monomial(e, c, order);
    minimal[a] = monic(Polynomial::monomial(e, c, order) + reduce(tail, others));
  }
  return minimal;
}

}  // namespace

GroebnerBasis groebner(const Ideal& ideal, MonomialOrder order, std::optional<unsigned> degree_cap,
                       const GroebnerOptions& options) {
  if (!degree_cap) degree_cap = options.degree_cap;
  if (degree_cap && !ideal.homogeneous())
    throw ContractError("degree-truncated Groebner basis requested for a non-homogeneous ideal");

  std::vector<Polynomial> basis;
  std::vector<Pair> pairs;
  auto add = [&](Polynomial h) {
    const std::size_t n = basis.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Exponent l = lcm(basis[i].leading_monomial(), h.leading_monomial());
      if (degree_cap && l.degree() > *degree_cap) continue;
      if (coprime(basis[i].leading_monomial(), h.leading_monomial())) continue;
      pairs.push_back(Pair{l.degree(), i, n});
    }
    basis.push_back(std::move(h));
  };

  for (const auto& g : ideal.generators()) {
    Polynomial h = monic(reduce(g.with_order(order), basis));
    if (!h.is_zero()) add(std::move(h));
  }

  std::size_t reductions = 0;
  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
      return std::tie(a.lcm_degree, a.j, a.i) < std::tie(b.lcm_degree, b.j, b.i);
    });
    const Pair p = *best;
    pairs.erase(best);
    if (++reductions > options.max_reductions)
      throw DomainError("Buchberger exceeded the reduction limit of " + std::to_string(options.max_reductions));
    Polynomial h = monic(reduce(s_polynomial(basis[p.i], basis[p.j]), basis));
    if (!h.is_zero()) add(std::move(h));
  }

  return GroebnerBasis(ideal, order, interreduce(std::move(basis), order), degree_cap);
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  if (f.num_vars() != gb.num_vars()) throw InputError("polynomial and basis live in different rings");
  if (!f.is_zero()) gb.require_degree(f.degree(), "normal_form");
  if (gb.basis().empty()) return f.with_order(gb.order());
  return reduce(f, gb.basis());
}

Ideal homogenization(const Ideal& affine) {
  if (affine.is_zero_ideal()) return Ideal(affine.num_vars() + 1, {});
  const GroebnerBasis gb = groebner(affine, MonomialOrder(OrderKind::grlex_left));
  std::vector<Polynomial> gens;
  for (const auto& g : gb.basis()) gens.push_back(homogenize(g, 0).with_order(MonomialOrder{}));
  return Ideal(affine.num_vars() + 1, std::move(gens));
}

Ideal with_generator(const Ideal& ideal, const Polynomial& extra) {
  std::vector<Polynomial> gens = ideal.generators();
  gens.push_back(extra);
  return Ideal(ideal.num_vars(), std::move(gens));
}

}  // namespace detm
