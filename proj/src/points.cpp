#include "detm/points.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>

#include "detm/errors.hpp"
#include "detm/parallel.hpp"

namespace detm {

HeightBox::HeightBox(std::vector<double> bounds) : bounds_(std::move(bounds)) {
  if (bounds_.empty()) throw InputError("height box needs at least one bound");
  for (double b : bounds_)
    if (!(b > 0) || !std::isfinite(b)) throw InputError("height bounds must be positive and finite");
}

std::int64_t HeightBox::integer_bound(std::size_t i) const {
  const double b = std::floor(bounds_.at(i));
  if (b > 4e15) throw InputError("height bound too large");
  return static_cast<std::int64_t>(b);
}

double HeightBox::lattice_count() const {
  double count = 1;
  for (std::size_t i = 0; i < bounds_.size(); ++i) count *= 2.0 * static_cast<double>(integer_bound(i)) + 1.0;
  return count;
}

std::vector<Integer> to_integers(const IntPoint& x) {
  std::vector<Integer> out;
  out.reserve(x.size());
  for (auto v : x) out.emplace_back(static_cast<long>(v));
  return out;
}

namespace {

// Generators scaled to integer coefficients.
std::vector<Polynomial> integral_generators(const Ideal& ideal) {
  std::vector<Polynomial> out;
  for (const auto& g : ideal.generators()) out.push_back(primitive_part(g));
  return out;
}

bool kills(const std::vector<Polynomial>& gens, const std::vector<Integer>& x) {
  for (const auto& g : gens)
    if (evaluate_integer(g, x) != 0) return false;
  return true;
}

// g = c * x_j + rest(other coordinates) with c a nonzero constant.
struct LinearSolve {
  std::size_t var;
  Integer coeff;
  Polynomial rest;
};

std::optional<LinearSolve> find_linear_variable(const Polynomial& g) {
  for (std::size_t j = 0; j < g.num_vars(); ++j) {
    bool ok = true;
    bool seen = false;
    Integer coeff;
    Polynomial rest(g.num_vars(), g.order());
    for (const auto& [e, c] : g.terms()) {
      if (e[j] == 0) {
        rest.add_term(e, c);
        continue;
      }
      if (e[j] == 1 && e.degree() == 1) {
        seen = true;
        coeff = c.get_num();
        continue;
      }
      ok = false;
      break;
    }
    if (ok && seen) return LinearSolve{j, coeff, rest};
  }
  return std::nullopt;
}

struct ScanSpec {
  std::size_t nvars;
  std::vector<std::int64_t> bound;  // per coordinate
  bool projective;
};

bool canonical_projective(const IntPoint& x) {
  std::int64_t g = 0;
  std::int64_t first = 0;
  for (auto v : x) {
    g = std::gcd(g, v);
    if (first == 0) first = v;
  }
  return g == 1 && first > 0;
}

// Scan the box, sharding the first free coordinate across workers.
std::vector<IntPoint> scan(const Ideal& ideal, const ScanSpec& spec, const EnumerationOptions& options) {
  const auto gens = integral_generators(ideal);
  std::optional<LinearSolve> solve;
  if (options.linear_solve && !gens.empty()) solve = find_linear_variable(gens.front());

  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < spec.nvars; ++i)
    if (!solve || i != solve->var) free.push_back(i);

  auto accept = [&](const IntPoint& x, std::vector<IntPoint>& out) {
    if (spec.projective && !canonical_projective(x)) return;
    if (kills(gens, to_integers(x))) out.push_back(x);
  };

  auto visit = [&](IntPoint& x, std::vector<IntPoint>& out) {
    if (!solve) {
      accept(x, out);
      return;
    }
    x[solve->var] = 0;
    const Integer rest = evaluate_integer(solve->rest, to_integers(x));
    if (rest % solve->coeff != 0) return;
    const Integer value = -rest / solve->coeff;
    const std::int64_t lim = spec.bound[solve->var];
    if (value > lim || value < -lim) return;
    x[solve->var] = value.get_si();
    accept(x, out);
  };

  // Odometer over the free coordinates other than the sharded one.
  auto run_slice = [&](std::int64_t outer_value) {
    std::vector<IntPoint> out;
    IntPoint x(spec.nvars, 0);
    if (free.empty()) {
      visit(x, out);
      return out;
    }
    x[free[0]] = outer_value;
    for (std::size_t k = 1; k < free.size(); ++k) x[free[k]] = -spec.bound[free[k]];
    for (;;) {
      IntPoint y = x;
      visit(y, out);
      std::size_t k = free.size();
      bool advanced = false;
      while (k > 1) {
        --k;
        if (x[free[k]] < spec.bound[free[k]]) {
          ++x[free[k]];
          advanced = true;
          break;
        }
        x[free[k]] = -spec.bound[free[k]];
      }
      if (!advanced) return out;
    }
  };

  std::vector<std::vector<IntPoint>> slices;
  if (free.empty()) {
    slices.push_back(run_slice(0));
  } else {
    const std::int64_t lim = spec.bound[free[0]];
    const auto count = static_cast<std::size_t>(2 * lim + 1);
    slices = parallel_map(count, options.jobs,
                          [&](std::size_t i) { return run_slice(static_cast<std::int64_t>(i) - lim); });
  }
  std::vector<IntPoint> all;
  for (auto& s : slices)
    for (auto& p : s) all.push_back(std::move(p));
  std::sort(all.begin(), all.end());
  return all;
}

void check_budget(const HeightBox& box, const EnumerationOptions& options) {
  const double required = box.lattice_count();
  if (required > options.budget) {
    std::ostringstream msg;
    msg << "enumeration needs " << required << " lattice vectors, budget is " << options.budget;
    throw BudgetError(msg.str(), required, options.budget);
  }
}

}  // namespace

PointSet enumerate_affine(const Ideal& ideal, double bound, const EnumerationOptions& options) {
  const HeightBox box = HeightBox::uniform(ideal.num_vars(), bound);
  check_budget(box, options);
  ScanSpec spec{ideal.num_vars(), {}, false};
  for (std::size_t i = 0; i < box.size(); ++i) spec.bound.push_back(box.integer_bound(i));
  PointSet out;
  out.mode = PointMode::affine;
  out.box = box;
  out.points = scan(ideal, spec, options);
  return out;
}

PointSet enumerate_projective(const Ideal& ideal, const HeightBox& box, const EnumerationOptions& options) {
  if (!ideal.homogeneous()) throw ContractError("projective enumeration needs a homogeneous ideal");
  if (box.size() != ideal.num_vars()) throw InputError("height box length does not match the number of variables");
  check_budget(box, options);
  ScanSpec spec{ideal.num_vars(), {}, true};
  for (std::size_t i = 0; i < box.size(); ++i) spec.bound.push_back(box.integer_bound(i));
  PointSet out;
  out.mode = PointMode::projective;
  out.box = box;
  out.points = scan(ideal, spec, options);
  return out;
}

std::size_t point_class(const IntPoint& x, const HeightBox& box) {
  if (x.size() != box.size()) throw InputError("point and height box differ in length");
  std::size_t best = 0;
  // |x_j| / B_j > |x_best| / B_best  <=>  |x_j| B_best > |x_best| B_j, all exact.
  for (std::size_t j = 1; j < x.size(); ++j) {
    const Rational lhs = Rational(std::abs(x[j])) * Rational(box[best]);
    const Rational rhs = Rational(std::abs(x[best])) * Rational(box[j]);
    if (lhs > rhs) best = j;
  }
  return best;
}

std::vector<PointSet> partition_classes(const PointSet& points, const HeightBox& box) {
  if (points.mode != PointMode::projective) throw ContractError("class partition applies to projective point sets");
  std::vector<PointSet> classes(box.size(), PointSet{PointMode::projective, {}, box});
  for (const auto& p : points.points) classes[point_class(p, box)].points.push_back(p);
  return classes;
}

std::vector<Rational> tau_normalize(const IntPoint& x, const HeightBox& box) {
  if (x.size() != box.size()) throw InputError("point and height box differ in length");
  std::vector<Rational> out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const Rational b(box[i]);
    const Rational v(static_cast<long>(x[i]));
    if (abs(v) > b) throw ContractError("point lies outside the height box");
    out.push_back(v / b);
  }
  return out;
}

bool kills_all(const Ideal& ideal, const IntPoint& x) {
  const auto xi = to_integers(x);
  std::vector<Rational> xr(xi.begin(), xi.end());
  for (const auto& g : ideal.generators())
    if (evaluate(g, xr) != 0) return false;
  return true;
}

}  // namespace detm
