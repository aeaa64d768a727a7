#include "detm/engine.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include "detm/errors.hpp"
#include "detm/ideal.hpp"
#include "detm/parallel.hpp"
#include "detm/text.hpp"

namespace detm {

bool IntBox::contains(const IntPoint& x) const {
  for (std::size_t i = 0; i < lo.size(); ++i)
    if (x[i] < lo[i] || x[i] > hi[i]) return false;
  return true;
}

IntBox IntBox::of_heights(const HeightBox& box) {
  IntBox out;
  for (std::size_t i = 0; i < box.size(); ++i) {
    out.lo.push_back(-box.integer_bound(i));
    out.hi.push_back(box.integer_bound(i));
  }
  return out;
}

std::string_view to_string(Strategy s) { return s == Strategy::adaptive ? "adaptive" : "theoretical"; }

Strategy parse_strategy(std::string_view text) {
  if (text == "adaptive") return Strategy::adaptive;
  if (text == "theoretical") return Strategy::theoretical;
  throw InputError("unknown strategy '" + std::string(text) + "'");
}

namespace {

Polynomial form_from_kernel(const std::vector<Integer>& v, const Staircase& st, std::size_t nvars) {
  Polynomial f(nvars, st.order);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) f.add_term(st.exponents[i], Rational(v[i]));
  return primitive_part(f);
}

}  // namespace

BoxOutcome auxiliary_for_box(std::span<const IntPoint> points, std::span<const std::size_t> indices,
                             const Staircase& st, const GroebnerBasis& gb, const IntBox& box) {
  std::vector<IntPoint> subset;
  subset.reserve(indices.size());
  for (auto i : indices) subset.push_back(points[i]);
  const MonomialMatrix mat = build_matrix(subset, st);
  const auto kernel = exact_kernel(mat);
  BoxOutcome out;
  out.rank = st.size() - kernel.size();
  if (kernel.empty()) return out;

  AuxiliaryCertificate cert;
  cert.form = form_from_kernel(kernel.front(), st, gb.num_vars());
  cert.delta = st.delta;
  cert.points.assign(indices.begin(), indices.end());
  cert.box = box;
  cert.support_in_staircase = std::all_of(cert.form.terms().begin(), cert.form.terms().end(),
                                          [&](const auto& term) { return st.contains(term.first); });
  cert.normal_form_nonzero = !normal_form(cert.form, gb).is_zero();
  out.certificate = std::move(cert);
  return out;
}

// ---------------------------------------------------------------------------------------------
// Charts

Chart parse_chart(std::istream& in, std::size_t n) {
  Chart chart;
  std::string line;
  std::size_t lineno = 0;
  std::optional<VariableNames> params;
  std::vector<std::optional<Polynomial>> coords(n);
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    line = line.substr(first);
    if (line.rfind("params:", 0) == 0) {
      std::istringstream ss(line.substr(7));
      long m = 0;
      if (!(ss >> m) || m < 1) throw ParseError(lineno, 8, "params must be a positive integer");
      chart.params = static_cast<std::size_t>(m);
      std::vector<std::string> names;
      for (std::size_t k = 0; k < chart.params; ++k) names.push_back("t" + std::to_string(k));
      params = VariableNames(std::move(names));
      continue;
    }
    if (!params) throw ParseError(lineno, 1, "chart must start with 'params: m'");
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(lineno, 1, "expected 'xj = expression'");
    std::string lhs = line.substr(0, eq);
    lhs.erase(lhs.find_last_not_of(" \t") + 1);
    if (lhs.size() < 2 || lhs[0] != 'x') throw ParseError(lineno, 1, "left side must be a coordinate xj");
    std::size_t j = 0;
    try {
      j = std::stoul(lhs.substr(1));
    } catch (const std::exception&) {
      throw ParseError(lineno, 1, "left side must be a coordinate xj");
    }
    if (j == 0 || j > n) throw ParseError(lineno, 1, "coordinate index out of range (x1..x" + std::to_string(n) + ")");
    if (coords[j - 1]) throw ParseError(lineno, 1, "coordinate " + lhs + " given twice");
    coords[j - 1] = parse_polynomial(line.substr(eq + 1), *params, MonomialOrder{}, lineno);
  }
  if (!params) throw InputError("chart is empty");
  for (std::size_t j = 0; j < n; ++j) {
    if (!coords[j]) throw InputError("chart does not define x" + std::to_string(j + 1));
    chart.coordinates.push_back(*coords[j]);
  }
  for (std::size_t k = 0; k < chart.params; ++k) {
    const Polynomial tk = Polynomial::variable(chart.params, k);
    std::optional<std::size_t> found;
    for (std::size_t j = 0; j < n && !found; ++j)
      if (chart.coordinates[j] == tk) found = j + 1;
    if (!found) throw InputError("chart parameter t" + std::to_string(k) + " is not a coordinate");
    chart.identity_of.push_back(*found);
  }
  return chart;
}

Chart read_chart_file(const std::string& path, std::size_t n) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open chart file '" + path + "'");
  return parse_chart(in, n);
}

std::vector<Rational> chart_ranges(const Chart& chart, double height) {
  const Rational b(height);
  std::vector<Rational> out;
  for (std::size_t k = 0; k < chart.params; ++k) {
    // Largest integer t with |c| t^p <= B over single-term components c t_k^p.
    std::optional<Integer> best;
    for (const auto& p : chart.coordinates) {
      if (p.size() != 1) continue;
      const auto& [e, c] = *p.terms().begin();
      if (e.degree() == 0 || e[k] != e.degree()) continue;
      const unsigned power = e[k];
      auto fits = [&](const Integer& t) {
        Integer tp;
        mpz_pow_ui(tp.get_mpz_t(), t.get_mpz_t(), power);
        return Rational(abs(c) * Rational(tp)) <= b;
      };
      Integer t(static_cast<long>(std::floor(std::pow(height / std::abs(c.get_d()), 1.0 / power))));
      if (t < 0) t = 0;
      while (fits(t + 1)) ++t;
      while (t > 0 && !fits(t)) --t;
      if (!best || t < *best) best = t;
    }
    Integer t = best ? *best : Integer(1);
    if (t < 1) t = 1;
    out.emplace_back(t);
  }
  return out;
}

// ---------------------------------------------------------------------------------------------
// rho

double theoretical_rho(const HeightBox& box, std::span<const Integer> sigma, std::uint64_t f, std::uint64_t mu,
                       unsigned nu, unsigned m, std::span<const double> norms) {
  if (f == 0) throw DomainError("theoretical rho is degenerate when f = 0 (mu <= 1)");
  if (m == 0) throw DomainError("theoretical rho needs m >= 1");
  if (sigma.size() != box.size()) throw InputError("sigma and height box differ in length");
  if (norms.size() != mu) throw InputError("one norm per row is required");
  const double cap = std::min(0.5, 0.99 / std::sqrt(static_cast<double>(m)));
  double log_c = std::lgamma(static_cast<double>(mu) + 1.0);
  log_c += static_cast<double>(mu) * std::log(static_cast<double>(monomials_up_to_degree(m, nu)));
  for (double n : norms) {
    if (n < 0) throw InputError("norms must be nonnegative");
    if (n == 0) return cap;
    log_c += std::log(n);
  }
  for (std::size_t i = 0; i < sigma.size(); ++i) log_c += sigma[i].get_d() * std::log(box[i]);
  log_c = round_up(log_c);
  const double log_rho = round_down(-log_c / static_cast<double>(f) - 0.5 * std::log(static_cast<double>(m)));
  return std::min(cap, round_down(std::exp(log_rho)));
}

double theoretical_rho(const HeightBox& box, std::span<const Integer> sigma, std::uint64_t f, std::uint64_t mu,
                       unsigned nu, unsigned m, double norm_bound) {
  std::vector<double> norms(mu, norm_bound);
  return theoretical_rho(box, sigma, f, mu, nu, m, norms);
}

// ---------------------------------------------------------------------------------------------
// Covering

namespace {

struct Task {
  IntBox box;
  std::vector<std::size_t> indices;
  std::vector<unsigned> axis_depth;
};

std::pair<Task, Task> split(const Task& t) {
  std::size_t axis = 0;
  for (std::size_t i = 1; i < t.box.lo.size(); ++i)
    if (t.box.width(i) > t.box.width(axis)) axis = i;
  const std::int64_t a = t.box.lo[axis];
  const std::int64_t b = t.box.hi[axis];
  const std::int64_t mid = a + (b - a) / 2;
  Task left{t.box, {}, t.axis_depth};
  Task right{t.box, {}, t.axis_depth};
  left.box.hi[axis] = mid;
  right.box.lo[axis] = mid + 1;
  left.box.path += '0';
  right.box.path += '1';
  ++left.axis_depth[axis];
  ++right.axis_depth[axis];
  return {std::move(left), std::move(right)};
}

bool is_unit(const IntBox& box) {
  for (std::size_t i = 0; i < box.lo.size(); ++i)
    if (box.width(i) > 1) return false;
  return true;
}

void cover_adaptive(const GroebnerBasis& gb, const Staircase& st, const PointSet& ps, const EngineOptions& options,
                    PipelineReport& report) {
  Task root{IntBox::of_heights(ps.box), {}, std::vector<unsigned>(ps.box.size(), 0)};
  for (std::size_t i = 0; i < ps.points.size(); ++i) root.indices.push_back(i);
  std::vector<Task> level;
  if (!root.indices.empty()) level.push_back(std::move(root));

  std::vector<AuxiliaryCertificate> certs;
  while (!level.empty()) {
    auto outcomes = parallel_map(level.size(), options.jobs, [&](std::size_t i) {
      return auxiliary_for_box(ps.points, level[i].indices, st, gb, level[i].box);
    });
    report.boxes_examined += level.size();
    std::vector<Task> next;
    for (std::size_t i = 0; i < level.size(); ++i) {
      Task& t = level[i];
      report.max_depth = std::max<unsigned>(report.max_depth, static_cast<unsigned>(t.box.path.size()));
      for (auto d : t.axis_depth) report.max_axis_depth = std::max(report.max_axis_depth, d);
      if (outcomes[i].certificate) {
        certs.push_back(std::move(*outcomes[i].certificate));
        continue;
      }
      // Full rank. A lone point can only be full rank when mu = 1; splitting will not help.
      if (t.indices.size() <= 1 || is_unit(t.box)) {
        report.uncovered.insert(report.uncovered.end(), t.indices.begin(), t.indices.end());
        continue;
      }
      auto [left, right] = split(t);
      for (auto idx : t.indices) (left.box.contains(ps.points[idx]) ? left : right).indices.push_back(idx);
      if (!left.indices.empty()) next.push_back(std::move(left));
      if (!right.indices.empty()) next.push_back(std::move(right));
    }
    level = std::move(next);
  }
  std::sort(certs.begin(), certs.end(),
            [](const AuxiliaryCertificate& a, const AuxiliaryCertificate& b) { return a.box.path < b.box.path; });
  report.certificates = std::move(certs);
}

void cover_theoretical(const GroebnerBasis& gb, const Staircase& st, const PointSet& ps, const EngineOptions& options,
                       PipelineReport& report) {
  if (!options.chart) throw InputError("theoretical strategy needs a chart");
  const Chart& chart = *options.chart;
  const std::size_t n = ps.box.size() - 1;
  if (chart.coordinates.size() != n) throw InputError("chart dimension does not match the ideal");
  if (ps.box[0] != 1.0) throw InputError("theoretical strategy is supported for affine runs only");
  const std::size_t m = chart.params;
  if (m != report.m) throw InputError("chart has " + std::to_string(m) + " parameters but the variety has dimension " +
                                      std::to_string(report.m));
  const double height = ps.box[1];
  const Rational b(height);
  const auto ranges = chart_ranges(chart, height);

  // Normalized chart phi_j(u) = P_j(T u) / B and row functions psi_e(u) = prod phi_j^e_j.
  std::vector<Polynomial> scale;
  for (std::size_t k = 0; k < m; ++k) scale.push_back(Polynomial::variable(m, k) * ranges[k]);
  std::vector<Polynomial> phi;
  for (const auto& p : chart.coordinates) {
    Polynomial q = compose(p, scale);
    q *= Rational(1) / b;
    phi.push_back(std::move(q));
  }
  std::vector<double> norms;
  for (const auto& e : st.exponents) {
    Polynomial psi = Polynomial::constant(m, 1);
    for (std::size_t j = 1; j <= n; ++j)
      if (e[j] > 0) psi = psi * phi[j - 1].pow(e[j]);
    if (options.norm_bound) {
      norms.push_back(*options.norm_bound);
    } else {
      const std::vector<Polynomial> comp{psi};
      norms.push_back(to_double_up(ck_norm_bound(comp, report.nu, ParameterBox::unit(m))));
    }
  }
  report.norm_bound = *std::max_element(norms.begin(), norms.end());
  const double rho = theoretical_rho(ps.box, report.sigma, report.f, report.mu, report.nu, static_cast<unsigned>(m), norms);
  report.rho = rho;
  const auto per_axis = static_cast<std::uint64_t>(std::ceil(2.0 / rho));
  std::uint64_t cubes = 1;
  for (std::size_t k = 0; k < m; ++k) cubes *= per_axis;
  report.cubes = cubes;
  report.k_bound = static_cast<double>(report.delta) * static_cast<double>(cubes);

  // Assign each point to its cube, exactly.
  const Rational rho_q(rho);
  std::map<std::vector<std::int64_t>, std::vector<std::size_t>> cells;
  for (std::size_t idx = 0; idx < ps.points.size(); ++idx) {
    const IntPoint& x = ps.points[idx];
    std::vector<Rational> t;
    for (std::size_t k = 0; k < m; ++k) t.emplace_back(static_cast<long>(x[chart.identity_of[k]]));
    for (std::size_t j = 1; j <= n; ++j)
      if (evaluate(chart.coordinates[j - 1], t) != Rational(static_cast<long>(x[j])))
        throw InputError("enumerated point is not on the chart");
    std::vector<std::int64_t> cell;
    for (std::size_t k = 0; k < m; ++k) {
      const Rational pos = (t[k] / ranges[k] + 1) / rho_q;
      Integer fl;
      mpz_fdiv_q(fl.get_mpz_t(), pos.get_num_mpz_t(), pos.get_den_mpz_t());
      std::int64_t c = fl.get_si();
      c = std::clamp<std::int64_t>(c, 0, static_cast<std::int64_t>(per_axis) - 1);
      cell.push_back(c);
    }
    cells[cell].push_back(idx);
  }

  std::vector<std::pair<std::vector<std::int64_t>, std::vector<std::size_t>>> occupied(cells.begin(), cells.end());
  auto outcomes = parallel_map(occupied.size(), options.jobs, [&](std::size_t i) {
    const auto& idx = occupied[i].second;
    IntBox box{ps.points[idx.front()], ps.points[idx.front()], {}};
    for (auto p : idx)
      for (std::size_t c = 0; c < box.lo.size(); ++c) {
        box.lo[c] = std::min(box.lo[c], ps.points[p][c]);
        box.hi[c] = std::max(box.hi[c], ps.points[p][c]);
      }
    return auxiliary_for_box(ps.points, idx, st, gb, box);
  });
  report.boxes_examined = occupied.size();
  for (std::size_t i = 0; i < occupied.size(); ++i) {
    if (!outcomes[i].certificate) {
      report.full_rank_cubes.push_back(i);
      report.uncovered.insert(report.uncovered.end(), occupied[i].second.begin(), occupied[i].second.end());
      continue;
    }
    auto cert = std::move(*outcomes[i].certificate);
    for (auto c : occupied[i].first) cert.cube_lo.push_back(-1.0 + static_cast<double>(c) * rho);
    report.certificates.push_back(std::move(cert));
  }
  if (!report.full_rank_cubes.empty())
    report.notes.push_back("falsification: " + std::to_string(report.full_rank_cubes.size()) +
                           " occupied cube(s) have full rank");
}

}  // namespace

PipelineReport cover_and_construct(const GroebnerBasis& gb, const PointSet& points, unsigned delta, unsigned m,
                                   const EngineOptions& options) {
  if (points.mode != PointMode::projective) throw ContractError("cover_and_construct expects projective points");
  if (points.box.size() != gb.num_vars()) throw InputError("height box length does not match the ideal");
  gb.require_degree(delta, "cover_and_construct");
  const Staircase st = staircase(gb, delta);
  if (st.size() == 0) throw InputError("staircase empty at degree " + std::to_string(delta));

  PipelineReport report;
  report.mode = "projective";
  report.order = gb.order().kind();
  report.strategy = std::string(to_string(options.strategy));
  report.heights = points.box.bounds();
  report.delta = delta;
  report.mu = st.size();
  report.m = m;
  report.sigma = sigma_vector(st);
  report.points = points.points;
  report.class_counts.assign(points.box.size(), 0);
  for (const auto& p : points.points) ++report.class_counts[point_class(p, points.box)];

  const double bmax = *std::max_element(points.box.bounds().begin(), points.box.bounds().end());
  report.depth_limit = bmax < 1 ? 1u : static_cast<unsigned>(std::ceil(std::log2(2.0 * bmax))) + 1u;

  if (m >= 1) {
    const ExponentBudget budget = choose_nu(report.mu, m);
    report.nu = budget.nu;
    report.f = budget.e;
  } else {
    report.notes.push_back("zero-dimensional variety: Taylor budget not defined");
  }
  if (report.f > 0) {
    double log_scale = 0;
    for (std::size_t i = 0; i < report.sigma.size(); ++i) {
      const double ex = static_cast<double>(m) * report.sigma[i].get_d() / static_cast<double>(report.f);
      report.k_bound_exponents.push_back(ex);
      log_scale += ex * std::log(points.box[i]);
    }
    report.k_bound_scale = std::exp(log_scale);
  }
  if (report.mu == 1)
    report.notes.push_back("degenerate: mu = 1, every degree-" + std::to_string(delta) +
                           " form vanishing at a point of X lies in I");
  if (points.points.empty()) report.notes.push_back("vacuous: no points in the height box");
  report.notes.push_back("dimension and degree read off the Hilbert polynomial; X is assumed irreducible, not checked");

  if (options.strategy == Strategy::adaptive)
    cover_adaptive(gb, st, points, options, report);
  else
    cover_theoretical(gb, st, points, options, report);
  std::sort(report.uncovered.begin(), report.uncovered.end());
  if (!report.uncovered.empty())
    report.notes.push_back(std::to_string(report.uncovered.size()) + " point(s) not covered by any certificate");
  return report;
}

// ---------------------------------------------------------------------------------------------
// delta selection and pipelines

DeltaChoice choose_delta(const GroebnerBasis& gb, double epsilon, const Integer& d, unsigned m, unsigned delta_max,
                         unsigned probe) {
  if (!(epsilon > 0)) throw InputError("epsilon must be positive");
  if (gb.ideal().is_zero_ideal()) throw DomainError("the zero ideal is unsupported: X is all of space");
  if (m == 0) throw DomainError("zero-dimensional variety: no delta gives mu >= 2");
  gb.require_degree(std::max(probe, delta_max), "choose_delta");
  const auto a = a_estimates(gb, probe);
  const double droot = std::pow(d.get_d(), 1.0 / static_cast<double>(m));

  DeltaChoice best;
  double best_excess = std::numeric_limits<double>::infinity();
  for (unsigned delta = 1; delta <= delta_max; ++delta) {
    const Staircase st = staircase(gb, delta);
    if (st.size() < 2) continue;
    const auto sig = sigma_vector(st);
    const auto budget = choose_nu(st.size(), m);
    DeltaChoice c{delta, probe, {}, {}};
    double excess = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < sig.size(); ++i) {
      c.finite.push_back(static_cast<double>(m) * sig[i].get_d() / static_cast<double>(budget.e));
      c.target.push_back(static_cast<double>(m + 1) * a[i].get_d() / droot + epsilon);
      excess = std::max(excess, c.finite.back() - c.target.back());
    }
    if (excess <= 0) return c;
    if (excess < best_excess) {
      best_excess = excess;
      best = c;
    }
  }
  std::ostringstream msg;
  msg << "no delta <= " << delta_max << " meets epsilon = " << epsilon;
  if (best.delta > 0) {
    msg << "; best delta " << best.delta << " has exponents";
    for (std::size_t i = 0; i < best.finite.size(); ++i) msg << ' ' << best.finite[i] << "/" << best.target[i];
  }
  throw DomainError(msg.str());
}

namespace {

unsigned pick_delta(const GroebnerBasis& gb, std::optional<unsigned> delta, std::optional<double> epsilon,
                    const Integer& d, unsigned m, unsigned delta_max, unsigned probe, std::vector<std::string>& notes) {
  if (delta.has_value() == epsilon.has_value()) throw InputError("exactly one of delta and epsilon must be given");
  if (delta) {
    if (*delta == 0) throw InputError("delta must be positive");
    return *delta;
  }
  const DeltaChoice c = choose_delta(gb, *epsilon, d, m, delta_max, probe);
  std::ostringstream msg;
  msg << "delta " << c.delta << " chosen for epsilon " << *epsilon << " (probe degree " << c.probe << ")";
  notes.push_back(msg.str());
  return c.delta;
}

}  // namespace

PipelineReport affine_pipeline(const Ideal& affine, const AffineRun& run) {
  if (affine.is_zero_ideal()) throw DomainError("the zero ideal is unsupported: X is all of space");
  if (run.delta && run.epsilon) throw InputError("exactly one of delta and epsilon must be given");
  const std::size_t n = affine.num_vars();
  const unsigned probe_cap = std::max({run.probe, run.delta_max, 12u});
  const AffineBoundContext ctx(affine, probe_cap);
  const GroebnerBasis& gb_probe = ctx.homogenized();
  const DimensionDegree dd = dimension_and_degree(gb_probe, 0, probe_cap);

  std::vector<std::string> notes;
  const unsigned delta = pick_delta(gb_probe, run.delta, run.epsilon, dd.degree, dd.dimension, run.delta_max,
                                    run.probe, notes);
  const GroebnerBasis gb = (run.order == OrderKind::grlex_left && delta <= probe_cap)
                               ? gb_probe
                               : groebner(gb_probe.ideal(), MonomialOrder(run.order), std::max(delta, probe_cap));

  EnumerationOptions eo;
  eo.budget = run.engine.budget;
  eo.jobs = run.engine.jobs;
  const PointSet affine_points = enumerate_affine(affine, run.height, eo);

  std::vector<double> heights(n + 1, run.height);
  heights[0] = 1.0;
  PointSet lifted{PointMode::projective, {}, HeightBox(heights)};
  for (const auto& x : affine_points.points) {
    IntPoint y{1};
    y.insert(y.end(), x.begin(), x.end());
    if (point_class(y, lifted.box) != 0) throw ContractError("lifted affine point is not in class 0");
    lifted.points.push_back(std::move(y));
  }

  PipelineReport report = cover_and_construct(gb, lifted, delta, dd.dimension, run.engine);
  report.mode = "affine";
  report.points = affine_points.points;
  for (const auto& c : report.certificates) report.affine_polys.push_back(dehomogenize(c.form, 0));
  if (delta <= probe_cap) report.affine_bound = ctx.at(delta);
  report.notes.insert(report.notes.begin(), notes.begin(), notes.end());
  return report;
}

PipelineReport projective_pipeline(const Ideal& ideal, const ProjectiveRun& run) {
  if (!ideal.homogeneous()) throw InputError("projective mode needs homogeneous generators");
  if (run.engine.strategy == Strategy::theoretical)
    throw InputError("theoretical strategy is supported for affine runs only");
  if (run.box.size() != ideal.num_vars()) throw InputError("heights must list one bound per variable");
  if (run.delta && run.epsilon) throw InputError("exactly one of delta and epsilon must be given");
  const unsigned cap = std::max({run.probe, run.delta_max, run.delta.value_or(0), 12u});
  const GroebnerBasis gb = groebner(ideal, MonomialOrder(run.order), cap);
  const DimensionDegree dd = dimension_and_degree(gb, 0, cap);
  std::vector<std::string> notes;
  const unsigned delta = pick_delta(gb, run.delta, run.epsilon, dd.degree, dd.dimension, run.delta_max, run.probe, notes);

  EnumerationOptions eo;
  eo.budget = run.engine.budget;
  eo.jobs = run.engine.jobs;
  const PointSet points = enumerate_projective(ideal, run.box, eo);
  PipelineReport report = cover_and_construct(gb, points, delta, dd.dimension, run.engine);
  report.notes.insert(report.notes.begin(), notes.begin(), notes.end());
  return report;
}

VerifyResult verify_certificate(const Polynomial& form, unsigned delta, std::span<const IntPoint> points,
                                const GroebnerBasis& gb) {
  VerifyResult r;
  auto fail = [&](std::string why, std::optional<IntPoint> at = std::nullopt) {
    r.ok = false;
    r.reason = std::move(why);
    r.counterexample = std::move(at);
    return r;
  };
  if (form.is_zero()) return fail("certificate is the zero polynomial");
  if (form.num_vars() != gb.num_vars()) return fail("certificate has the wrong number of variables");
  if (!has_integer_coefficients(form)) return fail("certificate has non-integer coefficients");
  if (gb.truncation_degree() && *gb.truncation_degree() < delta) return fail("basis not computed up to delta");
  const Staircase st = staircase(gb, delta);
  for (const auto& [e, c] : form.terms()) {
    if (e.degree() != delta) return fail("monomial of degree " + std::to_string(e.degree()) + " in a degree-" +
                                         std::to_string(delta) + " certificate");
    if (!st.contains(e)) return fail("support contains a leading monomial of I");
  }
  for (const auto& x : points) {
    if (x.size() != form.num_vars()) return fail("point has the wrong dimension", x);
    if (evaluate_integer(form, to_integers(x)) != 0) return fail("certificate does not vanish at a covered point", x);
  }
  if (normal_form(form.with_order(gb.order()), gb).is_zero()) return fail("certificate reduces to zero modulo I");
  return r;
}

}  // namespace detm
