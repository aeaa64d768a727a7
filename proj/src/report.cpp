#include "detm/report.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "detm/errors.hpp"
#include "detm/text.hpp"

namespace detm {

namespace {

Json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

std::string rational_text(const Rational& q) { return q.get_str(); }

Json point_json(const IntPoint& x) { return Json(x); }

std::size_t affine_dim(const PipelineReport& r) { return r.heights.size() - 1; }

}  // namespace

std::string format_point(const IntPoint& x) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < x.size(); ++i) out << (i ? ", " : "") << x[i];
  out << ')';
  return out.str();
}

Json report_to_json(const PipelineReport& r) {
  const bool affine = r.mode == "affine";
  const VariableNames proj = projective_names(r.heights.size());
  const VariableNames aff = affine_names(affine_dim(r));

  Json j;
  j["params"] = {{"mode", r.mode},
                 {"ordering", std::string(to_string(r.order))},
                 {"strategy", r.strategy},
                 {"heights", r.heights},
                 {"delta", r.delta},
                 {"m", r.m}};
  j["mu"] = r.mu;
  j["nu"] = r.nu;
  j["f"] = r.f;
  Json sigma = Json::array();
  for (const auto& s : r.sigma) sigma.push_back(integer_json(s));
  j["sigma"] = sigma;
  j["rho"] = r.rho ? Json(*r.rho) : Json(nullptr);
  if (r.norm_bound) j["norm_bound"] = *r.norm_bound;
  if (r.cubes) j["cubes"] = *r.cubes;

  Json points = Json::array();
  for (const auto& p : r.points) points.push_back(point_json(p));
  j["points"] = points;
  j["class_counts"] = r.class_counts;

  Json certs = Json::array();
  for (std::size_t i = 0; i < r.certificates.size(); ++i) {
    const auto& c = r.certificates[i];
    Json cj;
    cj["form"] = format_polynomial(c.form, proj);
    if (affine) cj["poly"] = format_polynomial(r.affine_polys.at(i), aff);
    Json cp = Json::array();
    for (auto idx : c.points) cp.push_back(point_json(r.points.at(idx)));
    cj["points"] = cp;
    Json box = Json::array();
    for (std::size_t a = 0; a < c.box.lo.size(); ++a) box.push_back({c.box.lo[a], c.box.hi[a]});
    cj["box"] = box;
    if (!c.box.path.empty() || r.strategy == "adaptive") cj["path"] = c.box.path;
    if (!c.cube_lo.empty()) cj["cube_lo"] = c.cube_lo;
    cj["support_in_staircase"] = c.support_in_staircase;
    cj["normal_form_nonzero"] = c.normal_form_nonzero;
    certs.push_back(cj);
  }
  j["certificates"] = certs;
  Json unc = Json::array();
  for (auto idx : r.uncovered) unc.push_back(point_json(r.points.at(idx)));
  j["uncovered"] = unc;

  j["k_actual"] = r.k_actual();
  j["k_bound_exponents"] = r.k_bound_exponents;
  j["k_bound_scale"] = r.k_bound_scale;
  j["k_bound"] = r.k_bound ? Json(*r.k_bound) : Json(nullptr);
  j["stats"] = {{"points", r.points.size()},
                {"certificates", r.certificates.size()},
                {"uncovered", r.uncovered.size()},
                {"boxes_examined", r.boxes_examined},
                {"max_axis_depth", r.max_axis_depth},
                {"max_depth", r.max_depth},
                {"depth_limit", r.depth_limit}};
  if (r.affine_bound) {
    const auto& b = *r.affine_bound;
    j["affine_bound"] = {{"s", b.s},
                         {"lhs", rational_text(b.lhs)},
                         {"lhs_value", b.lhs.get_d()},
                         {"intermediate", rational_text(b.intermediate)},
                         {"intermediate_value", b.intermediate.get_d()},
                         {"limit", rational_text(b.limit)},
                         {"holds", b.holds},
                         {"dimension", b.dimension}};
  }
  j["notes"] = r.notes;
  return j;
}

std::string csv_header() { return "mode,height,points,delta,mu,certificates,k_actual,k_bound_scale,uncovered"; }

std::string csv_row(const PipelineReport& r) {
  std::ostringstream out;
  out << r.mode << ',' << r.heights.back() << ',' << r.points.size() << ',' << r.delta << ',' << r.mu << ','
      << r.certificates.size() << ',' << r.k_actual() << ',' << r.k_bound_scale << ',' << r.uncovered.size();
  return out.str();
}

std::string report_text(const PipelineReport& r) {
  std::ostringstream out;
  out << r.mode << " run, " << to_string(r.order) << ", " << r.strategy << "\n";
  out << "delta " << r.delta << "  mu " << r.mu << "  nu " << r.nu << "  f " << r.f << "  m " << r.m << "\n";
  out << "sigma";
  for (const auto& s : r.sigma) out << ' ' << s;
  out << "\n";
  if (r.rho) out << "rho " << *r.rho << "  cubes " << r.cubes.value_or(0) << "\n";
  out << "points " << r.points.size() << "  certificates " << r.certificates.size() << "  k_actual " << r.k_actual()
      << "  uncovered " << r.uncovered.size() << "\n";
  out << "exponents";
  for (double e : r.k_bound_exponents) out << ' ' << e;
  out << "  scale " << r.k_bound_scale << "\n";
  const VariableNames aff = affine_names(r.heights.size() - 1);
  const VariableNames proj = projective_names(r.heights.size());
  for (std::size_t i = 0; i < r.certificates.size(); ++i) {
    const auto& c = r.certificates[i];
    out << "  [" << c.points.size() << " pts] "
        << (r.mode == "affine" ? format_polynomial(r.affine_polys[i], aff) : format_polynomial(c.form, proj)) << "\n";
  }
  for (const auto& n : r.notes) out << "note: " << n << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------------------------

ReportCheck verify_report(const Json& report, const IdealFile& file, double budget, unsigned jobs) {
  ReportCheck check;
  auto fail = [&](std::string why) { check.failures.push_back(std::move(why)); };

  const auto& params = report.at("params");
  const std::string mode = params.at("mode").get<std::string>();
  const OrderKind kind = parse_order_kind(params.at("ordering").get<std::string>());
  const MonomialOrder order(kind);
  const unsigned delta = params.at("delta").get<unsigned>();
  const std::vector<double> heights = params.at("heights").get<std::vector<double>>();
  if (mode != "affine" && mode != "projective") throw InputError("report has an unknown mode '" + mode + "'");
  if (heights.size() != file.vars) throw InputError("report heights do not match the ideal's variable count");

  EnumerationOptions eo;
  eo.budget = budget;
  eo.jobs = jobs;
  const bool affine = mode == "affine";
  const VariableNames proj = projective_names(file.vars);
  const VariableNames aff = affine_names(file.vars - 1);

  std::optional<Ideal> affine_i;
  std::optional<GroebnerBasis> gb_affine;
  std::vector<IntPoint> enumerated;
  std::optional<GroebnerBasis> gb;
  if (affine) {
    affine_i = affine_ideal(file);
    gb = groebner(homogenization(*affine_i), order, delta);
    gb_affine = groebner(*affine_i, MonomialOrder(OrderKind::grlex_left));
    enumerated = enumerate_affine(*affine_i, heights.at(1), eo).points;
    if (heights.at(0) != 1.0) fail("affine report must have B_0 = 1");
  } else {
    const Ideal ideal = projective_ideal(file);
    gb = groebner(ideal, order, delta);
    enumerated = enumerate_projective(ideal, HeightBox(heights), eo).points;
  }
  check.points = enumerated.size();

  std::vector<IntPoint> listed;
  for (const auto& p : report.at("points")) listed.push_back(p.get<IntPoint>());
  if (listed != enumerated)
    fail("point list differs from a fresh enumeration (" + std::to_string(listed.size()) + " listed, " +
         std::to_string(enumerated.size()) + " found)");

  const std::set<IntPoint> known(enumerated.begin(), enumerated.end());
  std::set<IntPoint> covered;
  std::size_t index = 0;
  for (const auto& cj : report.at("certificates")) {
    const std::string tag = "certificate " + std::to_string(index++);
    ++check.certificates;
    Polynomial form = parse_polynomial(cj.at("form").get<std::string>(), proj, order);
    std::vector<IntPoint> pts;
    std::vector<IntPoint> lifted;
    for (const auto& p : cj.at("points")) {
      IntPoint x = p.get<IntPoint>();
      if (!known.count(x)) fail(tag + ": lists " + format_point(x) + ", which is not an enumerated point");
      covered.insert(x);
      IntPoint y = x;
      if (affine) y.insert(y.begin(), 1);
      pts.push_back(std::move(x));
      lifted.push_back(std::move(y));
    }
    const VerifyResult r = verify_certificate(form, delta, lifted, *gb);
    if (!r.ok)
      fail(tag + ": " + r.reason + (r.counterexample ? " at " + format_point(*r.counterexample) : std::string()));
    if (affine) {
      if (!cj.contains("poly")) {
        fail(tag + ": affine certificate has no poly");
        continue;
      }
      const Polynomial g = parse_polynomial(cj.at("poly").get<std::string>(), aff);
      if (!(g == dehomogenize(form, 0))) fail(tag + ": poly is not the dehomogenized form");
      for (const auto& x : pts)
        if (evaluate_integer(primitive_part(g), to_integers(x)) != 0)
          fail(tag + ": poly does not vanish at " + format_point(x));
      if (normal_form(g, *gb_affine).is_zero()) fail(tag + ": poly lies in I");
    }
  }
  for (const auto& x : enumerated)
    if (!covered.count(x)) fail("point " + format_point(x) + " is not covered by any certificate");
  check.ok = check.failures.empty();
  return check;
}

}  // namespace detm
