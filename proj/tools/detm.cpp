// detm: command-line front end for the determinant-method engine.
//
// Exit codes: 0 ok, 1 verification failure, 2 input error, 3 budget exceeded.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "detm/detbound.hpp"
#include "detm/engine.hpp"
#include "detm/errors.hpp"
#include "detm/groebner.hpp"
#include "detm/hilbert.hpp"
#include "detm/ideal.hpp"
#include "detm/points.hpp"
#include "detm/report.hpp"
#include "detm/text.hpp"

using namespace detm;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kInputError = 2;
constexpr int kBudget = 3;

struct Common {
  std::string ideal_path;
  std::string mode = "affine";
  double height = 0;
  std::vector<double> heights;
  std::string ordering = "grlex-left";
  double budget = 1e9;
  unsigned jobs = 1;
  std::string output = "json";
};

void add_ideal(CLI::App* cmd, Common& c) {
  cmd->add_option("--ideal", c.ideal_path, "ideal file")->required()->check(CLI::ExistingFile);
  cmd->add_option("--mode", c.mode, "affine or projective")->check(CLI::IsMember({"affine", "projective"}));
}

void add_heights(CLI::App* cmd, Common& c) {
  auto* h = cmd->add_option("--height", c.height, "uniform height bound B");
  auto* hs = cmd->add_option("--heights", c.heights, "projective bounds B0,...,Bn")->delimiter(',');
  h->excludes(hs);
  cmd->add_option("--budget", c.budget, "maximum lattice vectors to scan");
  cmd->add_option("--jobs", c.jobs, "worker threads")->check(CLI::PositiveNumber);
}

HeightBox projective_box(const Common& c, std::size_t nvars) {
  if (!c.heights.empty()) return HeightBox(c.heights);
  if (c.height > 0) return HeightBox::uniform(nvars, c.height);
  throw InputError("give --height or --heights");
}

double affine_height(const Common& c) {
  if (!c.heights.empty()) throw InputError("affine mode takes --height, not --heights");
  if (!(c.height > 0)) throw InputError("give a positive --height");
  return c.height;
}

void write_out(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

// ---------------------------------------------------------------------------------------------

int cmd_hilbert(const Common& c, unsigned from, unsigned to) {
  if (to < from) throw InputError("--to must be at least --from");
  const IdealFile file = read_ideal_file(c.ideal_path);
  const Ideal ideal = c.mode == "affine" ? homogenization(affine_ideal(file)) : projective_ideal(file);
  if (!ideal.homogeneous()) throw InputError("projective mode needs homogeneous generators");
  const GroebnerBasis gb = groebner(ideal, MonomialOrder(parse_order_kind(c.ordering)), to);
  const std::size_t nv = ideal.num_vars();

  Json rows = Json::array();
  std::ostringstream text;
  text << "s\tHF";
  for (std::size_t i = 0; i < nv; ++i) text << "\tsigma" << i;
  for (std::size_t i = 0; i < nv; ++i) text << "\ta" << i;
  text << "\n";
  for (unsigned s = from; s <= to; ++s) {
    const Staircase st = staircase(gb, s);
    const auto sig = sigma_vector(st);
    Json row{{"s", s}, {"hf", st.size()}};
    text << s << '\t' << st.size();
    Json sj = Json::array();
    for (const auto& v : sig) {
      sj.push_back(v.get_si());
      text << '\t' << v;
    }
    row["sigma"] = sj;
    Json aj = Json::array();
    for (const auto& v : sig) {
      if (s == 0 || st.size() == 0) {
        aj.push_back(nullptr);
        text << "\t-";
        continue;
      }
      Rational a(v, Integer(static_cast<unsigned long>(s) * st.size()));
      a.canonicalize();
      aj.push_back(a.get_str());
      text << '\t' << a;
    }
    row["a"] = aj;
    rows.push_back(row);
    text << "\n";
  }
  if (c.output == "json")
    std::cout << rows.dump(2) << "\n";
  else
    std::cout << text.str();
  return kOk;
}

int cmd_points(const Common& c) {
  const IdealFile file = read_ideal_file(c.ideal_path);
  EnumerationOptions eo;
  eo.budget = c.budget;
  eo.jobs = c.jobs;
  PointSet ps;
  if (c.mode == "affine") {
    ps = enumerate_affine(affine_ideal(file), affine_height(c), eo);
  } else {
    const Ideal ideal = projective_ideal(file);
    if (!ideal.homogeneous()) throw ContractError("projective enumeration needs a homogeneous ideal");
    ps = enumerate_projective(ideal, projective_box(c, ideal.num_vars()), eo);
  }
  if (c.output == "json") {
    std::cout << Json(ps.points).dump() << "\n";
    return kOk;
  }
  for (const auto& p : ps.points) {
    for (std::size_t i = 0; i < p.size(); ++i) std::cout << (i ? " " : "") << p[i];
    std::cout << "\n";
  }
  return kOk;
}

struct ConstructArgs {
  std::optional<unsigned> delta;
  std::optional<double> epsilon;
  std::string strategy = "adaptive";
  std::optional<double> norm_bound;
  std::string chart_path;
  std::string out_path;
  bool timings = false;
  unsigned delta_max = 12;
  unsigned probe = 40;
};

void add_construct(CLI::App* cmd, ConstructArgs& a) {
  auto* d = cmd->add_option("--delta", a.delta, "auxiliary degree");
  auto* e = cmd->add_option("--epsilon", a.epsilon, "exponent slack; delta is chosen from it");
  d->excludes(e);
  cmd->add_option("--strategy", a.strategy, "adaptive or theoretical")->check(CLI::IsMember({"adaptive", "theoretical"}));
  cmd->add_option("--norm-bound", a.norm_bound, "theoretical mode: norm bound R for every row");
  cmd->add_option("--chart", a.chart_path, "theoretical mode: polynomial chart file");
  cmd->add_option("--delta-max", a.delta_max, "largest delta tried when choosing from epsilon");
  cmd->add_option("--probe", a.probe, "degree at which the limits a_i are estimated");
}

PipelineReport run_pipeline(const Common& c, const ConstructArgs& a, const IdealFile& file) {
  EngineOptions eng;
  eng.strategy = parse_strategy(a.strategy);
  eng.norm_bound = a.norm_bound;
  eng.jobs = c.jobs;
  eng.budget = c.budget;
  if (!a.chart_path.empty()) eng.chart = read_chart_file(a.chart_path, file.vars - 1);
  if (eng.strategy == Strategy::theoretical && !eng.chart) throw InputError("--strategy theoretical needs --chart");
  if (!a.delta && !a.epsilon) throw InputError("give --delta or --epsilon");
  const OrderKind kind = parse_order_kind(c.ordering);
  if (c.mode == "affine") {
    AffineRun run;
    run.height = affine_height(c);
    run.delta = a.delta;
    run.epsilon = a.epsilon;
    run.order = kind;
    run.engine = eng;
    run.delta_max = a.delta_max;
    run.probe = a.probe;
    return affine_pipeline(affine_ideal(file), run);
  }
  const Ideal ideal = projective_ideal(file);
  ProjectiveRun run;
  run.box = projective_box(c, ideal.num_vars());
  run.delta = a.delta;
  run.epsilon = a.epsilon;
  run.order = kind;
  run.engine = eng;
  run.delta_max = a.delta_max;
  run.probe = a.probe;
  return projective_pipeline(ideal, run);
}

int report_check(const ReportCheck& check) {
  for (const auto& f : check.failures) std::cerr << "verify: " << f << "\n";
  if (!check.ok) {
    std::cerr << "verify: FAIL (" << check.failures.size() << " problem(s))\n";
    return kVerifyFailed;
  }
  return kOk;
}

int cmd_construct(const Common& c, const ConstructArgs& a) {
  const IdealFile file = read_ideal_file(c.ideal_path);
  const auto start = std::chrono::steady_clock::now();
  const PipelineReport report = run_pipeline(c, a, file);
  const auto built = std::chrono::steady_clock::now();
  Json j = report_to_json(report);
  // Every construct run ends with an independent recheck of what it is about to emit.
  const ReportCheck check = verify_report(j, file, c.budget, c.jobs);
  const auto verified = std::chrono::steady_clock::now();
  j["verified"] = check.ok;
  if (a.timings) {
    using ms = std::chrono::duration<double, std::milli>;
    j["timings"] = {{"construct_ms", ms(built - start).count()}, {"verify_ms", ms(verified - built).count()}};
  }
  if (c.output == "json")
    write_out(a.out_path, j.dump(2) + "\n");
  else if (c.output == "csv")
    write_out(a.out_path, csv_header() + "\n" + csv_row(report) + "\n");
  else
    write_out(a.out_path, report_text(report));
  return report_check(check);
}

int cmd_verify(const std::string& report_path, const std::string& ideal_path, double budget, unsigned jobs) {
  std::ifstream in(report_path);
  if (!in) throw InputError("cannot open report '" + report_path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    throw InputError(std::string("report is not valid JSON: ") + e.what());
  }
  const IdealFile file = read_ideal_file(ideal_path);
  ReportCheck check;
  try {
    check = verify_report(j, file, budget, jobs);
  } catch (const Json::exception& e) {
    throw InputError(std::string("report is malformed: ") + e.what());
  } catch (const ParseError& e) {
    // A certificate that does not even parse is a failed certificate, not a bad invocation.
    check.ok = false;
    check.failures.push_back(std::string("certificate does not parse: ") + e.what());
  }
  const int rc = report_check(check);
  if (rc == kOk) std::cout << "verify: PASS (" << check.certificates << " certificates, " << check.points << " points)\n";
  return rc;
}

int cmd_sweep(Common c, ConstructArgs a, const std::vector<double>& list) {
  const IdealFile file = read_ideal_file(c.ideal_path);
  std::cout << "height,points,delta,certificates,k_actual,k_bound_scale,uncovered,verified\n";
  bool all_ok = true;
  for (double b : list) {
    c.height = b;
    c.heights.clear();
    const PipelineReport report = run_pipeline(c, a, file);
    const ReportCheck check = verify_report(report_to_json(report), file, c.budget, c.jobs);
    all_ok = all_ok && check.ok;
    std::cout << b << ',' << report.points.size() << ',' << report.delta << ',' << report.certificates.size() << ','
              << report.k_actual() << ',' << report.k_bound_scale << ',' << report.uncovered.size() << ','
              << (check.ok ? "yes" : "no") << "\n";
  }
  return all_ok ? kOk : kVerifyFailed;
}

int cmd_bound(std::uint64_t mu, unsigned m, const std::vector<double>& norms, double r, bool exact) {
  const ExponentBudget eb = choose_nu(mu, m);
  std::cout << "nu " << eb.nu << "\ne " << eb.e << "\n";
  if (norms.empty()) return kOk;
  DetBoundInput in{mu, m, norms, r};
  const LogBound b = determinant_bound(in);
  if (b.is_zero())
    std::cout << "log_bound -inf\nbound 0\n";
  else
    std::cout << "log_bound " << b.log() << "\nbound " << b.value() << "\n";
  if (exact) {
    std::vector<Rational> qn;
    for (double n : norms) qn.emplace_back(n);
    std::cout << "exact " << determinant_bound_exact(mu, m, qn, Rational(r)).get_str() << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Determinant-method auxiliary polynomials for integral points of bounded height"};
  app.require_subcommand(1);
  Common common;
  ConstructArgs cargs;

  auto* hil = app.add_subcommand("hilbert", "Hilbert function, sigma and a_i over a degree range");
  add_ideal(hil, common);
  hil->get_option("--mode")->default_str("projective");
  unsigned from = 0, to = 6;
  hil->add_option("--from", from, "first degree");
  hil->add_option("--to", to, "last degree");
  hil->add_option("--ordering", common.ordering, "grlex-left or grevlex");
  hil->add_option("--output", common.output, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* pts = app.add_subcommand("points", "List integral points of bounded height");
  add_ideal(pts, common);
  add_heights(pts, common);
  pts->add_option("--output", common.output, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* con = app.add_subcommand("construct", "Build and verify auxiliary polynomials covering all points");
  add_ideal(con, common);
  add_heights(con, common);
  add_construct(con, cargs);
  con->add_option("--ordering", common.ordering, "grlex-left or grevlex");
  con->add_option("--output", common.output, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  con->add_option("--out", cargs.out_path, "write the report here instead of stdout");
  con->add_flag("--timings", cargs.timings, "include wall-clock timings in the JSON report");

  auto* ver = app.add_subcommand("verify", "Independently recheck a stored report");
  std::string report_path;
  ver->add_option("--report", report_path, "report JSON")->required()->check(CLI::ExistingFile);
  ver->add_option("--ideal", common.ideal_path, "ideal file")->required()->check(CLI::ExistingFile);
  ver->add_option("--budget", common.budget, "maximum lattice vectors to scan");
  ver->add_option("--jobs", common.jobs, "worker threads")->check(CLI::PositiveNumber);

  auto* swp = app.add_subcommand("sweep", "Run construct over a list of heights and print CSV");
  add_ideal(swp, common);
  add_construct(swp, cargs);
  std::vector<double> sweep_list;
  swp->add_option("--heights", sweep_list, "comma-separated heights")->required()->delimiter(',');
  swp->add_option("--ordering", common.ordering, "grlex-left or grevlex");
  swp->add_option("--budget", common.budget, "maximum lattice vectors to scan");
  swp->add_option("--jobs", common.jobs, "worker threads")->check(CLI::PositiveNumber);

  auto* bnd = app.add_subcommand("bound", "Taylor budget and determinant bound for given norms");
  std::uint64_t mu = 1;
  unsigned m = 1;
  std::vector<double> norms;
  double r = 0.5;
  bool exact = false;
  bnd->add_option("--mu", mu, "matrix size")->required();
  bnd->add_option("--m", m, "parameter dimension");
  bnd->add_option("--norms", norms, "row norms")->delimiter(',');
  bnd->add_option("--r", r, "diameter of the point set, in (0,1)");
  bnd->add_flag("--exact", exact, "also evaluate the bound in exact rational arithmetic");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (hil->parsed()) {
      if (hil->count("--mode") == 0) common.mode = "projective";
      if (hil->count("--output") == 0) common.output = "text";
      return cmd_hilbert(common, from, to);
    }
    if (pts->parsed()) {
      if (pts->count("--output") == 0) common.output = "text";
      return cmd_points(common);
    }
    if (con->parsed()) return cmd_construct(common, cargs);
    if (ver->parsed()) return cmd_verify(report_path, common.ideal_path, common.budget, common.jobs);
    if (swp->parsed()) return cmd_sweep(common, cargs, sweep_list);
    if (bnd->parsed()) return cmd_bound(mu, m, norms, r, exact);
  } catch (const BudgetError& e) {
    std::cerr << "detm: " << e.what() << "\n";
    return kBudget;
  } catch (const std::invalid_argument& e) {  // InputError, ParseError
    std::cerr << "detm: " << e.what() << "\n";
    return kInputError;
  } catch (const std::domain_error& e) {
    std::cerr << "detm: " << e.what() << "\n";
    return kInputError;
  } catch (const std::logic_error& e) {
    std::cerr << "detm: " << e.what() << "\n";
    return kInputError;
  }
  return kOk;
}
