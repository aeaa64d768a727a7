// Acceptance suite: one PASS/FAIL line per criterion, tolerances fixed below.
//
// Exit status is zero when every criterion passes except those listed in kKnownFailures,
// which must still fail (a surprise pass is reported as an error so the list stays honest).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "detm/engine.hpp"
#include "detm/errors.hpp"
#include "detm/report.hpp"
#include "instances.hpp"
#include "oracles.hpp"

using namespace detm;

namespace {

// The single-point variety has HF = 1 in every degree, so the staircase is {x0^delta} and no
// certificate outside the ideal vanishes at the point. Coverage cannot hold for it.
const std::set<int> kKnownFailures{2};

constexpr double kSoundnessSeconds = 60;
constexpr double kStressSeconds = 30;
constexpr double kSweepSeconds = 300;
constexpr double kExponentTolerance = 0.1;
constexpr double kSlopeLimit = 0.5 + 0.25 + 0.1;

using Clock = std::chrono::steady_clock;
double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string joined(const std::ostringstream& parts) {
  std::string s = parts.str();
  if (s.size() >= 2 && s.compare(s.size() - 2, 2, ", ") == 0) s.resize(s.size() - 2);
  return s;
}

struct Result {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    else if (detail.size() < 400) detail += "; " + why;
    pass = false;
  }
};

struct CorpusRun {
  std::string name;
  std::string file;
  bool affine = true;
  double height = 1;
  std::vector<double> heights;
  std::optional<unsigned> delta;
  std::optional<double> epsilon;
};

std::vector<CorpusRun> corpus_runs() {
  return {
      {"parabola", "parabola.ideal", true, 1e4, {}, std::nullopt, 0.25},
      {"circle", "circle.ideal", true, 100, {}, 2u, std::nullopt},
      {"line", "line.ideal", true, 200, {}, 2u, std::nullopt},
      {"conic", "conic.ideal", false, 0, {30, 30, 30}, std::nullopt, 0.25},
      {"twisted cubic", "twisted_cubic.ideal", false, 0, {20, 20, 20, 20}, 2u, std::nullopt},
      {"single point", "single_point.ideal", true, 10, {}, 2u, std::nullopt},
      {"empty", "empty.ideal", true, 100, {}, 2u, std::nullopt},
  };
}

PipelineReport run_corpus(const CorpusRun& c, unsigned jobs = 1) {
  const IdealFile file = read_ideal_file(oracle::corpus(c.file));
  if (c.affine) {
    AffineRun run;
    run.height = c.height;
    run.delta = c.delta;
    run.epsilon = c.epsilon;
    run.engine.jobs = jobs;
    return affine_pipeline(affine_ideal(file), run);
  }
  ProjectiveRun run;
  run.box = HeightBox(c.heights);
  run.delta = c.delta;
  run.epsilon = c.epsilon;
  run.engine.jobs = jobs;
  return projective_pipeline(projective_ideal(file), run);
}

Ideal homogeneous_of(const CorpusRun& c) {
  const IdealFile file = read_ideal_file(oracle::corpus(c.file));
  return c.affine ? homogenization(affine_ideal(file)) : projective_ideal(file);
}

std::vector<IntPoint> lifted_points(const PipelineReport& r) {
  if (r.mode != "affine") return r.points;
  std::vector<IntPoint> out;
  for (const auto& x : r.points) {
    IntPoint y{1};
    y.insert(y.end(), x.begin(), x.end());
    out.push_back(std::move(y));
  }
  return out;
}

// 1. Every certificate passes the independent check against a freshly computed basis.
Result soundness() {
  Result res;
  const auto start = Clock::now();
  std::size_t certs = 0;
  for (const auto& c : corpus_runs()) {
    const PipelineReport r = run_corpus(c);
    const GroebnerBasis gb = groebner(homogeneous_of(c), MonomialOrder(OrderKind::grlex_left), r.delta + 2);
    const auto pts = lifted_points(r);
    for (std::size_t k = 0; k < r.certificates.size(); ++k) {
      const auto& cert = r.certificates[k];
      std::vector<IntPoint> listed;
      for (auto i : cert.points) listed.push_back(pts.at(i));
      const VerifyResult v = verify_certificate(cert.form, r.delta, listed, gb);
      if (!v.ok) res.fail(c.name + " certificate " + std::to_string(k) + ": " + v.reason);
      // Direct exact evaluation as well, independent of the verifier.
      for (const auto& x : listed) {
        std::vector<Rational> q;
        for (auto v2 : x) q.emplace_back(static_cast<long>(v2));
        if (evaluate(cert.form, q) != 0) res.fail(c.name + ": form does not vanish at " + format_point(x));
      }
      ++certs;
    }
    const ReportCheck rc = verify_report(report_to_json(r), read_ideal_file(oracle::corpus(c.file)));
    for (const auto& f : rc.failures)
      if (f.find("not covered") == std::string::npos) res.fail(c.name + ": " + f);
  }
  const double t = seconds_since(start);
  if (t > kSoundnessSeconds) res.fail("took " + std::to_string(t) + " s");
  if (res.pass) res.detail = std::to_string(certs) + " certificates verified in " + std::to_string(t) + " s";
  return res;
}

// 2. The covered points are exactly the enumerated points.
Result coverage() {
  Result res;
  std::ostringstream ok;
  for (const auto& c : corpus_runs()) {
    const PipelineReport r = run_corpus(c);
    std::set<std::size_t> covered;
    for (const auto& cert : r.certificates) covered.insert(cert.points.begin(), cert.points.end());
    std::size_t missing = 0;
    for (std::size_t i = 0; i < r.points.size(); ++i)
      if (!covered.count(i)) ++missing;
    const bool extra = !covered.empty() && *covered.rbegin() >= r.points.size();
    if (missing > 0 || extra)
      res.fail(c.name + ": " + std::to_string(missing) + " of " + std::to_string(r.points.size()) +
               " points uncovered (mu = " + std::to_string(r.mu) + ")");
    else
      ok << c.name << " " << r.points.size() << "/" << r.points.size() << ", ";
  }
  if (res.pass) res.detail = joined(ok);
  return res;
}

// 3. |det| against the computed bound on 200 random instances.
Result stress() {
  Result res;
  const auto start = Clock::now();
  std::mt19937_64 rng(37);
  int violations = 0;
  for (int index = 0; index < 200; ++index) {
    const auto in = oracle::random_instance(rng, index);
    std::vector<std::vector<Rational>> mat(in.mu, std::vector<Rational>(in.mu));
    for (std::size_t i = 0; i < in.mu; ++i)
      for (std::size_t j = 0; j < in.mu; ++j) mat[i][j] = evaluate(in.psi[i], in.points[j]);
    const Rational d = abs(oracle::det(mat));
    const auto budget = choose_nu(in.mu, in.m);
    std::vector<Rational> norms;
    for (const auto& p : in.psi) {
      const std::vector<Polynomial> comp{p};
      norms.push_back(ck_norm_bound(comp, budget.nu, in.box));
    }
    if (d > determinant_bound_exact(in.mu, in.m, norms, Rational(in.r))) ++violations;
  }
  const double t = seconds_since(start);
  if (violations > 0) res.fail(std::to_string(violations) + " violations");
  if (t > kStressSeconds) res.fail("took " + std::to_string(t) + " s");
  if (res.pass) res.detail = "200 instances, 0 violations, " + std::to_string(t) + " s";
  return res;
}

// 4. Vandermonde: e = mu(mu-1)/2 and |V| <= r^e.
Result vandermonde() {
  Result res;
  std::mt19937_64 rng(41);
  for (std::uint64_t mu = 2; mu <= 6; ++mu) {
    const std::uint64_t e = mu * (mu - 1) / 2;
    if (choose_nu(mu, 1).e != e) res.fail("e wrong at mu = " + std::to_string(mu));
    for (int trial = 0; trial < 100; ++trial) {
      const Rational r = oracle::q(1, 2 + static_cast<long>(rng() % 40));
      std::vector<Rational> t;
      for (std::uint64_t j = 0; j < mu; ++j) t.push_back(oracle::q(static_cast<long>(rng() % 10001), 10000) * r);
      std::vector<std::vector<Rational>> v(mu, std::vector<Rational>(mu));
      for (std::uint64_t i = 0; i < mu; ++i)
        for (std::uint64_t j = 0; j < mu; ++j) {
          Rational x = 1;
          for (std::uint64_t k = 0; k < i; ++k) x *= t[j];
          v[i][j] = x;
        }
      Rational re = 1;
      for (std::uint64_t k = 0; k < e; ++k) re *= r;
      if (abs(oracle::det(v)) > re) res.fail("|V| > r^e at mu = " + std::to_string(mu));
    }
  }
  if (res.pass) res.detail = "mu = 2..6, 100 point sets each";
  return res;
}

// 5. Hilbert function against linear algebra; sigma sums to s HF(s).
Result hilbert() {
  Result res;
  std::size_t checks = 0;
  for (const auto& c : corpus_runs()) {
    const Ideal ideal = homogeneous_of(c);
    for (const auto kind : {OrderKind::grlex_left, OrderKind::grevlex}) {
      const GroebnerBasis gb = groebner(ideal, MonomialOrder(kind), 8u);
      for (unsigned s = 0; s <= 8; ++s) {
        const std::size_t hf = hilbert_function(gb, s);
        if (hf != oracle::hilbert_oracle(ideal, s)) res.fail(c.name + " HF(" + std::to_string(s) + ")");
        Integer total = 0;
        for (std::size_t i = 0; i < ideal.num_vars(); ++i) total += sigma(gb, i, s);
        if (total != Integer(static_cast<unsigned long>(s) * hf)) res.fail(c.name + " sigma sum at " + std::to_string(s));
        ++checks;
      }
    }
  }
  if (res.pass) res.detail = std::to_string(checks) + " (ideal, ordering, s) triples";
  return res;
}

// 6. Finite-s exponent inequality, and the s = 40 value near m/(m+1).
Result exponent_bound() {
  Result res;
  std::ostringstream ok;
  for (const char* name : {"parabola", "twisted_cubic_affine"}) {
    const Ideal affine = affine_ideal(read_ideal_file(oracle::corpus(std::string(name) + ".ideal")));
    const Ideal hom = homogenization(affine);
    const MonomialOrder ord(OrderKind::grlex_left);
    const GroebnerBasis gb = groebner(hom, ord, 40u);
    const GroebnerBasis gj = groebner(with_generator(hom, Polynomial::variable(hom.num_vars(), 0)), ord, 40u);
    const AffineBoundContext ctx(affine, 40);
    Rational running = 0;  // sum_{t<=s} t HF_J(t)
    Rational lhs40;
    for (unsigned s = 1; s <= 40; ++s) {
      running += Rational(static_cast<unsigned long>(s) * hilbert_function(gj, s));
      if (s < 4) continue;
      const Rational denom(static_cast<unsigned long>(s) * hilbert_function(gb, s));
      Integer upper = 0;
      for (std::size_t i = 1; i < hom.num_vars(); ++i) upper += sigma(gb, i, s);
      const Rational lhs = Rational(upper) / denom;
      const Rational rhs = running / denom;
      if (!(lhs <= rhs)) res.fail(std::string(name) + " fails at s = " + std::to_string(s));
      const auto lib = ctx.at(s);
      if (lib.lhs != lhs || lib.intermediate != rhs) res.fail(std::string(name) + " library disagrees at s = " + std::to_string(s));
      if (s == 40) lhs40 = lhs;
    }
    const unsigned m = ctx.dimension();
    const double target = static_cast<double>(m) / (m + 1);
    const double gap = std::abs(lhs40.get_d() - target);
    if (gap > kExponentTolerance) res.fail(std::string(name) + " lhs(40) is " + std::to_string(gap) + " from m/(m+1)");
    ok << name << " lhs(40) = " << lhs40.get_d() << " (target " << target << "), ";
  }
  if (res.pass) res.detail = joined(ok);
  return res;
}

// 7. Parabola sweep: slope of log(delta * certificates) against log B, and exact point counts.
Result scaling() {
  Result res;
  const auto start = Clock::now();
  const Ideal parabola = affine_ideal(read_ideal_file(oracle::corpus("parabola.ideal")));
  std::vector<double> xs, ys;
  std::ostringstream ok;
  for (long b : {100L, 1000L, 10000L}) {
    AffineRun run;
    run.height = static_cast<double>(b);
    run.epsilon = 0.25;
    const PipelineReport r = affine_pipeline(parabola, run);
    long root = 0;
    while ((root + 1) * (root + 1) <= b) ++root;
    if (r.points.size() != static_cast<std::size_t>(2 * root + 1))
      res.fail("N at B = " + std::to_string(b) + " is " + std::to_string(r.points.size()));
    if (!r.uncovered.empty()) res.fail("uncovered points at B = " + std::to_string(b));
    xs.push_back(std::log(static_cast<double>(b)));
    ys.push_back(std::log(static_cast<double>(r.k_actual())));
    ok << "B=" << b << " delta=" << r.delta << " certs=" << r.certificates.size() << ", ";
  }
  const double n = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  if (slope > kSlopeLimit) res.fail("slope " + std::to_string(slope) + " exceeds " + std::to_string(kSlopeLimit));
  const double t = seconds_since(start);
  if (t > kSweepSeconds) res.fail("took " + std::to_string(t) + " s");
  if (res.pass) res.detail = ok.str() + "slope " + std::to_string(slope) + " <= " + std::to_string(kSlopeLimit);
  return res;
}

// 8. Identical configurations give byte-identical JSON.
Result determinism() {
  Result res;
  for (const auto& c : corpus_runs()) {
    const std::string a = report_to_json(run_corpus(c, 4)).dump(2);
    const std::string b = report_to_json(run_corpus(c, 4)).dump(2);
    const std::string serial = report_to_json(run_corpus(c, 1)).dump(2);
    if (a != b) res.fail(c.name + ": repeated runs differ");
    if (a != serial) res.fail(c.name + ": thread count changes the report");
  }
  if (res.pass) res.detail = "full corpus, twice with 4 threads and once with 1";
  return res;
}

// 9. Tampered reports are rejected by the verifier.
Result mutation() {
  Result res;
  const CorpusRun c{"parabola", "parabola.ideal", true, 1000, {}, 2u, std::nullopt};
  const IdealFile file = read_ideal_file(oracle::corpus(c.file));
  const PipelineReport r = run_corpus(c);
  const Json golden = report_to_json(r);
  if (!verify_report(golden, file).ok) {
    res.fail("golden report does not verify");
    return res;
  }
  const GroebnerBasis gb = groebner(homogeneous_of(c), MonomialOrder(OrderKind::grlex_left), r.delta + 2);
  const VariableNames proj = projective_names(3);
  const VariableNames aff = affine_names(2);
  const auto pts = lifted_points(r);
  std::size_t killed = 0, total = 0;
  auto expect_rejected = [&](const Json& j, const std::string& what) {
    ++total;
    if (verify_report(j, file).ok) res.fail(what + " survived");
    else ++killed;
  };
  auto with_form = [&](std::size_t k, const Polynomial& form) {
    Json j = golden;
    j["certificates"][k]["form"] = format_polynomial(form, proj);
    j["certificates"][k]["poly"] = format_polynomial(dehomogenize(form, 0), aff);
    return j;
  };
  for (std::size_t k = 0; k < r.certificates.size(); ++k) {
    const auto& cert = r.certificates[k];
    std::vector<Rational> first;
    for (auto v : pts.at(cert.points.front())) first.emplace_back(static_cast<long>(v));
    // Coefficient +1 on a monomial that is nonzero at the first covered point.
    for (const auto& e : staircase(gb, r.delta).exponents) {
      Polynomial mono(3);
      mono.add_term(e, Rational(1));
      if (evaluate(mono, first) == 0) continue;
      expect_rejected(with_form(k, cert.form + mono), "coefficient +1 on certificate " + std::to_string(k));
      break;
    }
    // Move one term onto a leading-term monomial.
    for (const auto& lm : gb.leading_monomials()) {
      if (lm.degree() > r.delta) continue;
      std::vector<std::uint32_t> pad(lm.size(), 0);
      pad[0] = r.delta - lm.degree();
      const Exponent e = lm + Exponent(pad);
      const auto& [e0, c0] = *cert.form.terms().begin();
      Polynomial moved = cert.form;
      moved.add_term(e0, -c0);
      moved.add_term(e, c0);
      expect_rejected(with_form(k, moved), "LT support on certificate " + std::to_string(k));
      break;
    }
  }
  // Dropped points: from the enumeration, and from a certificate.
  Json dropped = golden;
  dropped["points"].erase(0);
  expect_rejected(dropped, "point dropped from the list");
  for (std::size_t k = 0; k < r.certificates.size(); ++k) {
    Json j = golden;
    j["certificates"][k]["points"].erase(0);
    expect_rejected(j, "point dropped from certificate " + std::to_string(k));
  }
  if (res.pass) res.detail = std::to_string(killed) + "/" + std::to_string(total) + " mutants rejected";
  return res;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Result()>>> criteria{
      {"soundness", soundness},         {"coverage", coverage},       {"determinant bound stress", stress},
      {"Vandermonde exactness", vandermonde}, {"Hilbert oracle", hilbert}, {"exponent bound", exponent_bound},
      {"parabola scaling", scaling},    {"determinism", determinism}, {"mutation killing", mutation},
  };
  int unexpected = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    Result r;
    try {
      r = criteria[i].second();
    } catch (const std::exception& e) {
      r.fail(std::string("exception: ") + e.what());
    }
    const bool known = kKnownFailures.count(id) > 0;
    std::cout << (r.pass ? "PASS" : "FAIL") << " " << id << " " << criteria[i].first << ": " << r.detail
              << (known && !r.pass ? " [known]" : "") << std::endl;
    if (r.pass == known) ++unexpected;
  }
  std::cout.flush();
  if (unexpected > 0) std::cerr << unexpected << " unexpected result(s)\n";
  return unexpected == 0 ? 0 : 1;
}
