#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <span>
#include <string_view>
#include <optional>
#include <string>
#include <vector>

#include "detm/detbound.hpp"
#include "detm/groebner.hpp"
#include "detm/hilbert.hpp"
#include "detm/matrix.hpp"
#include "detm/points.hpp"

namespace detm {

/// Integer sub-box: coordinate i ranges over [lo[i], hi[i]]. Bisection of [a, b] gives
/// [a, mid] and [mid + 1, b] with mid = floor((a + b) / 2), so integer points never straddle.
struct IntBox {
  std::vector<std::int64_t> lo;
  std::vector<std::int64_t> hi;
  std::string path;  // "" for the root, then one '0' (left) or '1' (right) per split

  bool contains(const IntPoint& x) const;
  std::int64_t width(std::size_t axis) const { return hi[axis] - lo[axis] + 1; }
  static IntBox of_heights(const HeightBox& box);
};

struct AuxiliaryCertificate {
  Polynomial form{1};               // homogeneous of degree delta, integer, content 1
  unsigned delta = 0;
  std::vector<std::size_t> points;  // indices into the point set that was covered
  IntBox box;
  std::vector<double> cube_lo;      // theoretical mode: parameter cube, empty otherwise
  bool support_in_staircase = false;
  bool normal_form_nonzero = false;
};

/// Either a certificate, or the rank that blocked one.
struct BoxOutcome {
  std::optional<AuxiliaryCertificate> certificate;
  std::size_t rank = 0;
};

BoxOutcome auxiliary_for_box(std::span<const IntPoint> points, std::span<const std::size_t> indices,
                             const Staircase& st, const GroebnerBasis& gb, const IntBox& box);

/// Polynomial chart of a hypersurface-like variety over m parameters t_0..t_{m-1}:
/// x_j = P_j(t), j = 1..n (x_0 = 1). Each parameter must appear as a coordinate on its own.
struct Chart {
  std::size_t params = 0;
  std::vector<Polynomial> coordinates;  // n entries, polynomials in `params` variables
  std::vector<std::size_t> identity_of; // identity_of[k] = j with P_j = t_k
};

Chart read_chart_file(const std::string& path, std::size_t n);
Chart parse_chart(std::istream& in, std::size_t n);

/// Upper bound T_k on |t_k| over all points of height <= B, derived from single-term components.
std::vector<Rational> chart_ranges(const Chart& chart, double height);

/// Largest rho (rounded down, capped at 1/2) with
/// mu! D_m(nu)^mu prod norms prod B_i^sigma_i (rho sqrt(m))^f < 1.
double theoretical_rho(const HeightBox& box, std::span<const Integer> sigma, std::uint64_t f, std::uint64_t mu,
                       unsigned nu, unsigned m, std::span<const double> norms);
/// Same with one norm bound R for all rows.
double theoretical_rho(const HeightBox& box, std::span<const Integer> sigma, std::uint64_t f, std::uint64_t mu,
                       unsigned nu, unsigned m, double norm_bound);

enum class Strategy { adaptive, theoretical };
std::string_view to_string(Strategy s);
Strategy parse_strategy(std::string_view text);

struct EngineOptions {
  Strategy strategy = Strategy::adaptive;
  std::optional<double> norm_bound;  // theoretical mode: overrides the chart-derived bound
  std::optional<Chart> chart;        // theoretical mode
  unsigned jobs = 1;
  double budget = 1e9;
};

struct PipelineReport {
  std::string mode;  // "affine" or "projective"
  OrderKind order = OrderKind::grlex_left;
  std::string strategy;
  std::vector<double> heights;
  unsigned delta = 0;
  std::uint64_t mu = 0;
  unsigned nu = 0;
  std::uint64_t f = 0;
  unsigned m = 0;
  std::vector<Integer> sigma;
  std::optional<double> rho;
  std::optional<double> norm_bound;
  std::optional<std::uint64_t> cubes;

  std::vector<IntPoint> points;           // as enumerated (affine coordinates in affine mode)
  std::vector<std::size_t> class_counts;  // projective classes S_0..S_n of the lifted points
  std::vector<AuxiliaryCertificate> certificates;
  std::vector<Polynomial> affine_polys;   // affine mode: g(x) = G(1, x), aligned with certificates
  std::vector<std::size_t> uncovered;     // indices of points no certificate covers
  std::vector<std::size_t> full_rank_cubes;  // theoretical mode: falsifying cubes

  std::size_t boxes_examined = 0;
  unsigned max_axis_depth = 0;
  unsigned max_depth = 0;
  unsigned depth_limit = 0;

  std::uint64_t k_actual() const { return static_cast<std::uint64_t>(delta) * certificates.size(); }
  std::vector<double> k_bound_exponents;  // m sigma_i / f
  double k_bound_scale = 1;               // prod B_i^(m sigma_i / f)
  std::optional<double> k_bound;          // theoretical mode: delta * cubes

  std::optional<AffineOrderingBound> affine_bound;
  std::vector<std::string> notes;
};

/// The homogeneous pipeline over the projective points already enumerated.
/// m is the dimension of the variety (used for nu, f and the exponent report).
PipelineReport cover_and_construct(const GroebnerBasis& gb, const PointSet& points, unsigned delta, unsigned m,
                                   const EngineOptions& options);

struct DeltaChoice {
  unsigned delta = 0;
  unsigned probe = 0;
  std::vector<double> finite;  // m sigma_i(delta) / f(delta)
  std::vector<double> target;  // (m+1) a_i(probe) / d^(1/m) + epsilon
};

/// Smallest delta <= delta_max meeting the slack for every i. gb must be capped at >= probe.
DeltaChoice choose_delta(const GroebnerBasis& gb, double epsilon, const Integer& d, unsigned m, unsigned delta_max = 12,
                         unsigned probe = 40);

struct AffineRun {
  double height = 1;
  std::optional<unsigned> delta;
  std::optional<double> epsilon;
  OrderKind order = OrderKind::grlex_left;
  EngineOptions engine;
  unsigned delta_max = 12;
  unsigned probe = 40;
};

PipelineReport affine_pipeline(const Ideal& affine, const AffineRun& run);

struct ProjectiveRun {
  HeightBox box{std::vector<double>{1.0}};
  std::optional<unsigned> delta;
  std::optional<double> epsilon;
  OrderKind order = OrderKind::grlex_left;
  EngineOptions engine;
  unsigned delta_max = 12;
  unsigned probe = 40;
};

PipelineReport projective_pipeline(const Ideal& ideal, const ProjectiveRun& run);

struct VerifyResult {
  bool ok = true;
  std::string reason;
  std::optional<IntPoint> counterexample;
};

/// Independent recheck: nonzero, support in M(delta), exact vanishing at each listed point,
/// normal form nonzero.
VerifyResult verify_certificate(const Polynomial& form, unsigned delta, std::span<const IntPoint> points,
                                const GroebnerBasis& gb);

}  // namespace detm
