#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "detm/engine.hpp"
#include "detm/ideal.hpp"

namespace detm {

using Json = nlohmann::ordered_json;

/// Machine contract for a pipeline run. Key order and number formatting are fixed, so equal
/// runs serialize to identical bytes.
Json report_to_json(const PipelineReport& report);

std::string csv_header();
std::string csv_row(const PipelineReport& report);
/// Human summary; not a stable format.
std::string report_text(const PipelineReport& report);

struct ReportCheck {
  bool ok = true;
  std::size_t certificates = 0;
  std::size_t points = 0;
  std::vector<std::string> failures;
};

/// Recheck a stored report against the ideal file it claims to describe. Recomputes the Groebner
/// basis, re-enumerates the points, and checks every certificate and the coverage. Nothing in the
/// report is trusted beyond its parameters.
ReportCheck verify_report(const Json& report, const IdealFile& file, double budget = 1e9, unsigned jobs = 1);

std::string format_point(const IntPoint& x);

}  // namespace detm
