#pragma once

/**
 * @file report.hpp
 * @brief Report documents produced by the command line tool.
 *
 * A report is an insertion-ordered JSON object. Real numbers are rounded to
 * six fractional digits before they are stored, so the JSON, human and CSV
 * renderings all derive from the same values and repeated runs are
 * byte-identical. Exact rationals are carried alongside as "num/den" strings.
 * The schema is described in docs/report_schema.md.
 */

#include <optional>
#include <string>

#include <json.hpp>

#include "sdecomp/config.hpp"
#include "sdecomp/decomposition.hpp"
#include "sdecomp/redistribution.hpp"

namespace sdecomp {

using Report = nlohmann::ordered_json;

enum class OutputFormat { human, json, csv };
std::optional<OutputFormat> parse_format(std::string_view token);

/// Rounded to six fractional digits.
double fixed6(double value);
/// Fixed notation with six fractional digits.
std::string format_fixed6(double value);

struct PlanRequest {
  SpaceKind space = SpaceKind::xxf_lo;
  Layout layout = Layout::xyles;
  Count nprocs = 1;
  bool unbalanced = false;
  double max_imbalance = kDefaultMaxImbalance;
  bool verbose = false;
};

struct SimulateRequest {
  Layout layout = Layout::xyles;
  Count nprocs = 1;
  Transform transform = Transform::xxf2yxf;
  bool unbalanced = false;
  double max_imbalance = kDefaultMaxImbalance;
  Count size_guard = kDefaultSizeGuard;
  bool verbose = false;
};

Report plan_report(const GridShape& shape, const PlanRequest& req);
Report sweetspots_report(const GridShape& shape, Layout layout, Count max_procs);
Report estimate_report(const GridShape& shape, Layout layout, Count nprocs);
/// Throws SizeGuardError before running the oracle when the guard is exceeded.
Report simulate_report(const GridShape& shape, const SimulateRequest& req);
Report compare_report(const GridShape& shape, const SimulateRequest& req);

/// Pretty-printed JSON with a trailing newline.
std::string render_json(const Report& report);
/// Indented "key: value" text.
std::string render_human(const Report& report);
/// Command-specific CSV table (see the schema document).
std::string render_csv(const Report& report);

}  // namespace sdecomp
