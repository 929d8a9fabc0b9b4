// sdecomp: plan decompositions, estimate and simulate redistribution volume.
//
// Exit codes: 0 success, 2 usage error, 3 size guard exceeded, 4 invalid config.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "sdecomp/config.hpp"
#include "sdecomp/report.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitSizeGuard = 3;
constexpr int kExitConfig = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string config_path;
  std::string layout;
  sdecomp::Count nprocs = 0;
  std::string format = "human";
  double max_imbalance = sdecomp::kDefaultMaxImbalance;
  bool unbalanced = false;
  sdecomp::Count size_guard = sdecomp::kDefaultSizeGuard;
  bool verbose = false;
  std::string space = "xxf_lo";
  std::string transform = "xxf2yxf";
  sdecomp::Count max_procs = 0;
};

void add_common(CLI::App* cmd, Options& opt) {
  cmd->add_option("--config", opt.config_path, "Domain configuration (flat JSON)")->required();
  cmd->add_option("--layout", opt.layout, "Data layout: " + sdecomp::admissible_layouts());
  cmd->add_option("--format", opt.format, "Output format: human, json or csv");
  cmd->add_flag("--verbose", opt.verbose, "Include per-rank ranges or the full transfer matrix");
}

void add_nprocs(CLI::App* cmd, Options& opt) {
  cmd->add_option("--nprocs", opt.nprocs, "Number of ranks (defaults to the config value)");
}

void add_balance(CLI::App* cmd, Options& opt) {
  cmd->add_flag("--unbalanced", opt.unbalanced, "Use the two-blocksize decomposition");
  cmd->add_option("--max-imbalance", opt.max_imbalance,
                  "Largest accepted (large - small) / small before falling back");
}

sdecomp::Layout resolve_layout(const Options& opt, const sdecomp::DomainConfig& cfg) {
  if (opt.layout.empty()) return cfg.layout.value_or(sdecomp::Layout::xyles);
  const auto layout = sdecomp::parse_layout(opt.layout);
  if (!layout) {
    throw UsageError("invalid layout '" + opt.layout + "'; expected one of " +
                     sdecomp::admissible_layouts());
  }
  return *layout;
}

sdecomp::Count resolve_nprocs(const Options& opt, const sdecomp::DomainConfig& cfg) {
  const sdecomp::Count n = opt.nprocs > 0 ? opt.nprocs : cfg.nprocs.value_or(0);
  if (n < 1) throw UsageError("--nprocs must be given (or set in the config) and be >= 1");
  return n;
}

sdecomp::Transform resolve_transform(const Options& opt) {
  const auto t = sdecomp::parse_transform(opt.transform);
  if (!t) {
    throw UsageError("invalid transform '" + opt.transform +
                     "'; expected one of g2xxf, xxf2yxf, yxf2xxf, xxf2g");
  }
  return *t;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decomposition planner for g_lo / xxf_lo / yxf_lo data layouts"};
  app.require_subcommand(1);
  Options opt;

  auto* plan = app.add_subcommand("plan", "Balanced or unbalanced plan for one space");
  add_common(plan, opt);
  add_nprocs(plan, opt);
  add_balance(plan, opt);
  plan->add_option("--space", opt.space, "Index space: g_lo, xxf_lo or yxf_lo");

  auto* spots = app.add_subcommand("sweetspots", "Process counts that divide each space");
  add_common(spots, opt);
  spots->add_option("--max-procs", opt.max_procs, "Largest process count to list")->required();

  auto* estimate = app.add_subcommand("estimate", "Analytic xxf_lo <-> yxf_lo transfer estimate");
  add_common(estimate, opt);
  add_nprocs(estimate, opt);

  auto* simulate = app.add_subcommand("simulate", "Exact transfer map between two plans");
  add_common(simulate, opt);
  add_nprocs(simulate, opt);
  add_balance(simulate, opt);
  simulate->add_option("--transform", opt.transform, "g2xxf, xxf2yxf, yxf2xxf or xxf2g");
  simulate->add_option("--size-guard", opt.size_guard, "Oracle cell budget");

  auto* compare = app.add_subcommand("compare", "Analytic estimate against the exact oracle");
  add_common(compare, opt);
  add_nprocs(compare, opt);
  compare->add_option("--transform", opt.transform, "xxf2yxf or yxf2xxf");
  compare->add_option("--size-guard", opt.size_guard, "Oracle cell budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const auto format = sdecomp::parse_format(opt.format);
    if (!format) throw UsageError("invalid format '" + opt.format + "'; expected human, json or csv");
    // CSV output is the full table, so it always needs the per-rank detail
    const bool verbose = opt.verbose || *format == sdecomp::OutputFormat::csv;

    const auto cfg = sdecomp::load_config(opt.config_path);
    const auto layout = resolve_layout(opt, cfg);
    const auto& shape = cfg.shape;

    sdecomp::Report report;
    if (plan->parsed()) {
      const auto space = sdecomp::parse_space(opt.space);
      if (!space) throw UsageError("invalid space '" + opt.space + "'; expected g_lo, xxf_lo or yxf_lo");
      if (!(opt.max_imbalance >= 0.0)) throw UsageError("--max-imbalance must be >= 0");
      sdecomp::PlanRequest req{*space, layout, resolve_nprocs(opt, cfg), opt.unbalanced,
                               opt.max_imbalance, verbose};
      report = sdecomp::plan_report(shape, req);
    } else if (spots->parsed()) {
      if (opt.max_procs < 1) throw UsageError("--max-procs must be >= 1");
      report = sdecomp::sweetspots_report(shape, layout, opt.max_procs);
    } else if (estimate->parsed()) {
      report = sdecomp::estimate_report(shape, layout, resolve_nprocs(opt, cfg));
    } else {
      if (!(opt.max_imbalance >= 0.0)) throw UsageError("--max-imbalance must be >= 0");
      if (opt.size_guard < 1) throw UsageError("--size-guard must be >= 1");
      sdecomp::SimulateRequest req{layout,         resolve_nprocs(opt, cfg),
                                   resolve_transform(opt), opt.unbalanced,
                                   opt.max_imbalance,      opt.size_guard,
                                   verbose};
      if (simulate->parsed()) {
        report = sdecomp::simulate_report(shape, req);
      } else {
        if (req.transform != sdecomp::Transform::xxf2yxf &&
            req.transform != sdecomp::Transform::yxf2xxf) {
          throw UsageError("compare supports --transform xxf2yxf or yxf2xxf");
        }
        report = sdecomp::compare_report(shape, req);
      }
    }

    switch (*format) {
      case sdecomp::OutputFormat::json: std::cout << sdecomp::render_json(report); break;
      case sdecomp::OutputFormat::csv: std::cout << sdecomp::render_csv(report); break;
      case sdecomp::OutputFormat::human: std::cout << sdecomp::render_human(report); break;
    }
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const sdecomp::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const sdecomp::SizeGuardError& e) {
    std::cerr << "size guard: " << e.what() << '\n';
    return kExitSizeGuard;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
