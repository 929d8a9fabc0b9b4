#include "sdecomp/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace sdecomp {

std::optional<OutputFormat> parse_format(std::string_view token) {
  if (token == "human") return OutputFormat::human;
  if (token == "json") return OutputFormat::json;
  if (token == "csv") return OutputFormat::csv;
  return std::nullopt;
}

double fixed6(double value) {
  const double r = std::round(value * 1e6) / 1e6;
  return r == 0.0 ? 0.0 : r;  // no negative zero
}

std::string format_fixed6(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", fixed6(value));
  return buf;
}

namespace {

Report shape_json(const GridShape& g) {
  Report j;
  j["nakx"] = g.nakx;
  j["naky"] = g.naky;
  j["inx"] = g.inx;
  j["iny"] = g.iny;
  j["nig"] = g.nig;
  j["nsign"] = g.nsign;
  j["nlambda"] = g.nlambda;
  j["negrid"] = g.negrid;
  j["nspec"] = g.nspec;
  j["element_bytes"] = g.element_bytes;
  return j;
}

Report header(std::string_view command, const GridShape& shape, Layout layout) {
  Report j;
  j["command"] = command;
  j["layout"] = to_string(layout);
  j["shape"] = shape_json(shape);
  return j;
}

Report rational_json(const Rational& r) {
  Report j;
  j["value"] = fixed6(r.to_double());
  j["exact"] = r.str();
  return j;
}

Report idle_json(const IdleReport& idle) {
  Report j;
  j["blocksize"] = idle.blocksize;
  j["used_procs"] = rational_json(idle.used_procs);
  j["idle_procs"] = rational_json(idle.idle_procs);
  return j;
}

Report spaces_json(const GridShape& shape, Layout layout, Count nprocs) {
  Report j;
  for (SpaceKind space : kAllSpaces) {
    Report s;
    s["total_size"] = total_size(space, shape, layout);
    s["idle"] = idle_json(idle_report(space, shape, layout, nprocs));
    j[std::string(to_string(space))] = std::move(s);
  }
  return j;
}

Report dims_json(const std::vector<Dim>& dims) {
  Report arr = Report::array();
  for (Dim d : dims) arr.push_back(to_string(d));
  return arr;
}

Report plan_summary(const DecompositionPlan& plan, bool include_split, double max_imbalance) {
  Report j;
  j["space"] = to_string(plan.space());
  j["kind"] = to_string(plan.kind());
  j["fallback_reason"] = to_string(plan.fallback_reason());
  j["degenerate"] = plan.degenerate();
  j["nprocs"] = plan.nprocs();
  j["total_size"] = plan.total();
  j["small_block"] = plan.small_block();
  j["large_block"] = plan.large_block();
  j["imbalance"] = rational_json(plan.imbalance());
  j["empty_ranks"] = plan.empty_ranks();
  if (include_split) {
    j["max_imbalance"] = fixed6(max_imbalance);
    const auto split =
        analyse_unbalanced(plan.space(), plan.shape(), plan.layout(), plan.nprocs());
    if (split) {
      Report s;
      s["divided"] = dims_json(split->divided);
      s["merged"] = dims_json(split->merged);
      s["groups"] = split->groups;
      s["ranks_per_group"] = split->ranks_per_group;
      s["units_per_group"] = split->units_per_group;
      s["unit_size"] = split->unit_size;
      s["large_block"] = split->large_block();
      s["small_block"] = split->small_block();
      s["large_ranks_per_group"] = split->large_ranks;
      s["imbalance"] = rational_json(split->imbalance());
      j["split"] = std::move(s);
    } else {
      j["split"] = nullptr;
    }
  }
  return j;
}

DecompositionPlan make_plan(SpaceKind space, const GridShape& shape, Layout layout, Count nprocs,
                            bool unbalanced, double max_imbalance) {
  // g_lo keeps its uniform decomposition; only the FFT layouts are rebalanced
  if (unbalanced && space != SpaceKind::g_lo) {
    return unbalanced_plan(space, shape, layout, nprocs, max_imbalance);
  }
  return balanced_plan(space, shape, layout, nprocs);
}

Report transfer_json(const TransferMap& map) {
  Report j;
  j["shared_elements"] = map.total_elements();
  j["off_diagonal_elements"] = map.off_diagonal_elements();
  j["bytes"] = map.bytes();
  j["message_count"] = map.message_count();
  j["max_send_elements"] = map.max_send();
  j["max_send_bytes"] = map.max_send() * map.element_bytes();
  j["diagonal_fraction"] = fixed6(map.diagonal_fraction());
  return j;
}

Report matrix_json(const TransferMap& map) {
  Report rows = Report::array();
  for (const auto& e : map.entries()) {
    rows.push_back(Report::array({e.src, e.dst, e.elements, e.elements * map.element_bytes()}));
  }
  return rows;
}

Report estimate_json(const TransferEstimate& est) {
  Report j;
  j["xxf_idle"] = rational_json(est.xxf_idle);
  j["yxf_idle"] = rational_json(est.yxf_idle);
  j["delta_idle_proc"] = rational_json(est.delta_idle_proc);
  j["total_redist_data"] = est.total_redist_data;
  j["total_trans_data"] = rational_json(est.total_trans_data);
  j["transferred_fraction"] = fixed6(est.transferred_fraction());
  return j;
}

}  // namespace

Report plan_report(const GridShape& shape, const PlanRequest& req) {
  Report j = header("plan", shape, req.layout);
  j["nprocs"] = req.nprocs;
  j["space"] = to_string(req.space);
  j["mode"] = req.unbalanced ? "unbalanced" : "balanced";
  j["spaces"] = spaces_json(shape, req.layout, req.nprocs);
  const auto plan =
      make_plan(req.space, shape, req.layout, req.nprocs, req.unbalanced, req.max_imbalance);
  j["plan"] = plan_summary(plan, req.unbalanced, req.max_imbalance);
  if (req.verbose) {
    Report ranges = Report::array();
    for (const auto& r : plan.ranges()) ranges.push_back(Report::array({r.low, r.high}));
    j["ranges"] = std::move(ranges);
  }
  return j;
}

Report sweetspots_report(const GridShape& shape, Layout layout, Count max_procs) {
  Report j = header("sweetspots", shape, layout);
  j["max_procs"] = max_procs;
  Report lists;
  for (const auto& entry : sweetspots(shape, layout, max_procs)) {
    Report s;
    s["total_size"] = entry.total;
    Report counts = Report::array();
    Report flagged = Report::array();
    for (const auto& spot : entry.spots) {
      counts.push_back(spot.nprocs);
      if (spot.prefix_product) flagged.push_back(spot.nprocs);
    }
    s["counts"] = std::move(counts);
    s["prefix_product_counts"] = std::move(flagged);
    s["prefix_products"] = entry.prefix_products;
    lists[std::string(to_string(entry.space))] = std::move(s);
  }
  j["spaces"] = std::move(lists);
  return j;
}

Report estimate_report(const GridShape& shape, Layout layout, Count nprocs) {
  Report j = header("estimate", shape, layout);
  j["nprocs"] = nprocs;
  j["estimate"] = estimate_json(analytic_estimate(shape, layout, nprocs));
  return j;
}

Report simulate_report(const GridShape& shape, const SimulateRequest& req) {
  check_size_guard(req.transform, shape, req.layout, req.size_guard);
  Report j = header("simulate", shape, req.layout);
  j["nprocs"] = req.nprocs;
  j["transform"] = to_string(req.transform);
  j["mode"] = req.unbalanced ? "unbalanced" : "balanced";
  j["oracle_cells"] = oracle_cells(req.transform, shape, req.layout);

  const auto src = make_plan(source_space(req.transform), shape, req.layout, req.nprocs,
                             req.unbalanced, req.max_imbalance);
  const auto dst = make_plan(dest_space(req.transform), shape, req.layout, req.nprocs,
                             req.unbalanced, req.max_imbalance);
  Report plans;
  plans["source"] = plan_summary(src, false, req.max_imbalance);
  plans["destination"] = plan_summary(dst, false, req.max_imbalance);
  j["plans"] = std::move(plans);

  const TransferMap map = exact_transfer_map(src, dst, req.transform);
  j["transfer"] = transfer_json(map);
  if (req.verbose) j["matrix"] = matrix_json(map);
  return j;
}

Report compare_report(const GridShape& shape, const SimulateRequest& req) {
  const auto cmp = compare_estimate(shape, req.layout, req.nprocs, req.size_guard, req.transform);
  Report j = header("compare", shape, req.layout);
  j["nprocs"] = req.nprocs;
  j["transform"] = to_string(req.transform);
  j["estimate"] = estimate_json(cmp.estimate);
  Report oracle;
  oracle["shared_elements"] = cmp.shared_elements;
  oracle["off_diagonal_elements"] = cmp.oracle_off_diagonal;
  oracle["off_diagonal_fraction"] =
      cmp.shared_elements > 0
          ? fixed6(static_cast<double>(cmp.oracle_off_diagonal) /
                   static_cast<double>(cmp.shared_elements))
          : 0.0;
  j["oracle"] = std::move(oracle);
  if (cmp.relative_error) j["relative_error"] = fixed6(*cmp.relative_error);
  else j["relative_error"] = nullptr;
  return j;
}

std::string render_json(const Report& report) { return report.dump(2) + "\n"; }

namespace {

std::string scalar_text(const Report& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) return format_fixed6(v.get<double>());
  if (v.is_null()) return "-";
  return v.dump();
}

bool all_scalars(const Report& arr) {
  for (const auto& v : arr) {
    if (v.is_structured()) return false;
  }
  return true;
}

void human(std::ostringstream& out, const Report& node, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& [key, value] : node.items()) {
    if (value.is_object()) {
      out << pad << key << ":\n";
      human(out, value, indent + 2);
    } else if (value.is_array() && all_scalars(value)) {
      out << pad << key << ":";
      for (const auto& v : value) out << ' ' << scalar_text(v);
      out << '\n';
    } else if (value.is_array()) {
      out << pad << key << ":\n";
      for (const auto& row : value) {
        out << pad << "  ";
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << scalar_text(row[i]);
        out << '\n';
      }
    } else {
      out << pad << key << ": " << scalar_text(value) << '\n';
    }
  }
}

void flatten_fields(std::ostringstream& out, const Report& node, const std::string& prefix) {
  for (const auto& [key, value] : node.items()) {
    const std::string name = prefix.empty() ? key : prefix + "." + key;
    if (value.is_object()) {
      flatten_fields(out, value, name);
    } else if (value.is_array()) {
      out << name << ",\"";
      for (std::size_t i = 0; i < value.size(); ++i) out << (i ? " " : "") << scalar_text(value[i]);
      out << "\"\n";
    } else {
      out << name << ',' << scalar_text(value) << '\n';
    }
  }
}

}  // namespace

std::string render_human(const Report& report) {
  std::ostringstream out;
  human(out, report, 0);
  return out.str();
}

std::string render_csv(const Report& report) {
  std::ostringstream out;
  const std::string command = report.value("command", "");
  if (command == "plan" && report.contains("ranges")) {
    out << "rank,low,high,extent\n";
    Count rank = 0;
    for (const auto& r : report["ranges"]) {
      const auto low = r[0].get<Count>();
      const auto high = r[1].get<Count>();
      out << rank++ << ',' << low << ',' << high << ',' << high - low << '\n';
    }
  } else if (command == "sweetspots") {
    out << "space,nprocs,prefix_product\n";
    for (const auto& [space, entry] : report["spaces"].items()) {
      const auto& flagged = entry["prefix_product_counts"];
      for (const auto& p : entry["counts"]) {
        const bool f = std::find(flagged.begin(), flagged.end(), p) != flagged.end();
        out << space << ',' << p.get<Count>() << ',' << (f ? 1 : 0) << '\n';
      }
    }
  } else if (command == "simulate" && report.contains("matrix")) {
    out << "src_rank,dst_rank,elements,bytes\n";
    for (const auto& row : report["matrix"]) {
      out << row[0].get<Count>() << ',' << row[1].get<Count>() << ',' << row[2].get<Count>()
          << ',' << row[3].get<Count>() << '\n';
    }
  } else {
    out << "field,value\n";
    flatten_fields(out, report, "");
  }
  return out.str();
}

}  // namespace sdecomp
