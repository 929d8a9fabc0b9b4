#include "sdecomp/decomposition.hpp"

#include <algorithm>
#include <stdexcept>

namespace sdecomp {

std::string_view to_string(PlanKind kind) {
  switch (kind) {
    case PlanKind::balanced: return "balanced";
    case PlanKind::unbalanced: return "unbalanced";
    case PlanKind::fallback_balanced: return "unbalanced-fallback-to-balanced";
  }
  return "?";
}

std::string_view to_string(FallbackReason reason) {
  switch (reason) {
    case FallbackReason::none: return "none";
    case FallbackReason::even_split: return "even-split";
    case FallbackReason::imbalance_exceeded: return "imbalance-exceeded";
    case FallbackReason::degenerate: return "degenerate";
  }
  return "?";
}

DecompositionPlan::DecompositionPlan(SpaceKind space, const GridShape& shape, Layout layout,
                                     std::vector<BlockRange> ranges, PlanKind kind,
                                     FallbackReason reason, Count small_block, Count large_block,
                                     Rational imbalance)
    : space_(space),
      shape_(shape),
      layout_(layout),
      ranges_(std::move(ranges)),
      kind_(kind),
      reason_(reason),
      small_block_(small_block),
      large_block_(large_block),
      imbalance_(imbalance),
      total_(total_size(space, shape, layout)) {
  highs_.reserve(ranges_.size());
  for (const auto& r : ranges_) highs_.push_back(r.high);
}

Count DecompositionPlan::empty_ranks() const {
  return std::count_if(ranges_.begin(), ranges_.end(), [](const BlockRange& r) { return r.empty(); });
}

Count DecompositionPlan::owner_of_unchecked(FlatIndex flat) const {
  return std::upper_bound(highs_.begin(), highs_.end(), flat) - highs_.begin();
}

Count DecompositionPlan::owner_of(FlatIndex flat) const {
  if (flat < 0 || flat >= total_) {
    throw std::out_of_range("flat index " + std::to_string(flat) + " outside [0, " +
                            std::to_string(total_) + ")");
  }
  return owner_of_unchecked(flat);
}

Count balanced_blocksize(Count total, Count nprocs) {
  if (total < 1 || nprocs < 1) throw std::invalid_argument("total and nprocs must be >= 1");
  return (total - 1) / nprocs + 1;
}

namespace {

void check_nprocs(Count nprocs) {
  if (nprocs < 1) throw std::invalid_argument("nprocs must be >= 1");
}

DecompositionPlan make_balanced(SpaceKind space, const GridShape& shape, Layout layout,
                                Count nprocs, PlanKind kind, FallbackReason reason) {
  check_nprocs(nprocs);
  const Count total = total_size(space, shape, layout);
  const Count b = balanced_blocksize(total, nprocs);
  std::vector<BlockRange> ranges(static_cast<std::size_t>(nprocs));
  for (Count r = 0; r < nprocs; ++r) {
    ranges[static_cast<std::size_t>(r)] = {std::min(r * b, total), std::min((r + 1) * b, total)};
  }
  return DecompositionPlan(space, shape, layout, std::move(ranges), kind, reason, b, b,
                           Rational(0));
}

}  // namespace

DecompositionPlan balanced_plan(SpaceKind space, const GridShape& shape, Layout layout,
                                Count nprocs) {
  return make_balanced(space, shape, layout, nprocs, PlanKind::balanced, FallbackReason::none);
}

std::optional<UnbalancedSplit> analyse_unbalanced(SpaceKind space, const GridShape& shape,
                                                  Layout layout, Count nprocs) {
  check_nprocs(nprocs);
  auto dims = compound_dims(space, shape, layout);
  std::reverse(dims.begin(), dims.end());

  Count total = 1;
  for (const auto& d : dims) total *= d.extent;
  if (nprocs > total) return std::nullopt;

  UnbalancedSplit split;
  const std::size_t n = dims.size();
  std::size_t i = 0;
  Count remaining = nprocs;
  while (i < n && remaining % dims[i].extent == 0) {
    remaining /= dims[i].extent;
    split.divided.push_back(dims[i].dim);
    ++i;
  }
  split.groups = nprocs / remaining;
  split.ranks_per_group = remaining;

  if (i == n) {
    // every dimension divided; nprocs <= total forces one cell per rank
    split.units_per_group = 1;
    split.unit_size = 1;
    split.large_units = split.small_units = 1;
    split.large_ranks = 0;
    return split;
  }

  Count units = dims[i].extent;
  split.merged.push_back(dims[i].dim);
  ++i;
  while (units < remaining) {
    // cannot run off the end: groups * units_total == total >= nprocs
    units *= dims[i].extent;
    split.merged.push_back(dims[i].dim);
    ++i;
  }
  Count unit = 1;
  for (; i < n; ++i) unit *= dims[i].extent;

  split.units_per_group = units;
  split.unit_size = unit;
  split.small_units = units / remaining;
  split.large_ranks = units % remaining;
  split.large_units = split.small_units + (split.large_ranks > 0 ? 1 : 0);
  return split;
}

DecompositionPlan unbalanced_plan(SpaceKind space, const GridShape& shape, Layout layout,
                                  Count nprocs, double max_imbalance) {
  check_nprocs(nprocs);
  if (!(max_imbalance >= 0.0)) throw std::invalid_argument("max_imbalance must be >= 0");

  const auto split = analyse_unbalanced(space, shape, layout, nprocs);
  if (!split) {
    return make_balanced(space, shape, layout, nprocs, PlanKind::fallback_balanced,
                         FallbackReason::degenerate);
  }
  if (split->large_ranks == 0) {
    return make_balanced(space, shape, layout, nprocs, PlanKind::fallback_balanced,
                         FallbackReason::even_split);
  }
  const Rational imbalance = split->imbalance();
  // (large - small) / small > max  <=>  (large - small) > max * small
  if (static_cast<double>(split->large_units - split->small_units) >
      max_imbalance * static_cast<double>(split->small_units)) {
    return make_balanced(space, shape, layout, nprocs, PlanKind::fallback_balanced,
                         FallbackReason::imbalance_exceeded);
  }

  std::vector<BlockRange> ranges;
  ranges.reserve(static_cast<std::size_t>(nprocs));
  const Count group_cells = split->units_per_group * split->unit_size;
  for (Count g = 0; g < split->groups; ++g) {
    FlatIndex low = g * group_cells;
    for (Count j = 0; j < split->ranks_per_group; ++j) {
      const Count units = j < split->large_ranks ? split->large_units : split->small_units;
      const FlatIndex high = low + units * split->unit_size;
      ranges.push_back({low, high});
      low = high;
    }
  }
  return DecompositionPlan(space, shape, layout, std::move(ranges), PlanKind::unbalanced,
                           FallbackReason::none, split->small_block(), split->large_block(),
                           imbalance);
}

IdleReport idle_report(SpaceKind space, const GridShape& shape, Layout layout, Count nprocs) {
  check_nprocs(nprocs);
  const Count total = total_size(space, shape, layout);
  IdleReport report;
  report.blocksize = balanced_blocksize(total, nprocs);
  report.used_procs = Rational(total, report.blocksize);
  report.idle_procs = Rational(nprocs) - report.used_procs;
  return report;
}

std::vector<SpaceSweetSpots> sweetspots(const GridShape& shape, Layout layout, Count max_procs) {
  if (max_procs < 1) throw std::invalid_argument("max_procs must be >= 1");
  std::vector<SpaceSweetSpots> out;
  for (SpaceKind space : kAllSpaces) {
    SpaceSweetSpots entry;
    entry.space = space;
    auto dims = compound_dims(space, shape, layout);
    Count total = 1;
    for (auto it = dims.rbegin(); it != dims.rend(); ++it) {
      total *= it->extent;
      entry.prefix_products.push_back(total);
    }
    entry.total = total;

    std::vector<Count> divisors;
    for (Count d = 1; d * d <= total; ++d) {
      if (total % d != 0) continue;
      if (d <= max_procs) divisors.push_back(d);
      const Count other = total / d;
      if (other != d && other <= max_procs) divisors.push_back(other);
    }
    std::sort(divisors.begin(), divisors.end());
    for (Count p : divisors) {
      const bool flagged = std::find(entry.prefix_products.begin(), entry.prefix_products.end(),
                                     p) != entry.prefix_products.end();
      entry.spots.push_back({p, flagged});
    }
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace sdecomp
