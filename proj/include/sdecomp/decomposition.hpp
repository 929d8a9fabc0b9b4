#pragma once

/**
 * @file decomposition.hpp
 * @brief Balanced and unbalanced block decompositions of a compound index space.
 *
 * A balanced plan gives every rank the same blocksize ceil(total / nprocs);
 * when the division is inexact the trailing ranks are short or empty.
 *
 * An unbalanced plan uses two blocksizes. The compound dimensions are walked
 * slowest first, dividing the rank count while the division is exact; the
 * first dimension that does not divide (merged with faster dimensions until it
 * has at least as many entries as ranks remain) is shared out in whole units,
 * where a unit is the product of the untouched faster dimensions.
 */

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "sdecomp/grid.hpp"
#include "sdecomp/rational.hpp"

namespace sdecomp {

inline constexpr double kDefaultMaxImbalance = 0.25;

struct BlockRange {
  FlatIndex low = 0;
  FlatIndex high = 0;  ///< exclusive

  Count extent() const { return high - low; }
  bool empty() const { return high == low; }
  friend bool operator==(const BlockRange&, const BlockRange&) = default;
};

enum class PlanKind { balanced, unbalanced, fallback_balanced };

/// Why an unbalanced request produced uniform blocks.
enum class FallbackReason {
  none,
  even_split,          ///< the split divides exactly; both plans coincide
  imbalance_exceeded,  ///< two-blocksize split is over the threshold
  degenerate,          ///< more ranks than compound cells
};

std::string_view to_string(PlanKind kind);
std::string_view to_string(FallbackReason reason);

/// Outcome of the dimension walk for one (space, nprocs) pair.
struct UnbalancedSplit {
  std::vector<Dim> divided;  ///< dimensions fully split across rank groups, slowest first
  std::vector<Dim> merged;   ///< dimensions shared out in units, slowest first
  Count groups = 1;          ///< product of divided extents
  Count ranks_per_group = 1;
  Count units_per_group = 1;
  Count unit_size = 1;  ///< compound cells per unit
  Count large_units = 1;
  Count small_units = 1;
  Count large_ranks = 0;  ///< ranks per group holding large_units

  Count large_block() const { return large_units * unit_size; }
  Count small_block() const { return small_units * unit_size; }
  /// (large - small) / small
  Rational imbalance() const { return Rational(large_units - small_units, small_units); }
};

/// Empty when nprocs exceeds the number of compound cells.
std::optional<UnbalancedSplit> analyse_unbalanced(SpaceKind space, const GridShape& shape,
                                                  Layout layout, Count nprocs);

class DecompositionPlan {
 public:
  DecompositionPlan(SpaceKind space, const GridShape& shape, Layout layout,
                    std::vector<BlockRange> ranges, PlanKind kind, FallbackReason reason,
                    Count small_block, Count large_block, Rational imbalance);

  SpaceKind space() const { return space_; }
  const GridShape& shape() const { return shape_; }
  Layout layout() const { return layout_; }
  Count nprocs() const { return static_cast<Count>(ranges_.size()); }
  Count total() const { return total_; }
  std::span<const BlockRange> ranges() const { return ranges_; }
  const BlockRange& range(Count rank) const { return ranges_.at(static_cast<std::size_t>(rank)); }

  PlanKind kind() const { return kind_; }
  FallbackReason fallback_reason() const { return reason_; }
  bool degenerate() const { return reason_ == FallbackReason::degenerate; }
  Count small_block() const { return small_block_; }
  Count large_block() const { return large_block_; }
  /// Imbalance of the blocks actually in use; zero for uniform plans.
  Rational imbalance() const { return imbalance_; }

  Count empty_ranks() const;
  /// Rank whose range holds flat; throws std::out_of_range outside [0, total).
  Count owner_of(FlatIndex flat) const;
  /// No range check.
  Count owner_of_unchecked(FlatIndex flat) const;

  friend bool operator==(const DecompositionPlan& a, const DecompositionPlan& b) {
    return a.space_ == b.space_ && a.shape_ == b.shape_ && a.layout_ == b.layout_ &&
           a.ranges_ == b.ranges_;
  }

 private:
  SpaceKind space_;
  GridShape shape_;
  Layout layout_;
  std::vector<BlockRange> ranges_;
  std::vector<FlatIndex> highs_;
  PlanKind kind_;
  FallbackReason reason_;
  Count small_block_;
  Count large_block_;
  Rational imbalance_;
  Count total_;
};

/// ceil(total / nprocs), written the way the production code rounds.
Count balanced_blocksize(Count total, Count nprocs);

DecompositionPlan balanced_plan(SpaceKind space, const GridShape& shape, Layout layout,
                                Count nprocs);

DecompositionPlan unbalanced_plan(SpaceKind space, const GridShape& shape, Layout layout,
                                  Count nprocs, double max_imbalance = kDefaultMaxImbalance);

struct IdleReport {
  Count blocksize = 0;
  Rational used_procs;
  Rational idle_procs;
};

IdleReport idle_report(SpaceKind space, const GridShape& shape, Layout layout, Count nprocs);

struct SweetSpot {
  Count nprocs = 0;
  bool prefix_product = false;  ///< equals a product of the slowest compound extents

  friend bool operator==(const SweetSpot&, const SweetSpot&) = default;
};

struct SpaceSweetSpots {
  SpaceKind space = SpaceKind::g_lo;
  Count total = 0;
  std::vector<SweetSpot> spots;         ///< ascending
  std::vector<Count> prefix_products;  ///< slowest dimension first
};

/// Process counts up to max_procs that divide each space exactly.
std::vector<SpaceSweetSpots> sweetspots(const GridShape& shape, Layout layout, Count max_procs);

}  // namespace sdecomp
