#pragma once

/**
 * @file redistribution.hpp
 * @brief Exact and estimated data movement between decompositions.
 *
 * exact_transfer_map() resolves the owner of every shared element in both
 * plans. analytic_estimate() predicts the xxf_lo <-> yxf_lo volume from the
 * idle process counts of the two balanced decompositions:
 *
 *     delta  = |yxf_idle - xxf_idle|
 *     T      = inx * xxf_total
 *     volume = delta * T / 2              if delta <= 1
 *            = (1 - 1 / (2 delta)) * T    otherwise
 */

#include <optional>
#include <stdexcept>

#include "sdecomp/decomposition.hpp"
#include "sdecomp/rational.hpp"
#include "sdecomp/shared_domain.hpp"
#include "sdecomp/transfer_map.hpp"

namespace sdecomp {

inline constexpr Count kDefaultSizeGuard = 100'000'000;

/// The exhaustive oracle would exceed its cell budget.
class SizeGuardError : public std::runtime_error {
 public:
  SizeGuardError(Count cells, Count guard)
      : std::runtime_error("exhaustive oracle needs " + std::to_string(cells) +
                           " compound cells, above the guard of " + std::to_string(guard) +
                           " (raise it with --size-guard)"),
        cells_(cells),
        guard_(guard) {}

  Count cells() const { return cells_; }
  Count guard() const { return guard_; }

 private:
  Count cells_;
  Count guard_;
};

/// Source-space compound cells inside the shared domain; the unit the size guard counts.
Count oracle_cells(Transform t, const GridShape& shape, Layout layout);

/// Throws SizeGuardError when oracle_cells exceeds guard.
void check_size_guard(Transform t, const GridShape& shape, Layout layout, Count guard);

/**
 * Exact per-(source, destination) element counts for a transform between two
 * plans. The plans must share shape and layout and their spaces must be the
 * transform's endpoints, otherwise std::invalid_argument is thrown.
 */
TransferMap exact_transfer_map(const DecompositionPlan& src, const DecompositionPlan& dst,
                               Transform t);

/// Shared elements owned by each rank of a plan (row or column sums of any map touching it).
std::vector<Count> shared_ownership(const DecompositionPlan& plan, Transform t);

// Both branches of the transfer volume estimate; they agree at delta == 1.
Rational transfer_volume_linear(const Rational& delta, Count redist_data);
Rational transfer_volume_saturating(const Rational& delta, Count redist_data);
Rational transfer_volume(const Rational& delta, Count redist_data);

struct TransferEstimate {
  Rational xxf_idle;
  Rational yxf_idle;
  Rational delta_idle_proc;
  Count total_redist_data = 0;
  Rational total_trans_data;

  /// total_trans_data / total_redist_data
  double transferred_fraction() const;
};

TransferEstimate analytic_estimate(const GridShape& shape, Layout layout, Count nprocs);

struct EstimateComparison {
  TransferEstimate estimate;
  Count oracle_off_diagonal = 0;
  Count shared_elements = 0;
  /// (estimate - oracle) / oracle; empty when the oracle moves nothing
  std::optional<double> relative_error;
};

/// Balanced plans on both sides, xxf2yxf or yxf2xxf only.
EstimateComparison compare_estimate(const GridShape& shape, Layout layout, Count nprocs,
                                    Count size_guard = kDefaultSizeGuard,
                                    Transform t = Transform::xxf2yxf);

}  // namespace sdecomp
