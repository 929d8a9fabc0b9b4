#pragma once

// Brute-force transfer map kernels. Both walk the cells of the shared domain
// that the two plans index in common; for each such cell the source owners of
// the remaining source-only cells and the destination owners of the
// destination-only cells are tallied and multiplied out. The OpenMP kernel
// splits the common cells into disjoint chunks with one accumulator per
// thread; the serial kernel is the reference it is tested against.

#include "sdecomp/decomposition.hpp"
#include "sdecomp/shared_domain.hpp"
#include "sdecomp/transfer_map.hpp"

namespace sdecomp::kernels {

TransferMap transfer_map_serial(const DecompositionPlan& src, const DecompositionPlan& dst,
                                const SharedDomain& domain);

/// threads <= 0 uses the OpenMP default. Falls back to serial without OpenMP.
TransferMap transfer_map_parallel(const DecompositionPlan& src, const DecompositionPlan& dst,
                                  const SharedDomain& domain, int threads = 0);

bool parallel_available();

}  // namespace sdecomp::kernels
