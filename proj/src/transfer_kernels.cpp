#include "sdecomp/transfer_kernels.hpp"

#include <stdexcept>
#include <unordered_map>
#include <utility>

#ifdef SDECOMP_HAVE_OPENMP
#include <omp.h>
#endif

namespace sdecomp::kernels {

namespace {

using Accumulator = std::unordered_map<std::uint64_t, Count>;

/// Precomputed walk over the shared domain for one pair of plans.
class OracleWalk {
 public:
  OracleWalk(const DecompositionPlan& src, const DecompositionPlan& dst,
             const SharedDomain& domain)
      : src_(src),
        dst_(dst),
        src_index_(src.space(), src.shape(), src.layout()),
        dst_index_(dst.space(), dst.shape(), dst.layout()) {
    for (Dim d : kAllDims) {
      const Count extent = domain.extent(d);
      const bool in_src = src_index_.has_dim(d);
      const bool in_dst = dst_index_.has_dim(d);
      if (!in_src && !in_dst) {
        // local on both sides: ownership never depends on it
        both_local_ *= extent;
        continue;
      }
      if ((in_src && extent > src_index_.extent(d)) || (in_dst && extent > dst_index_.extent(d))) {
        throw std::invalid_argument("shared domain exceeds the extent of " +
                                    std::string(to_string(d)));
      }
      if (in_src && in_dst) {
        common_.push_back({d, extent});
      } else if (in_src) {
        src_only_.push_back({d, extent});
      } else {
        dst_only_.push_back({d, extent});
      }
    }
    for (const auto& c : common_) common_cells_ *= c.extent;
    src_offsets_ = offsets(src_only_, src_index_);
    dst_offsets_ = offsets(dst_only_, dst_index_);
  }

  Count common_cells() const { return common_cells_; }

  /// Adds the contribution of common cells [first, last) to acc.
  void accumulate(Count first, Count last, Accumulator& acc) const {
    std::vector<std::pair<Count, Count>> src_runs;
    std::vector<std::pair<Count, Count>> dst_runs;
    const auto ndst = static_cast<std::uint64_t>(dst_.nprocs());
    for (Count cell = first; cell < last; ++cell) {
      FlatIndex src_base = 0;
      FlatIndex dst_base = 0;
      Count rest = cell;
      for (const auto& c : common_) {
        const Count v = rest % c.extent;
        rest /= c.extent;
        src_base += v * src_index_.stride(c.dim);
        dst_base += v * dst_index_.stride(c.dim);
      }
      owner_runs(src_, src_base, src_offsets_, src_runs);
      owner_runs(dst_, dst_base, dst_offsets_, dst_runs);
      for (const auto& [s, ns] : src_runs) {
        for (const auto& [d, nd] : dst_runs) {
          acc[static_cast<std::uint64_t>(s) * ndst + static_cast<std::uint64_t>(d)] +=
              ns * nd * both_local_;
        }
      }
    }
  }

  TransferMap finish(const Accumulator& acc) const {
    const auto ndst = static_cast<std::uint64_t>(dst_.nprocs());
    std::vector<TransferMap::Entry> entries;
    entries.reserve(acc.size());
    for (const auto& [key, n] : acc) {
      entries.push_back({static_cast<Count>(key / ndst), static_cast<Count>(key % ndst), n});
    }
    return TransferMap(src_.nprocs(), dst_.nprocs(), src_.shape().element_bytes,
                       std::move(entries));
  }

 private:
  static std::vector<FlatIndex> offsets(const std::vector<CompoundDim>& dims,
                                        const IndexSpace& index) {
    std::vector<FlatIndex> out{0};
    for (const auto& d : dims) {
      std::vector<FlatIndex> next;
      next.reserve(out.size() * static_cast<std::size_t>(d.extent));
      for (Count v = 0; v < d.extent; ++v) {
        for (FlatIndex o : out) next.push_back(o + v * index.stride(d.dim));
      }
      out = std::move(next);
    }
    return out;
  }

  static void owner_runs(const DecompositionPlan& plan, FlatIndex base,
                         const std::vector<FlatIndex>& offs,
                         std::vector<std::pair<Count, Count>>& runs) {
    runs.clear();
    for (FlatIndex o : offs) {
      const Count owner = plan.owner_of_unchecked(base + o);
      if (!runs.empty() && runs.back().first == owner) {
        ++runs.back().second;
      } else {
        runs.emplace_back(owner, 1);
      }
    }
  }

  const DecompositionPlan& src_;
  const DecompositionPlan& dst_;
  IndexSpace src_index_;
  IndexSpace dst_index_;
  std::vector<CompoundDim> common_;
  std::vector<CompoundDim> src_only_;
  std::vector<CompoundDim> dst_only_;
  std::vector<FlatIndex> src_offsets_;
  std::vector<FlatIndex> dst_offsets_;
  Count common_cells_ = 1;
  Count both_local_ = 1;
};

void check_compatible(const DecompositionPlan& src, const DecompositionPlan& dst) {
  if (!(src.shape() == dst.shape())) {
    throw std::invalid_argument("plans were built over different grid shapes");
  }
  if (src.layout() != dst.layout()) {
    throw std::invalid_argument("plans were built with different layouts");
  }
}

}  // namespace

TransferMap transfer_map_serial(const DecompositionPlan& src, const DecompositionPlan& dst,
                                const SharedDomain& domain) {
  check_compatible(src, dst);
  const OracleWalk walk(src, dst, domain);
  Accumulator acc;
  walk.accumulate(0, walk.common_cells(), acc);
  return walk.finish(acc);
}

TransferMap transfer_map_parallel(const DecompositionPlan& src, const DecompositionPlan& dst,
                                  const SharedDomain& domain, int threads) {
#ifdef SDECOMP_HAVE_OPENMP
  check_compatible(src, dst);
  const OracleWalk walk(src, dst, domain);
  const Count cells = walk.common_cells();
  const int nthreads = threads > 0 ? threads : omp_get_max_threads();
  std::vector<Accumulator> partial(static_cast<std::size_t>(nthreads));

#pragma omp parallel num_threads(nthreads)
  {
    const int tid = omp_get_thread_num();
    const int nt = omp_get_num_threads();
    const Count first = cells * tid / nt;
    const Count last = cells * (tid + 1) / nt;
    walk.accumulate(first, last, partial[static_cast<std::size_t>(tid)]);
  }

  Accumulator total = std::move(partial.front());
  for (std::size_t t = 1; t < partial.size(); ++t) {
    for (const auto& [key, n] : partial[t]) total[key] += n;
  }
  return walk.finish(total);
#else
  (void)threads;
  return transfer_map_serial(src, dst, domain);
#endif
}

bool parallel_available() {
#ifdef SDECOMP_HAVE_OPENMP
  return true;
#else
  return false;
#endif
}

}  // namespace sdecomp::kernels
