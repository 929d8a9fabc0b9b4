#pragma once

#include <cstdint>
#include <vector>

#include "sdecomp/grid.hpp"

namespace sdecomp {

/// Element counts moved from each source rank to each destination rank.
class TransferMap {
 public:
  struct Entry {
    Count src = 0;
    Count dst = 0;
    Count elements = 0;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  TransferMap() = default;
  /// Entries may arrive in any order and repeat; they are summed and sorted.
  TransferMap(Count nprocs_src, Count nprocs_dst, Count element_bytes, std::vector<Entry> entries);

  Count nprocs_src() const { return nprocs_src_; }
  Count nprocs_dst() const { return nprocs_dst_; }
  Count element_bytes() const { return element_bytes_; }
  /// Nonzero entries ordered by (src, dst).
  const std::vector<Entry>& entries() const { return entries_; }

  Count count(Count src, Count dst) const;
  Count total_elements() const;
  Count diagonal_elements() const;
  Count off_diagonal_elements() const { return total_elements() - diagonal_elements(); }
  /// Nonzero off-diagonal (src, dst) pairs.
  Count message_count() const;
  Count bytes() const { return off_diagonal_elements() * element_bytes_; }
  /// 1.0 for an empty map.
  double diagonal_fraction() const;

  std::vector<Count> row_sums() const;
  std::vector<Count> col_sums() const;
  /// Off-diagonal elements sent by each source rank.
  std::vector<Count> sent_per_source() const;
  Count max_send() const;

  TransferMap transposed() const;

  friend bool operator==(const TransferMap&, const TransferMap&) = default;

 private:
  Count nprocs_src_ = 0;
  Count nprocs_dst_ = 0;
  Count element_bytes_ = 1;
  std::vector<Entry> entries_;
};

}  // namespace sdecomp
