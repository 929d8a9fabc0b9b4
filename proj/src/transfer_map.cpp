#include "sdecomp/transfer_map.hpp"

#include <algorithm>
#include <stdexcept>

namespace sdecomp {

TransferMap::TransferMap(Count nprocs_src, Count nprocs_dst, Count element_bytes,
                         std::vector<Entry> entries)
    : nprocs_src_(nprocs_src), nprocs_dst_(nprocs_dst), element_bytes_(element_bytes) {
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    return a.src != b.src ? a.src < b.src : a.dst < b.dst;
  });
  for (const auto& e : entries) {
    if (e.src < 0 || e.src >= nprocs_src || e.dst < 0 || e.dst >= nprocs_dst) {
      throw std::out_of_range("transfer entry rank outside the plan");
    }
    if (!entries_.empty() && entries_.back().src == e.src && entries_.back().dst == e.dst) {
      entries_.back().elements += e.elements;
    } else {
      entries_.push_back(e);
    }
  }
  std::erase_if(entries_, [](const Entry& e) { return e.elements == 0; });
}

Count TransferMap::count(Count src, Count dst) const {
  const auto it = std::lower_bound(entries_.begin(), entries_.end(), Entry{src, dst, 0},
                                   [](const Entry& a, const Entry& b) {
                                     return a.src != b.src ? a.src < b.src : a.dst < b.dst;
                                   });
  return (it != entries_.end() && it->src == src && it->dst == dst) ? it->elements : 0;
}

Count TransferMap::total_elements() const {
  Count n = 0;
  for (const auto& e : entries_) n += e.elements;
  return n;
}

Count TransferMap::diagonal_elements() const {
  Count n = 0;
  for (const auto& e : entries_) {
    if (e.src == e.dst) n += e.elements;
  }
  return n;
}

Count TransferMap::message_count() const {
  return std::count_if(entries_.begin(), entries_.end(),
                       [](const Entry& e) { return e.src != e.dst; });
}

double TransferMap::diagonal_fraction() const {
  const Count total = total_elements();
  if (total == 0) return 1.0;
  return static_cast<double>(diagonal_elements()) / static_cast<double>(total);
}

std::vector<Count> TransferMap::row_sums() const {
  std::vector<Count> sums(static_cast<std::size_t>(nprocs_src_), 0);
  for (const auto& e : entries_) sums[static_cast<std::size_t>(e.src)] += e.elements;
  return sums;
}

std::vector<Count> TransferMap::col_sums() const {
  std::vector<Count> sums(static_cast<std::size_t>(nprocs_dst_), 0);
  for (const auto& e : entries_) sums[static_cast<std::size_t>(e.dst)] += e.elements;
  return sums;
}

std::vector<Count> TransferMap::sent_per_source() const {
  std::vector<Count> sent(static_cast<std::size_t>(nprocs_src_), 0);
  for (const auto& e : entries_) {
    if (e.src != e.dst) sent[static_cast<std::size_t>(e.src)] += e.elements;
  }
  return sent;
}

Count TransferMap::max_send() const {
  const auto sent = sent_per_source();
  return sent.empty() ? 0 : *std::max_element(sent.begin(), sent.end());
}

TransferMap TransferMap::transposed() const {
  std::vector<Entry> flipped;
  flipped.reserve(entries_.size());
  for (const auto& e : entries_) flipped.push_back({e.dst, e.src, e.elements});
  return TransferMap(nprocs_dst_, nprocs_src_, element_bytes_, std::move(flipped));
}

}  // namespace sdecomp
