#pragma once

/**
 * @file grid.hpp
 * @brief Domain extents, data layouts and compound index spaces.
 *
 * The distribution function lives in a seven dimensional index space
 * (x, y, ig, isgn, l, e, s). Three index spaces distribute it across ranks:
 *
 *  - g_lo:   compound (x, y, l, e, s) in layout order, ig and isgn local.
 *  - xxf_lo: compound (y, ig, isgn, l, e, s), x local over the full inx.
 *  - yxf_lo: compound (x over inx, ig, isgn, l, e, s), y local over iny.
 *
 * Compound dimensions are listed fastest to slowest; the fastest has stride 1
 * and ranks receive contiguous ranges of the flattened index, so the slowest
 * dimension is split first.
 */

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sdecomp {

using Count = std::int64_t;
using FlatIndex = std::int64_t;

enum class Dim : int { x = 0, y, ig, isgn, l, e, s };
inline constexpr int kNumDims = 7;
inline constexpr std::array<Dim, kNumDims> kAllDims = {Dim::x,    Dim::y, Dim::ig, Dim::isgn,
                                                       Dim::l,    Dim::e, Dim::s};

std::string_view to_string(Dim dim);

/// Extents of the simulation domain.
struct GridShape {
  Count nakx = 1;  ///< dealiased Fourier modes in x
  Count naky = 1;  ///< dealiased Fourier modes in y
  Count inx = 1;   ///< full x extent
  Count iny = 1;   ///< full y extent
  Count nig = 1;   ///< parallel coordinate; always odd
  Count nsign = 2;
  Count nlambda = 1;
  Count negrid = 1;
  Count nspec = 1;
  Count element_bytes = 16;

  /// Full extents derived as ceil(3n/2) from the dealiased ones.
  static GridShape with_dealiasing(Count nakx, Count naky, Count nig, Count nlambda, Count negrid,
                                   Count nspec, Count element_bytes = 16);

  friend bool operator==(const GridShape&, const GridShape&) = default;
};

/// Empty when the shape is valid, otherwise a description of the first violation.
std::optional<std::string> validation_error(const GridShape& shape);

/// Throws std::invalid_argument when the shape is invalid.
void validate(const GridShape& shape);

Count dealiased_full_extent(Count dealiased);

enum class Layout { xyles, yxles, lyxes, yxels, lxyes, lexys };
inline constexpr std::array<Layout, 6> kAllLayouts = {Layout::xyles, Layout::yxles, Layout::lyxes,
                                                      Layout::yxels, Layout::lxyes, Layout::lexys};

std::string_view to_string(Layout layout);
std::optional<Layout> parse_layout(std::string_view token);
/// "xyles, yxles, ..." for error messages.
std::string admissible_layouts();
/// Layout tokens as dimensions, fastest first.
std::array<Dim, 5> layout_dims(Layout layout);

enum class SpaceKind { g_lo, xxf_lo, yxf_lo };
inline constexpr std::array<SpaceKind, 3> kAllSpaces = {SpaceKind::g_lo, SpaceKind::xxf_lo,
                                                        SpaceKind::yxf_lo};

std::string_view to_string(SpaceKind space);
std::optional<SpaceKind> parse_space(std::string_view token);

/// Zero-based position in the seven dimensional domain.
struct GlobalCoordinate {
  std::array<Count, kNumDims> v{};

  Count& operator[](Dim d) { return v[static_cast<int>(d)]; }
  Count operator[](Dim d) const { return v[static_cast<int>(d)]; }

  static GlobalCoordinate of(Count x, Count y, Count ig, Count isgn, Count l, Count e, Count s) {
    return GlobalCoordinate{{x, y, ig, isgn, l, e, s}};
  }

  friend bool operator==(const GlobalCoordinate&, const GlobalCoordinate&) = default;
};

struct CompoundDim {
  Dim dim;
  Count extent;
};

/// Compound dimensions of a space, fastest first.
std::vector<CompoundDim> compound_dims(SpaceKind space, const GridShape& shape, Layout layout);

/// Dimensions kept whole on each rank, with their extents.
std::vector<CompoundDim> local_dims(SpaceKind space, const GridShape& shape);

/// Number of stored elements per compound cell.
Count local_extent(SpaceKind space, const GridShape& shape);

/**
 * Precomputed flattening for one (space, shape, layout) triple.
 *
 * Components of a GlobalCoordinate that are not compound dimensions of the
 * space are ignored by flatten() and set to zero by unflatten().
 */
class IndexSpace {
 public:
  IndexSpace(SpaceKind space, const GridShape& shape, Layout layout);

  SpaceKind space() const { return space_; }
  Layout layout() const { return layout_; }
  Count total() const { return total_; }
  const std::vector<CompoundDim>& dims() const { return dims_; }

  bool has_dim(Dim d) const { return stride_[static_cast<int>(d)] != 0; }
  /// 0 when d is not a compound dimension.
  Count stride(Dim d) const { return stride_[static_cast<int>(d)]; }
  /// 1 when d is not a compound dimension.
  Count extent(Dim d) const { return extent_[static_cast<int>(d)]; }

  /// Throws std::out_of_range for components outside the compound extents.
  FlatIndex flatten(const GlobalCoordinate& c) const;
  /// No range checks; the caller guarantees validity.
  FlatIndex flatten_unchecked(const GlobalCoordinate& c) const {
    FlatIndex f = 0;
    for (const auto& d : dims_) f += c[d.dim] * stride_[static_cast<int>(d.dim)];
    return f;
  }
  GlobalCoordinate unflatten(FlatIndex flat) const;

 private:
  SpaceKind space_;
  Layout layout_;
  std::vector<CompoundDim> dims_;
  std::array<Count, kNumDims> stride_{};
  std::array<Count, kNumDims> extent_{};
  Count total_ = 1;
};

Count total_size(SpaceKind space, const GridShape& shape, Layout layout);
FlatIndex compound_index(SpaceKind space, const GridShape& shape, Layout layout,
                         const GlobalCoordinate& coord);
GlobalCoordinate coordinate_of(SpaceKind space, const GridShape& shape, Layout layout,
                               FlatIndex flat);

}  // namespace sdecomp
