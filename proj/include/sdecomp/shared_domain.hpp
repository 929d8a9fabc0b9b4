#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "sdecomp/grid.hpp"

namespace sdecomp {

/// Redistribution between two index spaces along the FFT chain.
enum class Transform { g2xxf, xxf2yxf, yxf2xxf, xxf2g };
inline constexpr std::array<Transform, 4> kAllTransforms = {Transform::g2xxf, Transform::xxf2yxf,
                                                            Transform::yxf2xxf, Transform::xxf2g};

std::string_view to_string(Transform t);
std::optional<Transform> parse_transform(std::string_view token);
SpaceKind source_space(Transform t);
SpaceKind dest_space(Transform t);
Transform inverse(Transform t);

/**
 * Elements present in both spaces of a transform, as a box in the seven
 * dimensional domain. Dealiasing padding exists on one side only and is never
 * part of the box: g2xxf keeps x < nakx, xxf2yxf keeps y < naky.
 */
struct SharedDomain {
  std::array<Count, kNumDims> extents{};

  Count extent(Dim d) const { return extents[static_cast<int>(d)]; }
  Count size() const {
    Count n = 1;
    for (Count e : extents) n *= e;
    return n;
  }
};

SharedDomain shared_domain(Transform t, const GridShape& shape);

}  // namespace sdecomp
