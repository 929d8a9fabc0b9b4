#include "sdecomp/shared_domain.hpp"

namespace sdecomp {

std::string_view to_string(Transform t) {
  switch (t) {
    case Transform::g2xxf: return "g2xxf";
    case Transform::xxf2yxf: return "xxf2yxf";
    case Transform::yxf2xxf: return "yxf2xxf";
    case Transform::xxf2g: return "xxf2g";
  }
  return "?";
}

std::optional<Transform> parse_transform(std::string_view token) {
  for (Transform t : kAllTransforms) {
    if (to_string(t) == token) return t;
  }
  return std::nullopt;
}

SpaceKind source_space(Transform t) {
  switch (t) {
    case Transform::g2xxf: return SpaceKind::g_lo;
    case Transform::xxf2yxf: return SpaceKind::xxf_lo;
    case Transform::yxf2xxf: return SpaceKind::yxf_lo;
    case Transform::xxf2g: return SpaceKind::xxf_lo;
  }
  return SpaceKind::g_lo;
}

SpaceKind dest_space(Transform t) { return source_space(inverse(t)); }

Transform inverse(Transform t) {
  switch (t) {
    case Transform::g2xxf: return Transform::xxf2g;
    case Transform::xxf2yxf: return Transform::yxf2xxf;
    case Transform::yxf2xxf: return Transform::xxf2yxf;
    case Transform::xxf2g: return Transform::g2xxf;
  }
  return t;
}

SharedDomain shared_domain(Transform t, const GridShape& g) {
  const bool k_space = t == Transform::g2xxf || t == Transform::xxf2g;
  SharedDomain d;
  d.extents = {k_space ? g.nakx : g.inx, g.naky, g.nig, g.nsign, g.nlambda, g.negrid, g.nspec};
  return d;
}

}  // namespace sdecomp
