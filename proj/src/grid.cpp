#include "sdecomp/grid.hpp"

#include <stdexcept>

namespace sdecomp {

std::string_view to_string(Dim dim) {
  switch (dim) {
    case Dim::x: return "x";
    case Dim::y: return "y";
    case Dim::ig: return "ig";
    case Dim::isgn: return "isgn";
    case Dim::l: return "l";
    case Dim::e: return "e";
    case Dim::s: return "s";
  }
  return "?";
}

Count dealiased_full_extent(Count dealiased) { return (3 * dealiased + 1) / 2; }

GridShape GridShape::with_dealiasing(Count nakx, Count naky, Count nig, Count nlambda,
                                     Count negrid, Count nspec, Count element_bytes) {
  GridShape g;
  g.nakx = nakx;
  g.naky = naky;
  g.inx = dealiased_full_extent(nakx);
  g.iny = dealiased_full_extent(naky);
  g.nig = nig;
  g.nsign = 2;
  g.nlambda = nlambda;
  g.negrid = negrid;
  g.nspec = nspec;
  g.element_bytes = element_bytes;
  return g;
}

std::optional<std::string> validation_error(const GridShape& g) {
  const std::pair<const char*, Count> extents[] = {
      {"nakx", g.nakx}, {"naky", g.naky},       {"inx", g.inx},       {"iny", g.iny},
      {"nig", g.nig},   {"nlambda", g.nlambda}, {"negrid", g.negrid}, {"nspec", g.nspec}};
  for (const auto& [name, value] : extents) {
    if (value < 1) return std::string(name) + " must be >= 1 (got " + std::to_string(value) + ")";
  }
  if (g.nsign != 2) return "nsign must be 2 (got " + std::to_string(g.nsign) + ")";
  if (g.nig % 2 == 0) return "nig must be odd (got " + std::to_string(g.nig) + ")";
  if (g.inx < g.nakx) return "inx must be >= nakx";
  if (g.iny < g.naky) return "iny must be >= naky";
  if (g.element_bytes < 1) return "element_bytes must be >= 1";
  return std::nullopt;
}

void validate(const GridShape& shape) {
  if (auto err = validation_error(shape)) throw std::invalid_argument(*err);
}

std::string_view to_string(Layout layout) {
  switch (layout) {
    case Layout::xyles: return "xyles";
    case Layout::yxles: return "yxles";
    case Layout::lyxes: return "lyxes";
    case Layout::yxels: return "yxels";
    case Layout::lxyes: return "lxyes";
    case Layout::lexys: return "lexys";
  }
  return "?";
}

std::optional<Layout> parse_layout(std::string_view token) {
  for (Layout l : kAllLayouts) {
    if (to_string(l) == token) return l;
  }
  return std::nullopt;
}

std::string admissible_layouts() {
  std::string out;
  for (Layout l : kAllLayouts) {
    if (!out.empty()) out += ", ";
    out += to_string(l);
  }
  return out;
}

std::array<Dim, 5> layout_dims(Layout layout) {
  std::array<Dim, 5> dims{};
  const auto token = to_string(layout);
  for (std::size_t i = 0; i < dims.size(); ++i) {
    switch (token[i]) {
      case 'x': dims[i] = Dim::x; break;
      case 'y': dims[i] = Dim::y; break;
      case 'l': dims[i] = Dim::l; break;
      case 'e': dims[i] = Dim::e; break;
      default: dims[i] = Dim::s; break;
    }
  }
  return dims;
}

std::string_view to_string(SpaceKind space) {
  switch (space) {
    case SpaceKind::g_lo: return "g_lo";
    case SpaceKind::xxf_lo: return "xxf_lo";
    case SpaceKind::yxf_lo: return "yxf_lo";
  }
  return "?";
}

std::optional<SpaceKind> parse_space(std::string_view token) {
  for (SpaceKind s : kAllSpaces) {
    if (to_string(s) == token) return s;
  }
  return std::nullopt;
}

namespace {

Count velocity_extent(Dim d, const GridShape& g) {
  switch (d) {
    case Dim::l: return g.nlambda;
    case Dim::e: return g.negrid;
    default: return g.nspec;
  }
}

}  // namespace

std::vector<CompoundDim> compound_dims(SpaceKind space, const GridShape& g, Layout layout) {
  std::vector<CompoundDim> dims;
  dims.reserve(6);
  const auto order = layout_dims(layout);
  if (space == SpaceKind::g_lo) {
    for (Dim d : order) {
      if (d == Dim::x) dims.push_back({d, g.nakx});
      else if (d == Dim::y) dims.push_back({d, g.naky});
      else dims.push_back({d, velocity_extent(d, g)});
    }
    return dims;
  }
  if (space == SpaceKind::xxf_lo) dims.push_back({Dim::y, g.naky});
  else dims.push_back({Dim::x, g.inx});
  dims.push_back({Dim::ig, g.nig});
  dims.push_back({Dim::isgn, g.nsign});
  // l, e, s keep their relative order from the layout string
  for (Dim d : order) {
    if (d == Dim::l || d == Dim::e || d == Dim::s) dims.push_back({d, velocity_extent(d, g)});
  }
  return dims;
}

std::vector<CompoundDim> local_dims(SpaceKind space, const GridShape& g) {
  switch (space) {
    case SpaceKind::g_lo: return {{Dim::ig, g.nig}, {Dim::isgn, g.nsign}};
    case SpaceKind::xxf_lo: return {{Dim::x, g.inx}};
    case SpaceKind::yxf_lo: return {{Dim::y, g.iny}};
  }
  return {};
}

Count local_extent(SpaceKind space, const GridShape& shape) {
  Count n = 1;
  for (const auto& d : local_dims(space, shape)) n *= d.extent;
  return n;
}

IndexSpace::IndexSpace(SpaceKind space, const GridShape& shape, Layout layout)
    : space_(space), layout_(layout), dims_(compound_dims(space, shape, layout)) {
  extent_.fill(1);
  for (const auto& d : dims_) {
    stride_[static_cast<int>(d.dim)] = total_;
    extent_[static_cast<int>(d.dim)] = d.extent;
    total_ *= d.extent;
  }
}

FlatIndex IndexSpace::flatten(const GlobalCoordinate& c) const {
  for (const auto& d : dims_) {
    const Count v = c[d.dim];
    if (v < 0 || v >= d.extent) {
      throw std::out_of_range("coordinate " + std::string(to_string(d.dim)) + "=" +
                              std::to_string(v) + " outside [0, " + std::to_string(d.extent) +
                              ") in " + std::string(to_string(space_)));
    }
  }
  return flatten_unchecked(c);
}

GlobalCoordinate IndexSpace::unflatten(FlatIndex flat) const {
  if (flat < 0 || flat >= total_) {
    throw std::out_of_range("flat index " + std::to_string(flat) + " outside [0, " +
                            std::to_string(total_) + ")");
  }
  GlobalCoordinate c;
  for (const auto& d : dims_) {
    c[d.dim] = flat % d.extent;
    flat /= d.extent;
  }
  return c;
}

Count total_size(SpaceKind space, const GridShape& shape, Layout layout) {
  return IndexSpace(space, shape, layout).total();
}

FlatIndex compound_index(SpaceKind space, const GridShape& shape, Layout layout,
                         const GlobalCoordinate& coord) {
  return IndexSpace(space, shape, layout).flatten(coord);
}

GlobalCoordinate coordinate_of(SpaceKind space, const GridShape& shape, Layout layout,
                               FlatIndex flat) {
  return IndexSpace(space, shape, layout).unflatten(flat);
}

}  // namespace sdecomp
