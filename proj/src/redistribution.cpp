#include "sdecomp/redistribution.hpp"

#include "sdecomp/transfer_kernels.hpp"

namespace sdecomp {

Count oracle_cells(Transform t, const GridShape& shape, Layout layout) {
  const SharedDomain domain = shared_domain(t, shape);
  const IndexSpace src(source_space(t), shape, layout);
  Count cells = 1;
  for (const auto& d : src.dims()) cells *= domain.extent(d.dim);
  return cells;
}

void check_size_guard(Transform t, const GridShape& shape, Layout layout, Count guard) {
  const Count cells = oracle_cells(t, shape, layout);
  if (cells > guard) throw SizeGuardError(cells, guard);
}

TransferMap exact_transfer_map(const DecompositionPlan& src, const DecompositionPlan& dst,
                               Transform t) {
  if (src.space() != source_space(t) || dst.space() != dest_space(t)) {
    throw std::invalid_argument("plan spaces do not match transform " +
                                std::string(to_string(t)));
  }
  return kernels::transfer_map_parallel(src, dst, shared_domain(t, src.shape()));
}

std::vector<Count> shared_ownership(const DecompositionPlan& plan, Transform t) {
  const SharedDomain domain = shared_domain(t, plan.shape());
  const IndexSpace index(plan.space(), plan.shape(), plan.layout());
  Count per_cell = 1;
  for (const auto& d : local_dims(plan.space(), plan.shape())) per_cell *= domain.extent(d.dim);

  std::vector<Count> owned(static_cast<std::size_t>(plan.nprocs()), 0);
  for (Count r = 0; r < plan.nprocs(); ++r) {
    const BlockRange& range = plan.range(r);
    for (FlatIndex f = range.low; f < range.high; ++f) {
      const GlobalCoordinate c = index.unflatten(f);
      bool inside = true;
      for (const auto& d : index.dims()) inside = inside && c[d.dim] < domain.extent(d.dim);
      if (inside) owned[static_cast<std::size_t>(r)] += per_cell;
    }
  }
  return owned;
}

Rational transfer_volume_linear(const Rational& delta, Count redist_data) {
  return Rational(1, 2) * delta * Rational(redist_data);
}

Rational transfer_volume_saturating(const Rational& delta, Count redist_data) {
  return (Rational(1) - Rational(1) / (Rational(2) * delta)) * Rational(redist_data);
}

Rational transfer_volume(const Rational& delta, Count redist_data) {
  return delta <= Rational(1) ? transfer_volume_linear(delta, redist_data)
                              : transfer_volume_saturating(delta, redist_data);
}

double TransferEstimate::transferred_fraction() const {
  if (total_redist_data == 0) return 0.0;
  return (total_trans_data / Rational(total_redist_data)).to_double();
}

TransferEstimate analytic_estimate(const GridShape& shape, Layout layout, Count nprocs) {
  TransferEstimate est;
  est.xxf_idle = idle_report(SpaceKind::xxf_lo, shape, layout, nprocs).idle_procs;
  est.yxf_idle = idle_report(SpaceKind::yxf_lo, shape, layout, nprocs).idle_procs;
  est.delta_idle_proc = (est.yxf_idle - est.xxf_idle).abs();
  est.total_redist_data = shape.inx * total_size(SpaceKind::xxf_lo, shape, layout);
  est.total_trans_data = transfer_volume(est.delta_idle_proc, est.total_redist_data);
  return est;
}

EstimateComparison compare_estimate(const GridShape& shape, Layout layout, Count nprocs,
                                    Count size_guard, Transform t) {
  if (t != Transform::xxf2yxf && t != Transform::yxf2xxf) {
    throw std::invalid_argument("the transfer estimate covers xxf2yxf and yxf2xxf only");
  }
  check_size_guard(t, shape, layout, size_guard);

  EstimateComparison cmp;
  cmp.estimate = analytic_estimate(shape, layout, nprocs);
  const auto src = balanced_plan(source_space(t), shape, layout, nprocs);
  const auto dst = balanced_plan(dest_space(t), shape, layout, nprocs);
  const TransferMap map = exact_transfer_map(src, dst, t);
  cmp.oracle_off_diagonal = map.off_diagonal_elements();
  cmp.shared_elements = map.total_elements();
  if (cmp.oracle_off_diagonal > 0) {
    const double est = cmp.estimate.total_trans_data.to_double();
    const auto oracle = static_cast<double>(cmp.oracle_off_diagonal);
    cmp.relative_error = (est - oracle) / oracle;
  } else if (cmp.estimate.total_trans_data == Rational(0)) {
    cmp.relative_error = 0.0;
  }
  return cmp;
}

}  // namespace sdecomp
