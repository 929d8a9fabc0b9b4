// Serial reference against the OpenMP kernel on the reconstructed production shape.

#include <benchmark/benchmark.h>

#include "sdecomp/decomposition.hpp"
#include "sdecomp/shared_domain.hpp"
#include "sdecomp/transfer_kernels.hpp"

namespace {

sdecomp::GridShape production_shape() {
  sdecomp::GridShape g;
  g.nakx = 32;
  g.naky = 32;
  g.inx = 48;
  g.iny = 48;
  g.nig = 31;
  g.nlambda = 32;
  g.negrid = 8;
  g.nspec = 2;
  return g;
}

struct Case {
  sdecomp::DecompositionPlan src;
  sdecomp::DecompositionPlan dst;
  sdecomp::SharedDomain domain;
};

Case make_case(sdecomp::Count nprocs) {
  using namespace sdecomp;
  const auto g = production_shape();
  return {balanced_plan(SpaceKind::xxf_lo, g, Layout::xyles, nprocs),
          balanced_plan(SpaceKind::yxf_lo, g, Layout::xyles, nprocs),
          shared_domain(Transform::xxf2yxf, g)};
}

void BM_Serial(benchmark::State& state) {
  const auto c = make_case(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sdecomp::kernels::transfer_map_serial(c.src, c.dst, c.domain));
  }
}

void BM_Parallel(benchmark::State& state) {
  const auto c = make_case(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sdecomp::kernels::transfer_map_parallel(c.src, c.dst, c.domain));
  }
}

}  // namespace

BENCHMARK(BM_Serial)->Arg(1536)->Arg(2048)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Parallel)->Arg(1536)->Arg(2048)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
