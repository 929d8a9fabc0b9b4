#include <doctest.h>

#include <random>

#include "sdecomp/redistribution.hpp"
#include "sdecomp/transfer_kernels.hpp"
#include "test_shapes.hpp"

using namespace sdecomp;
using sdecomp::testing::random_shape;
using sdecomp::testing::reconstruction_shape;

TEST_CASE("OpenMP kernel matches the serial reference") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = random_shape(rng, 8000);
    const Layout layout = kAllLayouts[static_cast<std::size_t>(trial) % 6];
    const Count n = std::uniform_int_distribution<Count>(1, 90)(rng);
    for (Transform t : kAllTransforms) {
      const auto src = balanced_plan(source_space(t), g, layout, n);
      const auto dst = unbalanced_plan(dest_space(t), g, layout, n, 1.0);
      const auto domain = shared_domain(t, g);
      const auto serial = kernels::transfer_map_serial(src, dst, domain);
      for (int threads : {1, 2, 3, 7}) {
        CHECK(kernels::transfer_map_parallel(src, dst, domain, threads) == serial);
      }
    }
  }
}

TEST_CASE("kernels at benchmark scale") {
  const auto g = reconstruction_shape();
  const auto src = balanced_plan(SpaceKind::xxf_lo, g, Layout::yxles, 1536);
  const auto dst = balanced_plan(SpaceKind::yxf_lo, g, Layout::yxles, 1536);
  const auto domain = shared_domain(Transform::xxf2yxf, g);
  const auto serial = kernels::transfer_map_serial(src, dst, domain);
  const auto parallel = kernels::transfer_map_parallel(src, dst, domain, 4);
  CHECK(serial == parallel);
  CHECK(serial.total_elements() == 48 * 1'015'808);
  // the trailing empty rank sends nothing and receives its full yxf block
  CHECK(serial.row_sums().back() == 0);
  CHECK(serial.col_sums().back() == 992 * 32);
}
