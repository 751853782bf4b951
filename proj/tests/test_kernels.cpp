#include <catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "multalg/kernels.hpp"
#include "multalg/polynomials.hpp"

using namespace multalg;

TEST_CASE("compositions") {
  auto const c = kernels::compositions(3);
  std::vector<std::vector<std::size_t>> const expected = {{1, 1, 1}, {1, 2}, {2, 1}, {3}};
  CHECK(c == expected);
  CHECK(kernels::compositions(6).size() == 32);
}

TEST_CASE("E_ua screening: serial and parallel agree") {
  for (auto const& [name, a] : fixtures::all(20)) {
    INFO(name);
    auto const ps = all_partitions(a.size());
    CHECK(kernels::serial::eua_flags(a, ps) == kernels::parallel::eua_flags(a, ps));
  }
}

TEST_CASE("sum-of-products pairs: serial and parallel agree") {
  std::vector<fixtures::Named> const rings = {
      {"K3", fixtures::k3()},
      {"total2", total_hyperstructure(2)},
      {"ltri", fixtures::ltri()},
      {"Z2xtotal2", fixtures::z2_times_total2()},
      {"krasner7", krasner_from_ring(7, {1, 2, 4})},
  };
  for (auto const& [name, a] : rings) {
    INFO(name);
    for (std::size_t size = 1; size <= 4; ++size) {
      INFO("size " << size);
      for (auto strategy : {kernels::SwapStrategy::all_permutations, kernels::SwapStrategy::adjacent}) {
        CHECK(kernels::serial::sum_of_products_pairs(a, 0, 1, size, strategy) ==
              kernels::parallel::sum_of_products_pairs(a, 0, 1, size, strategy));
      }
      CHECK(kernels::serial::additive_swap_pairs(a, 0, size) ==
            kernels::parallel::additive_swap_pairs(a, 0, size));
    }
  }
}

TEST_CASE("operation application: serial and parallel agree") {
  auto const a     = fixtures::k3();
  auto const polys = saturate_unary_polynomials(a);
  auto const u     = polys.size();
  for (std::size_t op = 0; op < 2; ++op) {
    auto const total = u * u;
    for (std::size_t first_new : {std::size_t{0}, u / 2}) {
      CHECK(kernels::serial::apply_operation(a, op, polys, u, first_new, 0, total) ==
            kernels::parallel::apply_operation(a, op, polys, u, first_new, 0, total));
    }
  }
}
