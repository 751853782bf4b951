// Serial reference versus OpenMP kernels.

#include <benchmark/benchmark.h>

#include "multalg/generators.hpp"
#include "multalg/kernels.hpp"
#include "multalg/polynomials.hpp"
#include "multalg/relations.hpp"

using namespace multalg;

namespace {

  Multialgebra const& random_algebra() {
    static auto const a = random_multialgebra(7, Signature({{"f", 2}, {"u", 1}}), 99, 20);
    return a;
  }

  std::vector<EquivRelation> const& partitions() {
    static auto const p = all_partitions(random_algebra().size());
    return p;
  }

  template <auto Kernel>
  void eua_flags(benchmark::State& state) {
    for (auto _ : state) {
      benchmark::DoNotOptimize(Kernel(random_algebra(), partitions()));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(partitions().size()));
  }

  template <auto Kernel>
  void sum_of_products(benchmark::State& state) {
    static auto const a    = krasner_from_ring(13, {1, 3, 9});
    auto const        size = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
      benchmark::DoNotOptimize(Kernel(a, 0, 1, size, kernels::SwapStrategy::adjacent));
    }
  }

  template <auto Kernel>
  void apply_operation(benchmark::State& state) {
    static auto const a        = random_multialgebra(3, Signature({{"f", 2}}), 5, 30);
    static auto const polys    = saturate_unary_polynomials(a);
    auto const        universe = polys.size();
    auto const total    = universe * universe;
    for (auto _ : state) {
      benchmark::DoNotOptimize(Kernel(a, 0, polys, universe, 0, 0, total));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(total));
  }

}  // namespace

BENCHMARK(eua_flags<kernels::serial::eua_flags>)->Name("eua_flags/serial");
BENCHMARK(eua_flags<kernels::parallel::eua_flags>)->Name("eua_flags/parallel");
BENCHMARK(sum_of_products<kernels::serial::sum_of_products_pairs>)->Name("sum_of_products/serial")->DenseRange(2, 4);
BENCHMARK(sum_of_products<kernels::parallel::sum_of_products_pairs>)->Name("sum_of_products/parallel")->DenseRange(2, 4);
BENCHMARK(apply_operation<kernels::serial::apply_operation>)->Name("apply_operation/serial");
BENCHMARK(apply_operation<kernels::parallel::apply_operation>)->Name("apply_operation/parallel");

BENCHMARK_MAIN();
