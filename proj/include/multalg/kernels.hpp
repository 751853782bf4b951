#pragma once

// Data-parallel inner loops.  Every kernel has a straightforward serial
// version, kept as the reference the OpenMP version is tested against, and
// an OpenMP version used by the library.  Serial and parallel results are
// identical, including order.

#include <cstddef>
#include <span>
#include <vector>

#include "multalg/equivalence.hpp"
#include "multalg/multialgebra.hpp"
#include "multalg/pair_relation.hpp"
#include "multalg/polynomials.hpp"

namespace multalg::kernels {

  enum class SwapStrategy {
    // y in a sum of products with summands and factors permuted arbitrarily
    all_permutations,
    // y in a sum of products differing by one adjacent swap
    adjacent
  };

  namespace serial {
    // flags[i] != 0 iff in_eua(a, partitions[i]).
    std::vector<char> eua_flags(Multialgebra const& a, std::span<EquivRelation const> partitions);

    // Pairs contributed by all sums of products of total size exactly
    // `size`.  The all-permutations route evaluates every permuted variant
    // separately.
    PairRelation sum_of_products_pairs(Multialgebra const& a,
                                       std::size_t         plus,
                                       std::size_t         times,
                                       std::size_t         size,
                                       SwapStrategy        strategy);

    // Pairs from pure sums z1 + ... + zsize differing by one adjacent swap.
    PairRelation additive_swap_pairs(Multialgebra const& a, std::size_t plus, std::size_t size);

    // Tables of x -> f(p_j1(x), ..., p_jk(x)) for flat argument indices
    // [begin, end) over the first `universe` functions, taken k at a time,
    // skipping tuples whose indices are all
    // below first_new.  Output holds (flat index, table) in increasing flat
    // order.
    std::vector<std::pair<std::size_t, PolyTable>> apply_operation(
        Multialgebra const&                    a,
        std::size_t                            op,
        std::vector<UnaryPolyFunction> const& functions,
        std::size_t                            universe,
        std::size_t                            first_new,
        std::size_t                            begin,
        std::size_t                            end);
  }  // namespace serial

  namespace parallel {
    std::vector<char> eua_flags(Multialgebra const& a, std::span<EquivRelation const> partitions);

    // The all-permutations route unions each summand's permuted products
    // before permuting summands; lifted operations preserve unions in every
    // argument, so the result equals the serial route.
    PairRelation sum_of_products_pairs(Multialgebra const& a,
                                       std::size_t         plus,
                                       std::size_t         times,
                                       std::size_t         size,
                                       SwapStrategy        strategy);

    PairRelation additive_swap_pairs(Multialgebra const& a, std::size_t plus, std::size_t size);

    std::vector<std::pair<std::size_t, PolyTable>> apply_operation(
        Multialgebra const&                    a,
        std::size_t                            op,
        std::vector<UnaryPolyFunction> const& functions,
        std::size_t                            universe,
        std::size_t                            first_new,
        std::size_t                            begin,
        std::size_t                            end);
  }  // namespace parallel

  // Compositions of size into positive parts, in lexicographic order.
  std::vector<std::vector<std::size_t>> compositions(std::size_t size);

}  // namespace multalg::kernels
