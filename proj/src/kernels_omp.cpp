#include <omp.h>

#include <algorithm>

#include "kernel_detail.hpp"
#include "multalg/kernels.hpp"

namespace multalg::kernels::parallel {

  namespace {
    using index_t = long long;  // OpenMP loop counters must be signed
  }

  std::vector<char> eua_flags(Multialgebra const& a, std::span<EquivRelation const> partitions) {
    std::vector<char> flags(partitions.size(), 0);
    auto const        count = static_cast<index_t>(partitions.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (index_t i = 0; i < count; ++i) {
      flags[i] = in_eua(a, partitions[i]) ? 1 : 0;
    }
    return flags;
  }

  PairRelation sum_of_products_pairs(Multialgebra const& a,
                                     std::size_t         plus,
                                     std::size_t         times,
                                     std::size_t         size,
                                     SwapStrategy        strategy) {
    auto const   n = a.size();
    PairRelation result(n);
    auto const   count = static_cast<index_t>(tuple_count(n, size));
    for (auto const& parts : compositions(size)) {
#pragma omp parallel
      {
        PairRelation             local(n);
        std::vector<std::size_t> elements(size);
        std::vector<Subset>      unions(parts.size());
#pragma omp for schedule(dynamic, 64)
        for (index_t t = 0; t < count; ++t) {
          decode_tuple(static_cast<std::size_t>(t), n, elements);
          auto const base = detail::value(a, plus, times, elements, parts);
          Subset     variants;
          if (strategy == SwapStrategy::adjacent) {
            variants = detail::adjacent_variants(a, plus, times, elements, parts);
          } else {
            auto const products = detail::permuted_products(a, times, elements, parts);
            for (std::size_t i = 0; i < parts.size(); ++i) {
              unions[i] = Subset();
              for (auto s : products[i]) {
                unions[i] |= s;
              }
            }
            variants = detail::permuted_sums(a, plus, unions);
          }
          if (!variants.empty()) {
            detail::add_symmetric(local, base, variants);
          }
        }
#pragma omp critical(multalg_sop_merge)
        result |= local;
      }
    }
    return result;
  }

  PairRelation additive_swap_pairs(Multialgebra const& a, std::size_t plus, std::size_t size) {
    auto const   n = a.size();
    PairRelation result(n);
    auto const   count = static_cast<index_t>(tuple_count(n, size));
#pragma omp parallel
    {
      PairRelation             local(n);
      std::vector<std::size_t> zs(size);
#pragma omp for schedule(dynamic, 64)
      for (index_t t = 0; t < count; ++t) {
        decode_tuple(static_cast<std::size_t>(t), n, zs);
        auto const variants = detail::adjacent_sum_variants(a, plus, zs);
        if (!variants.empty()) {
          detail::add_symmetric(local, detail::pure_sum(a, plus, zs), variants);
        }
      }
#pragma omp critical(multalg_additive_merge)
      result |= local;
    }
    return result;
  }

  std::vector<std::pair<std::size_t, PolyTable>> apply_operation(
      Multialgebra const&                    a,
      std::size_t                            op,
      std::vector<UnaryPolyFunction> const& functions,
      std::size_t                            universe,
      std::size_t                            first_new,
      std::size_t                            begin,
      std::size_t                            end) {
    auto const             k     = a.arity(op);
    auto const             count = static_cast<index_t>(end - begin);
    std::vector<PolyTable> tables(static_cast<std::size_t>(count));
    std::vector<char>      keep(static_cast<std::size_t>(count), 0);
#pragma omp parallel
    {
      std::vector<std::size_t> args(k);
#pragma omp for schedule(dynamic, 256)
      for (index_t i = 0; i < count; ++i) {
        decode_tuple(begin + static_cast<std::size_t>(i), universe, args);
        if (!args.empty() && std::all_of(args.begin(), args.end(),
                                         [&](std::size_t j) { return j < first_new; })) {
          continue;
        }
        tables[i] = detail::apply_to(a, op, functions, args);
        keep[i]   = 1;
      }
    }
    std::vector<std::pair<std::size_t, PolyTable>> out;
    for (index_t i = 0; i < count; ++i) {
      if (keep[i] != 0) {
        out.emplace_back(begin + static_cast<std::size_t>(i), std::move(tables[i]));
      }
    }
    return out;
  }

}  // namespace multalg::kernels::parallel
