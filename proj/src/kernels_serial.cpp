#include <algorithm>

#include "kernel_detail.hpp"
#include "multalg/kernels.hpp"

namespace multalg::kernels {

  std::vector<std::vector<std::size_t>> compositions(std::size_t size) {
    std::vector<std::vector<std::size_t>> out;
    if (size == 0) {
      return out;
    }
    // Bit i of mask set = a cut after position i.
    for (std::size_t mask = 0; mask < (std::size_t{1} << (size - 1)); ++mask) {
      std::vector<std::size_t> parts;
      std::size_t              len = 1;
      for (std::size_t i = 0; i + 1 < size; ++i) {
        if ((mask >> i) & 1U) {
          parts.push_back(len);
          len = 1;
        } else {
          ++len;
        }
      }
      parts.push_back(len);
      out.push_back(std::move(parts));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  namespace serial {

    std::vector<char> eua_flags(Multialgebra const& a, std::span<EquivRelation const> partitions) {
      std::vector<char> flags(partitions.size(), 0);
      for (std::size_t i = 0; i < partitions.size(); ++i) {
        flags[i] = in_eua(a, partitions[i]) ? 1 : 0;
      }
      return flags;
    }

    PairRelation sum_of_products_pairs(Multialgebra const& a,
                                       std::size_t         plus,
                                       std::size_t         times,
                                       std::size_t         size,
                                       SwapStrategy        strategy) {
      auto const               n = a.size();
      PairRelation             r(n);
      std::vector<std::size_t> elements(size);
      auto const               count = tuple_count(n, size);
      for (auto const& parts : compositions(size)) {
        for (std::size_t t = 0; t < count; ++t) {
          decode_tuple(t, n, elements);
          auto const base = detail::value(a, plus, times, elements, parts);
          Subset     variants;
          if (strategy == SwapStrategy::adjacent) {
            variants = detail::adjacent_variants(a, plus, times, elements, parts);
          } else {
            // Every summand order combined with every factor order.
            auto const products = detail::permuted_products(a, times, elements, parts);
            std::vector<std::size_t> order(parts.size());
            std::iota(order.begin(), order.end(), std::size_t{0});
            std::vector<std::size_t> choice(parts.size(), 0);
            std::vector<Subset>      terms(parts.size());
            do {
              std::fill(choice.begin(), choice.end(), 0);
              while (true) {
                for (std::size_t i = 0; i < parts.size(); ++i) {
                  terms[i] = products[order[i]][choice[order[i]]];
                }
                variants |= detail::sum(a, plus, terms);
                std::size_t i = parts.size();
                while (i > 0 && ++choice[i - 1] == products[i - 1].size()) {
                  choice[i - 1] = 0;
                  --i;
                }
                if (i == 0) {
                  break;
                }
              }
            } while (std::next_permutation(order.begin(), order.end()));
          }
          if (!variants.empty()) {
            detail::add_symmetric(r, base, variants);
          }
        }
      }
      return r;
    }

    PairRelation additive_swap_pairs(Multialgebra const& a, std::size_t plus, std::size_t size) {
      auto const               n = a.size();
      PairRelation             r(n);
      std::vector<std::size_t> zs(size);
      auto const               count = tuple_count(n, size);
      for (std::size_t t = 0; t < count; ++t) {
        decode_tuple(t, n, zs);
        auto const variants = detail::adjacent_sum_variants(a, plus, zs);
        if (!variants.empty()) {
          detail::add_symmetric(r, detail::pure_sum(a, plus, zs), variants);
        }
      }
      return r;
    }

    std::vector<std::pair<std::size_t, PolyTable>> apply_operation(
        Multialgebra const&                    a,
        std::size_t                            op,
        std::vector<UnaryPolyFunction> const& functions,
        std::size_t                            universe,
        std::size_t                            first_new,
        std::size_t                            begin,
        std::size_t                            end) {
      std::vector<std::pair<std::size_t, PolyTable>> out;
      std::vector<std::size_t>                       args(a.arity(op));
      for (std::size_t t = begin; t < end; ++t) {
        decode_tuple(t, universe, args);
        if (!args.empty() && std::all_of(args.begin(), args.end(),
                                         [&](std::size_t j) { return j < first_new; })) {
          continue;
        }
        out.emplace_back(t, detail::apply_to(a, op, functions, args));
      }
      return out;
    }

  }  // namespace serial

}  // namespace multalg::kernels
