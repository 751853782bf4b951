#pragma once

// Per-expression building blocks shared by the serial and OpenMP kernels.

#include <algorithm>
#include <numeric>
#include <span>
#include <vector>

#include "multalg/kernels.hpp"
#include "multalg/relations.hpp"

namespace multalg::kernels::detail {

  // Product of factors, folded from the left.
  inline Subset product(Multialgebra const& a, std::size_t times, std::span<std::size_t const> xs) {
    Subset acc = Subset::singleton(xs[0]);
    for (std::size_t j = 1; j < xs.size(); ++j) {
      acc = lift(a, times, acc, Subset::singleton(xs[j]));
    }
    return acc;
  }

  inline Subset sum(Multialgebra const& a, std::size_t plus, std::span<Subset const> terms) {
    Subset acc = terms[0];
    for (std::size_t i = 1; i < terms.size(); ++i) {
      acc = lift(a, plus, acc, terms[i]);
    }
    return acc;
  }

  // A sum of products: `elements` split into consecutive summands of the
  // given lengths.
  struct Expression {
    std::span<std::size_t const> elements;
    std::span<std::size_t const> parts;

    std::span<std::size_t const> summand(std::size_t i, std::span<std::size_t const> offsets) const {
      return elements.subspan(offsets[i], parts[i]);
    }
  };

  inline std::vector<std::size_t> offsets_of(std::span<std::size_t const> parts) {
    std::vector<std::size_t> off(parts.size(), 0);
    for (std::size_t i = 1; i < parts.size(); ++i) {
      off[i] = off[i - 1] + parts[i - 1];
    }
    return off;
  }

  inline Subset value(Multialgebra const&            a,
                      std::size_t                    plus,
                      std::size_t                    times,
                      std::span<std::size_t const>   elements,
                      std::span<std::size_t const>   parts) {
    std::vector<Subset> terms;
    terms.reserve(parts.size());
    std::size_t off = 0;
    for (auto k : parts) {
      terms.push_back(product(a, times, elements.subspan(off, k)));
      off += k;
    }
    return sum(a, plus, terms);
  }

  // Union of the values of all expressions obtained by one adjacent swap of
  // factors inside a summand or of two neighbouring summands.
  inline Subset adjacent_variants(Multialgebra const&          a,
                                  std::size_t                  plus,
                                  std::size_t                  times,
                                  std::span<std::size_t const> elements,
                                  std::span<std::size_t const> parts) {
    Subset                   out;
    std::vector<std::size_t> work(elements.begin(), elements.end());
    std::size_t              off = 0;
    for (auto k : parts) {
      for (std::size_t j = 0; j + 1 < k; ++j) {
        std::swap(work[off + j], work[off + j + 1]);
        out |= value(a, plus, times, work, parts);
        std::swap(work[off + j], work[off + j + 1]);
      }
      off += k;
    }
    if (parts.size() >= 2) {
      std::vector<Subset> terms;
      off = 0;
      for (auto k : parts) {
        terms.push_back(product(a, times, elements.subspan(off, k)));
        off += k;
      }
      for (std::size_t i = 0; i + 1 < terms.size(); ++i) {
        std::swap(terms[i], terms[i + 1]);
        out |= sum(a, plus, terms);
        std::swap(terms[i], terms[i + 1]);
      }
    }
    return out;
  }

  // Each summand's products over all factor orders, one entry per order.
  inline std::vector<std::vector<Subset>> permuted_products(Multialgebra const&          a,
                                                            std::size_t                  times,
                                                            std::span<std::size_t const> elements,
                                                            std::span<std::size_t const> parts) {
    std::vector<std::vector<Subset>> out;
    std::size_t                      off = 0;
    for (auto k : parts) {
      std::vector<std::size_t> order(k);
      std::iota(order.begin(), order.end(), std::size_t{0});
      std::vector<std::size_t> factors(k);
      std::vector<Subset>      values;
      do {
        for (std::size_t j = 0; j < k; ++j) {
          factors[j] = elements[off + order[j]];
        }
        values.push_back(product(a, times, factors));
      } while (std::next_permutation(order.begin(), order.end()));
      out.push_back(std::move(values));
      off += k;
    }
    return out;
  }

  // Union over summand orders of the sums of the given summand values.
  inline Subset permuted_sums(Multialgebra const& a, std::size_t plus, std::span<Subset const> terms) {
    std::vector<std::size_t> order(terms.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::vector<Subset> arranged(terms.size());
    Subset              out;
    do {
      for (std::size_t i = 0; i < terms.size(); ++i) {
        arranged[i] = terms[order[i]];
      }
      out |= sum(a, plus, arranged);
    } while (std::next_permutation(order.begin(), order.end()));
    return out;
  }

  inline Subset pure_sum(Multialgebra const& a, std::size_t plus, std::span<std::size_t const> zs) {
    Subset acc = Subset::singleton(zs[0]);
    for (std::size_t i = 1; i < zs.size(); ++i) {
      acc = lift(a, plus, acc, Subset::singleton(zs[i]));
    }
    return acc;
  }

  inline Subset adjacent_sum_variants(Multialgebra const& a, std::size_t plus, std::span<std::size_t const> zs) {
    std::vector<std::size_t> work(zs.begin(), zs.end());
    Subset                   out;
    for (std::size_t i = 0; i + 1 < work.size(); ++i) {
      std::swap(work[i], work[i + 1]);
      out |= pure_sum(a, plus, work);
      std::swap(work[i], work[i + 1]);
    }
    return out;
  }

  inline void add_symmetric(PairRelation& r, Subset xs, Subset ys) {
    r.insert_product(xs, ys);
    r.insert_product(ys, xs);
  }

  // Table of x -> f(p_j1(x), ..., p_jk(x)) for the argument tuple `args`.
  inline PolyTable apply_to(Multialgebra const&                    a,
                            std::size_t                            op,
                            std::vector<UnaryPolyFunction> const& functions,
                            std::span<std::size_t const>           args) {
    auto const          size = poly_table_size(a.size());
    PolyTable           out(size);
    std::vector<Subset> values(args.size());
    for (std::size_t x = 0; x < size; ++x) {
      for (std::size_t i = 0; i < args.size(); ++i) {
        values[i] = functions[args[i]].values[x];
      }
      out[x] = lift(a, op, values);
    }
    return out;
  }

}  // namespace multalg::kernels::detail
