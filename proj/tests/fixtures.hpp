#pragma once

#include <string>
#include <vector>

#include "multalg/generators.hpp"
#include "multalg/multialgebra.hpp"

namespace fixtures {

  using multalg::Multialgebra;
  using multalg::Operation;
  using multalg::Signature;
  using multalg::Subset;

  struct Named {
    std::string  name;
    Multialgebra algebra;
  };

  inline Multialgebra m3() {
    return Multialgebra(3, Signature({{"u", 1}}),
                        {{Subset::of({0, 1}), Subset::of({1}), Subset::of({2})}});
  }

  inline Multialgebra k3() {
    return multalg::krasner_from_ring(5, {1, 4});
  }

  // Z2 x Z2 with (a,b)+(c,d) = (a+c, b+d) and (a,b)(c,d) = (ac, ad);
  // element (a,b) is 2a+b.  Associative, distributive, not commutative.
  inline Multialgebra ltri() {
    std::vector<std::size_t> add(16);
    std::vector<std::size_t> mul(16);
    for (std::size_t x = 0; x < 4; ++x) {
      for (std::size_t y = 0; y < 4; ++y) {
        auto const a = x / 2, b = x % 2, c = y / 2, d = y % 2;
        add[x * 4 + y] = 2 * ((a + c) % 2) + (b + d) % 2;
        mul[x * 4 + y] = 2 * (a * c) + (a * d);
      }
    }
    return multalg::from_ring(4, add, mul);
  }

  inline Multialgebra z2_times_total2() {
    return multalg::direct_product(multalg::cyclic_ring(2), multalg::total_hyperstructure(2));
  }

  // (Z/n, plus) with an added constant.
  inline Multialgebra pointed_group(std::size_t n) {
    auto g = multalg::cyclic_group(n);
    return multalg::extend(g, {Operation{"zero", 0}}, {{Subset::singleton(0)}});
  }

  // Unary multialgebra on 4 points with two overlapping multi-valued maps.
  inline Multialgebra two_unary() {
    return Multialgebra(4, Signature({{"u", 1}, {"v", 1}}),
                        {{Subset::of({0, 1}), Subset::of({1}), Subset::of({3}), Subset::of({2})},
                         {Subset::of({0}), Subset::of({2}), Subset::of({2}), Subset::of({3})}});
  }

  // Binary operation with x*y = {x, y}.
  inline Multialgebra pair_set(std::size_t n) {
    std::vector<Subset> table;
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        table.push_back(Subset::of({x, y}));
      }
    }
    return Multialgebra(n, Signature({{"plus", 2}}), {table});
  }

  // All structured fixtures of carrier <= 4.
  inline std::vector<Named> structured() {
    using namespace multalg;
    return {
        {"M3", m3()},
        {"K3", k3()},
        {"Z2", cyclic_ring(2)},
        {"Z3", cyclic_ring(3)},
        {"Z4", cyclic_ring(4)},
        {"Z3+", cyclic_group(3)},
        {"Z4+", cyclic_group(4)},
        {"total2", total_hyperstructure(2)},
        {"total3", total_hyperstructure(3)},
        {"leftproj2", left_projection(2)},
        {"leftproj3", left_projection(3)},
        {"ltri", ltri()},
        {"Z2xtotal2", z2_times_total2()},
        {"krasner(4;1,3)", krasner_from_ring(4, {1, 3})},
        {"krasner(7;1,6)", krasner_from_ring(7, {1, 6})},
        {"pointedZ3", pointed_group(3)},
        {"two_unary", two_unary()},
        {"pairset3", pair_set(3)},
    };
  }

  inline std::vector<Named> random_set(std::size_t count, std::uint64_t seed = 2024) {
    std::vector<Signature> const sigs = {
        Signature({{"f", 2}}),
        Signature({{"f", 2}, {"u", 1}}),
        Signature({{"u", 1}, {"v", 1}}),
        Signature({{"plus", 2}, {"times", 2}}),
        Signature({{"u", 1}}),
    };
    std::vector<Named> out;
    for (std::size_t i = 0; i < count; ++i) {
      auto const  n   = 2 + i % 3;
      auto const& sig = sigs[i % sigs.size()];
      auto const  pct = static_cast<unsigned>(15 + (i * 7) % 30);
      out.push_back({"random" + std::to_string(i),
                     multalg::random_multialgebra(n, sig, seed + i, pct)});
    }
    return out;
  }

  inline std::vector<Named> all(std::size_t randoms = 12) {
    auto out = structured();
    for (auto& r : random_set(randoms)) {
      out.push_back(std::move(r));
    }
    return out;
  }

}  // namespace fixtures
