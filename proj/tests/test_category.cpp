#include <catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "multalg/category.hpp"
#include "multalg/errors.hpp"
#include "multalg/factor.hpp"
#include "multalg/hyperstructures.hpp"
#include "multalg/relations.hpp"
#include "oracles.hpp"

using namespace multalg;

namespace {

  Multialgebra zero_ring() {
    return cyclic_ring(1);
  }

  Variety commutative_rings() {
    return Variety{cyclic_ring(2).signature(), commutativity_identities()};
  }

}  // namespace

TEST_CASE("kernels") {
  auto const z4 = cyclic_ring(4);
  auto const z2 = cyclic_ring(2);
  CHECK(kernel(Homomorphism(z4, z2, {0, 1, 0, 1})).to_string() == "{{0,2},{1,3}}");
  CHECK(kernel(identity_homomorphism(z4)).is_diagonal());
  CHECK(kernel(Homomorphism(z4, zero_ring(), {0, 0, 0, 0})).is_total());
}

TEST_CASE("factoring through a quotient") {
  auto const z4 = cyclic_ring(4);
  auto const z2 = cyclic_ring(2);
  Homomorphism const mod2(z4, z2, {0, 1, 0, 1});
  auto const bar = factor_through(mod2, EquivRelation::parse("{{0,2},{1,3}}", 4));
  CHECK(bar.is_bijective());
  CHECK(bar.report().condition1_strict);
  auto const diag = factor_through(mod2, EquivRelation::diagonal(4));
  CHECK(diag.map() == mod2.map());
  CHECK_THROWS_AS(factor_through(mod2, EquivRelation::total(4)), PreconditionError);
}

TEST_CASE("variety membership") {
  auto const v = commutative_rings();
  CHECK(v.contains(cyclic_ring(3)));
  CHECK(v.contains(zero_ring()));
  CHECK_FALSE(v.contains(fixtures::ltri()));
  CHECK_FALSE(v.contains(fixtures::k3()));
}

TEST_CASE("reflections") {
  auto const v = commutative_rings();
  auto const k = fixtures::k3();
  auto const r = reflect(k, v, Homomorphism(k, zero_ring(), {0, 0, 0}));
  CHECK(r.relation.is_total());
  CHECK(r.induced.source().size() == 1);

  auto const z3 = cyclic_ring(3);
  auto const id = reflect(z3, v, identity_homomorphism(z3));
  CHECK(id.relation.is_diagonal());
  CHECK(id.induced.is_bijective());

  CHECK_THROWS_AS(reflect(k, v, Homomorphism(k, total_hyperstructure(2), {0, 0, 0})),
                  PreconditionError);
  auto const l = fixtures::ltri();
  CHECK_THROWS_AS(reflect(l, v, Homomorphism(l, cyclic_ring(2), {0, 1, 0, 1})), PreconditionError);
}

TEST_CASE("reflection universal property on all homomorphisms into small rings") {
  auto const v = commutative_rings();
  std::vector<fixtures::Named> const sources = {
      {"K3", fixtures::k3()}, {"total2", total_hyperstructure(2)}, {"ltri", fixtures::ltri()},
      {"Z4", cyclic_ring(4)}, {"Z2xtotal2", fixtures::z2_times_total2()}};
  std::vector<Multialgebra> const targets = {zero_ring(), cyclic_ring(2), cyclic_ring(3), cyclic_ring(4)};
  std::size_t triples = 0;
  for (auto const& [name, a] : sources) {
    for (auto const& b : targets) {
      for (auto const& map : oracle::homomorphisms(a, b)) {
        INFO(name << " -> Z" << b.size());
        Homomorphism const h(a, b, map);
        auto const         r = reflect(a, v, h);
        ++triples;
        for (std::size_t x = 0; x < a.size(); ++x) {
          CHECK(r.induced(r.projection(x)) == h(x));
        }
        std::size_t agreeing = 0;
        auto const  blocks   = r.relation.number_of_blocks();
        for (std::size_t i = 0; i < oracle::power(b.size(), blocks); ++i) {
          auto const g  = oracle::digits(i, b.size(), blocks);
          bool       ok = true;
          for (std::size_t x = 0; x < a.size(); ++x) {
            ok = ok && g[r.projection(x)] == h(x);
          }
          agreeing += ok ? 1 : 0;
        }
        CHECK(agreeing == 1);
      }
    }
  }
  CHECK(triples >= 10);
}

TEST_CASE("functor on morphisms") {
  auto const k  = fixtures::k3();
  auto const t2 = total_hyperstructure(2);
  auto const ids = commutativity_identities();
  auto const f = functor_on_morphism(Homomorphism(k, t2, {0, 0, 0}), ids);
  CHECK(f.source().size() == 1);
  CHECK(f.target().size() == 1);
  auto const z4 = cyclic_ring(4);
  auto const fi = functor_on_morphism(identity_homomorphism(z4), ids);
  CHECK(fi.map() == identity_homomorphism(fi.source()).map());
  auto const c = functor_on_morphism(Homomorphism(z4, cyclic_ring(2), {0, 0, 0, 0}), {});
  CHECK(c.map() == std::vector<std::size_t>{0, 0, 0, 0});
  CHECK_THROWS_AS(functor_on_morphism(Homomorphism(z4, cyclic_ring(2), {0, 1, 1, 0}), ids),
                  PreconditionError);
}

TEST_CASE("functor laws on a fixture category") {
  auto const ids = commutativity_identities();
  std::vector<Multialgebra> const objects = {fixtures::k3(), total_hyperstructure(2), cyclic_ring(2),
                                             fixtures::ltri(), fixtures::z2_times_total2(), zero_ring()};
  std::vector<Homomorphism> arrows;
  for (auto const& a : objects) {
    for (auto const& b : objects) {
      for (auto const& map : oracle::homomorphisms(a, b)) {
        arrows.emplace_back(a, b, map);
      }
    }
  }
  REQUIRE(arrows.size() >= 8);
  for (auto const& a : objects) {
    auto const f = functor_on_morphism(identity_homomorphism(a), ids);
    CHECK(f.map() == identity_homomorphism(f.source()).map());
  }
  std::size_t composable = 0;
  for (std::size_t i = 0; i < arrows.size() && composable < 4000; ++i) {
    for (std::size_t j = 0; j < arrows.size(); ++j) {
      auto const& h = arrows[i];
      auto const& g = arrows[j];
      if (!(h.target() == g.source())) {
        continue;
      }
      ++composable;
      auto const lhs = functor_on_morphism(compose(g, h), ids);
      auto const rhs = compose(functor_on_morphism(g, ids), functor_on_morphism(h, ids));
      CHECK(lhs.map() == rhs.map());
    }
  }
  CHECK(composable > 0);
}

TEST_CASE("diagram validation") {
  auto const z4 = cyclic_ring(4);
  auto const z2 = cyclic_ring(2);
  using Arrow = DirectedDiagram::Arrow;
  CHECK_THROWS_AS(DirectedDiagram({z4, z2}, std::vector<Arrow>{{{0, 1}, {0, 1, 1, 0}}}), PreconditionError);
  CHECK_THROWS_AS(DirectedDiagram({z2, z2}, std::vector<Arrow>{}), PreconditionError);
  CHECK_THROWS_AS(DirectedDiagram({z2, z2}, std::vector<Arrow>{{{0, 1}, {0, 1}}, {{1, 0}, {0, 1}}}),
                  PreconditionError);
  CHECK_THROWS_AS(DirectedDiagram({z4, fixtures::m3()}, std::vector<Arrow>{}), PreconditionError);
  CHECK_THROWS_AS(DirectedDiagram({z2, z2}, std::vector<Arrow>{{{0, 0}, {1, 0}}}), PreconditionError);
  // two paths 0 -> 2 that disagree
  auto const t2 = total_hyperstructure(2);
  CHECK_THROWS_AS(DirectedDiagram({t2, t2, t2, t2},
                                  std::vector<Arrow>{{{0, 1}, {0, 1}}, {{0, 2}, {1, 0}}, {{1, 3}, {0, 1}}, {{2, 3}, {0, 1}}}),
                  PreconditionError);
  auto const d = DirectedDiagram::chain({z4, z2, z2}, {{0, 1, 0, 1}, {0, 1}});
  CHECK(d.leq(0, 2));
  CHECK_FALSE(d.leq(2, 0));
  CHECK(d.top() == 2);
  CHECK(d.arrow(0, 2).map() == std::vector<std::size_t>{0, 1, 0, 1});
}

TEST_CASE("colimits") {
  auto const z4 = cyclic_ring(4);
  auto const z2 = cyclic_ring(2);
  auto const single = colimit(DirectedDiagram({z4}, {}));
  CHECK(single.object == z4);
  CHECK(single.injections[0].map() == std::vector<std::size_t>{0, 1, 2, 3});

  auto const d = DirectedDiagram::chain({z4, z2, z2}, {{0, 1, 0, 1}, {0, 1}});
  auto const c = colimit(d);
  CHECK(find_isomorphism(c.object, z2).has_value());
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = 0; j < d.size(); ++j) {
      if (d.leq(i, j)) {
        CHECK(compose(c.injections[j], d.arrow(i, j)).map() == c.injections[i].map());
      }
    }
  }
  auto const k = fixtures::k3();
  auto const kc = colimit(DirectedDiagram::chain({k, total_hyperstructure(2)}, {{0, 0, 0}}));
  CHECK(find_isomorphism(kc.object, total_hyperstructure(2)).has_value());
}

TEST_CASE("diamond diagram") {
  auto const t2 = total_hyperstructure(2);
  auto const z2 = cyclic_ring(2);
  auto const p  = fixtures::z2_times_total2();
  using Arrow = DirectedDiagram::Arrow;
  // Z2 -> Z2 x total2 (two ways, x -> (x,0)) -> Z2 x total2 -> total2
  DirectedDiagram d({z2, p, p, t2},
                    std::vector<Arrow>{{{0, 1}, {0, 2}}, {{0, 2}, {0, 2}}, {{1, 3}, {0, 0, 1, 1}}, {{2, 3}, {0, 0, 1, 1}}});
  CHECK(d.top() == 3);
  auto const c = colimit(d);
  CHECK(find_isomorphism(c.object, t2).has_value());
  CHECK(check_colimit_preservation(d, commutativity_identities()).isomorphism());
}

TEST_CASE("induced maps from cocones") {
  auto const z4 = cyclic_ring(4);
  auto const z2 = cyclic_ring(2);
  auto const d  = DirectedDiagram::chain({z4, z2}, {{0, 1, 0, 1}});
  auto const c  = colimit(d);
  std::vector<Homomorphism> const cocone{Homomorphism(z4, zero_ring(), {0, 0, 0, 0}),
                                         Homomorphism(z2, zero_ring(), {0, 0})};
  auto const u = induced_map(d, c, cocone);
  CHECK(u.is_homomorphism());
  std::vector<Homomorphism> const broken{Homomorphism(z4, z2, {0, 1, 0, 1}), Homomorphism(z2, z2, {1, 0})};
  CHECK_THROWS_AS(induced_map(d, c, broken), PreconditionError);
}

TEST_CASE("colimit preservation") {
  auto const ids = commutativity_identities();
  auto const z4 = cyclic_ring(4);
  auto const z2 = cyclic_ring(2);
  auto const single = check_colimit_preservation(DirectedDiagram({z4}, {}), ids);
  CHECK(single.isomorphism());
  CHECK(single.comparison == std::vector<std::size_t>{0, 1, 2, 3});
  auto const chain = check_colimit_preservation(DirectedDiagram::chain({z4, z2}, {{0, 1, 0, 1}}), ids);
  CHECK(chain.isomorphism());
  CHECK(find_isomorphism(chain.reflected_colimit, z2).has_value());
  auto const k = check_colimit_preservation(
      DirectedDiagram::chain({fixtures::k3(), total_hyperstructure(2)}, {{0, 0, 0}}), ids);
  CHECK(k.isomorphism());
  CHECK(k.reflected_colimit.size() == 1);
  CHECK(k.colimit_of_images.size() == 1);
}

TEST_CASE("isomorphism search") {
  auto const z4 = cyclic_ring(4);
  auto const id = find_isomorphism(z4, z4);
  REQUIRE(id.has_value());
  CHECK(*id == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK_FALSE(find_isomorphism(z4, cyclic_ring(2)).has_value());
  CHECK_FALSE(find_isomorphism(cyclic_ring(2), zero_ring()).has_value());
  CHECK_THROWS_AS(find_isomorphism(z4, fixtures::m3()), PreconditionError);
  // Z4 versus Z2 x Z2 as rings: same size, not isomorphic
  auto const klein = direct_product(cyclic_ring(2), cyclic_ring(2));
  CHECK_FALSE(find_isomorphism(z4, klein).has_value());
  // relabelled K3
  auto const k = fixtures::k3();
  std::vector<std::size_t> const perm{2, 0, 1};
  std::vector<Multialgebra::Table> tables;
  for (std::size_t op = 0; op < 2; ++op) {
    Multialgebra::Table t(9);
    for (std::size_t x = 0; x < 3; ++x) {
      for (std::size_t y = 0; y < 3; ++y) {
        Subset s;
        k.table(op)[x * 3 + y].for_each([&](std::size_t z) { s.insert(perm[z]); });
        t[perm[x] * 3 + perm[y]] = s;
      }
    }
    tables.push_back(t);
  }
  Multialgebra const relabelled(3, k.signature(), tables);
  auto const iso = find_isomorphism(k, relabelled);
  REQUIRE(iso.has_value());
  CHECK(check_homomorphism(k, relabelled, *iso).condition1_strict);
}
