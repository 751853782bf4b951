#include <catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "multalg/errors.hpp"
#include "multalg/factor.hpp"
#include "multalg/hyperstructures.hpp"
#include "multalg/relations.hpp"

using namespace multalg;

namespace {

  std::vector<fixtures::Named> hyperrings() {
    return {
        {"K3", fixtures::k3()},
        {"total2", total_hyperstructure(2)},
        {"total3", total_hyperstructure(3)},
        {"Z2", cyclic_ring(2)},
        {"Z4", cyclic_ring(4)},
        {"ltri", fixtures::ltri()},
        {"Z2xtotal2", fixtures::z2_times_total2()},
        {"krasner(4;1,3)", krasner_from_ring(4, {1, 3})},
        {"krasner(7;1,6)", krasner_from_ring(7, {1, 6})},
    };
  }

}  // namespace

TEST_CASE("hyperoperation laws") {
  auto const lp = check_hyperoperation(left_projection(2), "plus");
  CHECK(lp.associative);
  CHECK_FALSE(lp.reproducible);
  CHECK_FALSE(lp.hv_group());
  auto const t = check_hyperoperation(total_hyperstructure(2), "plus");
  CHECK(t.hypergroup());
  CHECK(t.commutative);
  CHECK_FALSE(t.single_valued);
  auto const z = check_hyperoperation(cyclic_group(3), "plus");
  CHECK(z.hypergroup());
  CHECK(z.single_valued);
}

TEST_CASE("axiom reports and their implications") {
  CHECK(check_axioms(fixtures::k3()).hyperring);
  CHECK(check_axioms(total_hyperstructure(2)).hyperring);
  CHECK(check_axioms(fixtures::ltri()).hyperring);
  CHECK_FALSE(check_axioms(fixtures::ltri()).times_weak_commutative);
  CHECK(check_axioms(krasner_from_ring(7, {1, 2, 4})).hyperring);
  CHECK(check_axioms(krasner_from_ring(13, {1, 3, 9})).hyperring);
  CHECK_THROWS_AS(check_axioms(left_projection(2)), PreconditionError);
  for (auto const& [name, a] : fixtures::all(30)) {
    if (!a.signature().find("plus") || !a.signature().find("times")) {
      continue;
    }
    INFO(name);
    auto const r = check_axioms(a);
    CHECK((!r.hyperring || r.hv_ring));
    CHECK((!r.hypergroup_plus || r.hv_group_plus));
    CHECK((!r.associative_plus || r.weak_associative_plus));
    CHECK((!r.associative_times || r.weak_associative_times));
    CHECK((!r.distributive || r.weak_distributive));
  }
}

TEST_CASE("divisions") {
  auto const k = derived_divisions(fixtures::k3(), "plus");
  // right[b * n + a] = b / a
  CHECK(k.right[0 * 3 + 1] == Subset::of({1}));
  auto const z = derived_divisions(cyclic_group(2), "plus");
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) {
      CHECK(z.right[b * 2 + a] == Subset::singleton((b + 2 - a) % 2));
    }
  }
  auto const t = derived_divisions(total_hyperstructure(2), "plus");
  for (auto s : t.left) {
    CHECK(s == Subset::of({0, 1}));
  }
  CHECK_THROWS_AS(derived_divisions(left_projection(2), "plus"), PreconditionError);
  auto const w = with_divisions(fixtures::k3(), "plus");
  CHECK(w.signature().size() == 4);
  CHECK(w.signature().find("plus_over").has_value());
}

TEST_CASE("division operations do not change E_ua") {
  std::vector<fixtures::Named> const groups = {
      {"K3+", reduct(fixtures::k3(), std::vector<std::string>{"plus"})},
      {"total3", total_hyperstructure(3)},
      {"Z4+", cyclic_group(4)},
      {"pairset3", fixtures::pair_set(3)},
      {"krasner7+", reduct(krasner_from_ring(7, {1, 2, 4}), std::vector<std::string>{"plus"})},
  };
  for (auto const& [name, a] : groups) {
    INFO(name);
    REQUIRE(check_hyperoperation(a, "plus").hypergroup());
    CHECK(enumerate_eua(a) == enumerate_eua(with_divisions(a, "plus")));
  }
}

TEST_CASE("definition pairs on K3 and Z2") {
  auto const k  = fixtures::k3();
  auto const d2 = alpha_pairs_def1(k, 2);
  CHECK(d2.contains(0, 2));
  CHECK(d2.contains(2, 0));
  auto const a2 = alpha0_pairs(k, 2);
  CHECK(a2.contains(0, 2));
  CHECK(a2.contains(2, 2));
  auto const d1 = alpha_pairs_def1(k, 1);
  CHECK(d1.equivalence_closure().is_diagonal());
  CHECK(alpha0_pairs(k, 1).empty());
  auto const z2 = cyclic_ring(2);
  CHECK(alpha_pairs_def1(z2, 4).equivalence_closure().is_diagonal());
  CHECK(alpha0_pairs(z2, 4).equivalence_closure().is_diagonal());
  auto const p0 = alpha_prime0_additive(k, 2);
  PairRelation expected(3);
  expected.insert_product(Subset::of({0, 2}), Subset::of({0, 2}));
  CHECK(expected.subset_of(p0));
  CHECK_THROWS_AS(alpha_pairs_def1(left_projection(2), 2), PreconditionError);
}

TEST_CASE("pair sets are sound at every cap") {
  for (auto const& [name, a] : hyperrings()) {
    INFO(name);
    auto const target = alpha_star_i(a, commutativity_identities());
    for (std::size_t s = 1; s <= 4; ++s) {
      CHECK(alpha_pairs_def1(a, s).subset_of(target));
      CHECK(alpha0_pairs(a, s).subset_of(target));
      CHECK(alpha_prime0_additive(a, s).subset_of(target));
    }
  }
}

TEST_CASE("commutative-fundamental relation of hyperrings") {
  auto const z2 = alpha_star_hyperring(cyclic_ring(2), HyperringStrategy::def1);
  CHECK(z2.relation.is_diagonal());
  CHECK(z2.converged_at == 1);
  for (auto strategy : {HyperringStrategy::def1, HyperringStrategy::adjacent}) {
    auto const k = alpha_star_hyperring(fixtures::k3(), strategy);
    CHECK(k.relation.is_total());
    REQUIRE(k.converged_at.has_value());
    CHECK(*k.converged_at <= 3);
    CHECK(alpha_star_hyperring(total_hyperstructure(2), strategy).relation.is_total());
    auto const l = alpha_star_hyperring(fixtures::ltri(), strategy);
    CHECK(l.relation.to_string() == "{{0,1},{2,3}}");
    CHECK(l.converged_at == 2);
  }
}

TEST_CASE("both characterizations converge to the generic relation") {
  for (auto const& [name, a] : hyperrings()) {
    INFO(name);
    auto const def1 = alpha_star_hyperring(a, HyperringStrategy::def1);
    auto const adj  = alpha_star_hyperring(a, HyperringStrategy::adjacent);
    CHECK(def1.converged_at.has_value());
    CHECK(adj.converged_at.has_value());
    CHECK(def1.sound);
    CHECK(adj.sound);
    CHECK(def1.relation == adj.relation);
    CHECK(def1.relation == def1.target);
    CHECK(check_commutative_ring(factor(a, def1.relation)).commutative_ring());
  }
}

TEST_CASE("ring check") {
  CHECK(check_commutative_ring(cyclic_ring(4)).commutative_ring());
  CHECK(check_commutative_ring(cyclic_ring(4)).zero == 0);
  auto const l = check_commutative_ring(fixtures::ltri());
  CHECK(l.single_valued);
  CHECK_FALSE(l.times_commutative);
  CHECK_FALSE(check_commutative_ring(fixtures::k3()).single_valued);
}

TEST_CASE("factors of H_v-rings by E_ua members are ring-shaped") {
  for (auto const& [name, a] : hyperrings()) {
    INFO(name);
    for (auto const& rho : enumerate_eua(a)) {
      auto const r = check_commutative_ring(factor(a, rho));
      CHECK(r.single_valued);
      CHECK(r.plus_associative);
      CHECK(r.times_associative);
      CHECK(r.distributive);
    }
  }
}
