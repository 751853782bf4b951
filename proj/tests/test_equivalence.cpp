#include <catch_amalgamated.hpp>

#include "multalg/equivalence.hpp"
#include "multalg/errors.hpp"
#include "multalg/pair_relation.hpp"
#include "oracles.hpp"

using namespace multalg;

TEST_CASE("partition counts are Bell numbers") {
  std::vector<std::size_t> const bell = {1, 2, 5, 15, 52, 203, 877};
  for (std::size_t n = 1; n <= bell.size(); ++n) {
    CHECK(all_partitions(n).size() == bell[n - 1]);
  }
}

TEST_CASE("partitions come in RGS order and match the oracle") {
  for (std::size_t n = 1; n <= 5; ++n) {
    auto const ps = all_partitions(n);
    auto const os = oracle::partitions(n);
    REQUIRE(ps.size() == os.size());
    for (std::size_t i = 0; i < ps.size(); ++i) {
      CHECK(ps[i].labels() == os[i]);
      if (i > 0) {
        CHECK(ps[i - 1] < ps[i]);
      }
    }
  }
}

TEST_CASE("canonical labels") {
  std::vector<std::size_t> const raw = {7, 3, 7, 1};
  auto const rho = EquivRelation::from_labels(raw);
  CHECK(rho.labels() == std::vector<std::size_t>{0, 1, 0, 2});
  CHECK(rho.to_string() == "{{0,2},{1},{3}}");
  CHECK(rho.number_of_blocks() == 3);
  CHECK(rho.representative(1) == 1);
  CHECK(rho.related(0, 2));
  CHECK_FALSE(rho.related(0, 1));
}

TEST_CASE("parse and from_blocks validate") {
  CHECK(EquivRelation::parse("{{0,1},{2}}", 3).to_string() == "{{0,1},{2}}");
  CHECK(EquivRelation::parse(" { {2} , {1,0} } ", 3).to_string() == "{{0,1},{2}}");
  CHECK_THROWS_AS(EquivRelation::parse("{{0,1}}", 3), PreconditionError);
  CHECK_THROWS_AS(EquivRelation::parse("{{0,1},{1,2}}", 3), PreconditionError);
  CHECK_THROWS_AS(EquivRelation::parse("{{0,3},{1,2}}", 3), PreconditionError);
  CHECK_THROWS_AS(EquivRelation::parse("{0,1,2}", 3), PreconditionError);
  CHECK_THROWS_AS(EquivRelation::from_blocks(2, {{0}, {}}), PreconditionError);
}

TEST_CASE("lattice operations") {
  auto const a = EquivRelation::parse("{{0,1},{2},{3}}", 4);
  auto const b = EquivRelation::parse("{{0},{1,2},{3}}", 4);
  CHECK(a.join(b).to_string() == "{{0,1,2},{3}}");
  CHECK(a.meet(b).is_diagonal());
  CHECK(a.refines(a.join(b)));
  CHECK_FALSE(a.refines(b));
  CHECK(EquivRelation::total(4).is_total());
  CHECK(EquivRelation::diagonal(4).refines(a));
}

TEST_CASE("meet and join agree with pairwise definitions") {
  auto const ps = all_partitions(4);
  for (auto const& a : ps) {
    for (auto const& b : ps) {
      auto const m = a.meet(b);
      auto const j = a.join(b);
      for (std::size_t x = 0; x < 4; ++x) {
        for (std::size_t y = 0; y < 4; ++y) {
          CHECK(m.related(x, y) == (a.related(x, y) && b.related(x, y)));
        }
      }
      CHECK(a.refines(j));
      CHECK(b.refines(j));
      for (auto const& c : ps) {
        if (a.refines(c) && b.refines(c)) {
          CHECK(j.refines(c));
        }
      }
    }
  }
}

TEST_CASE("induced relation on blocks") {
  auto const base = EquivRelation::parse("{{0,1},{2},{3}}", 4);
  auto const rho  = EquivRelation::parse("{{0,1,3},{2}}", 4);
  auto const q    = rho.over(base);
  REQUIRE(q.size() == 3);
  CHECK(q.to_string() == "{{0,2},{1}}");
  CHECK_THROWS_AS(base.over(rho), PreconditionError);
}

TEST_CASE("within one block") {
  auto const rho = EquivRelation::parse("{{0,1},{2}}", 3);
  CHECK(rho.within_one_block(Subset::of({0, 1})));
  CHECK_FALSE(rho.within_one_block(Subset::of({1, 2})));
  CHECK(rho.within_one_block(Subset{}));
}

TEST_CASE("pair relations and their equivalence closure") {
  auto r = PairRelation::from_pairs(5, {{0, 1}, {1, 2}, {4, 3}});
  CHECK(r.count() == 3);
  CHECK(r.contains(4, 3));
  CHECK_FALSE(r.contains(3, 4));
  CHECK(r.equivalence_closure().to_string() == "{{0,1,2},{3,4}}");
  CHECK(PairRelation(3).equivalence_closure().is_diagonal());
  CHECK(PairRelation(3).empty());
  r.insert_product(Subset::of({0}), Subset::of({3}));
  CHECK(r.equivalence_closure().number_of_blocks() == 1);
  auto const rho = EquivRelation::parse("{{0,1,2},{3,4}}", 5);
  CHECK(PairRelation::from_pairs(5, {{0, 2}, {4, 3}}).subset_of(rho));
  CHECK_FALSE(PairRelation::from_pairs(5, {{0, 3}}).subset_of(rho));
  CHECK(PairRelation::of(rho).count() == 13);
  CHECK(PairRelation::all_pairs(3).count() == 9);
}
