#include "multalg/pair_relation.hpp"

#include <algorithm>

namespace multalg {

  PairRelation PairRelation::from_pairs(
      std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> const& pairs) {
    PairRelation r(n);
    for (auto [x, y] : pairs) {
      r.insert(x, y);
    }
    return r;
  }

  PairRelation PairRelation::all_pairs(std::size_t n) {
    PairRelation r(n);
    std::fill(r.rows_.begin(), r.rows_.end(), Subset::full(n));
    return r;
  }

  PairRelation PairRelation::of(EquivRelation const& rho) {
    PairRelation r(rho.size());
    auto         sets = rho.block_sets();
    for (std::size_t x = 0; x < rho.size(); ++x) {
      r.rows_[x] = sets[rho.block_of(x)];
    }
    return r;
  }

  PairRelation& PairRelation::operator|=(PairRelation const& other) {
    for (std::size_t x = 0; x < rows_.size(); ++x) {
      rows_[x] |= other.rows_[x];
    }
    return *this;
  }

  bool PairRelation::empty() const noexcept {
    return std::all_of(rows_.begin(), rows_.end(), [](Subset s) { return s.empty(); });
  }

  std::size_t PairRelation::count() const noexcept {
    std::size_t c = 0;
    for (auto s : rows_) {
      c += s.size();
    }
    return c;
  }

  std::vector<std::pair<std::size_t, std::size_t>> PairRelation::pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t x = 0; x < rows_.size(); ++x) {
      rows_[x].for_each([&](std::size_t y) { out.emplace_back(x, y); });
    }
    return out;
  }

  bool PairRelation::subset_of(PairRelation const& other) const {
    for (std::size_t x = 0; x < rows_.size(); ++x) {
      if (!rows_[x].subset_of(other.rows_[x])) {
        return false;
      }
    }
    return true;
  }

  bool PairRelation::subset_of(EquivRelation const& rho) const {
    for (std::size_t x = 0; x < rows_.size(); ++x) {
      bool ok = true;
      rows_[x].for_each([&](std::size_t y) { ok = ok && rho.related(x, y); });
      if (!ok) {
        return false;
      }
    }
    return true;
  }

  EquivRelation PairRelation::equivalence_closure() const {
    UnionFind uf(rows_.size());
    for (std::size_t x = 0; x < rows_.size(); ++x) {
      rows_[x].for_each([&](std::size_t y) { uf.unite(x, y); });
    }
    return EquivRelation::from_union_find(uf);
  }

}  // namespace multalg
