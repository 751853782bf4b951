#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "multalg/equivalence.hpp"
#include "multalg/subset.hpp"

namespace multalg {

  /// A binary relation on {0..n-1} with no closure properties assumed.
  /// Row x holds the set {y : (x, y) in R}.
  class PairRelation {
   public:
    PairRelation() = default;
    explicit PairRelation(std::size_t n) : rows_(n) {}

    static PairRelation from_pairs(std::size_t n,
                                   std::vector<std::pair<std::size_t, std::size_t>> const& pairs);
    static PairRelation all_pairs(std::size_t n);
    static PairRelation of(EquivRelation const& rho);

    std::size_t carrier_size() const noexcept {
      return rows_.size();
    }
    Subset row(std::size_t x) const {
      return rows_[x];
    }

    void insert(std::size_t x, std::size_t y) {
      rows_[x].insert(y);
    }
    // Adds X × Y.
    void insert_product(Subset xs, Subset ys) {
      xs.for_each([&](std::size_t x) { rows_[x] |= ys; });
    }
    PairRelation& operator|=(PairRelation const& other);

    bool contains(std::size_t x, std::size_t y) const {
      return rows_[x].contains(y);
    }
    bool empty() const noexcept;
    std::size_t count() const noexcept;
    std::vector<std::pair<std::size_t, std::size_t>> pairs() const;

    bool subset_of(PairRelation const& other) const;
    bool subset_of(EquivRelation const& rho) const;

    // Reflexive-symmetric-transitive closure.
    EquivRelation equivalence_closure() const;

    friend bool operator==(PairRelation const&, PairRelation const&) = default;

   private:
    std::vector<Subset> rows_;
  };

}  // namespace multalg
