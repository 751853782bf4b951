#pragma once

#include <compare>
#include <span>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "multalg/subset.hpp"
#include "multalg/union_find.hpp"

namespace multalg {

  /// An equivalence relation on {0..n-1}, stored canonically as a restricted
  /// growth string: label(x) is the index of x's block, blocks being numbered
  /// by increasing minimum element.  Two relations are equal iff their
  /// labels are; ordering by labels is lexicographic RGS order.
  class EquivRelation {
   public:
    EquivRelation() = default;

    static EquivRelation diagonal(std::size_t n);
    static EquivRelation total(std::size_t n);
    // Any labelling (equal labels = same block); canonicalised.
    static EquivRelation from_labels(std::span<std::size_t const> labels);
    // Throws PreconditionError unless blocks partition {0..n-1}.
    static EquivRelation from_blocks(std::size_t n,
                                     std::vector<std::vector<std::size_t>> const& blocks);
    static EquivRelation from_union_find(UnionFind& uf);
    // Parses "{{0,1},{2}}"; throws PreconditionError.
    static EquivRelation parse(std::string_view text, std::size_t n);

    std::size_t size() const noexcept {
      return labels_.size();
    }
    std::size_t number_of_blocks() const noexcept {
      return blocks_;
    }
    std::size_t block_of(std::size_t x) const {
      return labels_[x];
    }
    bool related(std::size_t x, std::size_t y) const {
      return labels_[x] == labels_[y];
    }
    std::vector<std::size_t> const& labels() const noexcept {
      return labels_;
    }

    // Members of each block, blocks ordered by minimum.
    std::vector<std::vector<std::size_t>> blocks() const;
    std::vector<Subset>                   block_sets() const;
    // Smallest element of block b.
    std::size_t representative(std::size_t b) const;

    // True iff every x in s lies in a single block; vacuous for empty s.
    bool within_one_block(Subset s) const;

    // this ⊆ other as sets of pairs.
    bool refines(EquivRelation const& other) const;
    bool is_diagonal() const noexcept {
      return blocks_ == labels_.size();
    }
    bool is_total() const noexcept {
      return blocks_ == 1;
    }

    EquivRelation meet(EquivRelation const& other) const;
    EquivRelation join(EquivRelation const& other) const;

    // The relation induced on the blocks of a coarser-or-equal `base`:
    // blocks B, C of base are related iff their elements are related here.
    // Requires base.refines(*this).
    EquivRelation over(EquivRelation const& base) const;

    std::string to_string() const;

    friend bool operator==(EquivRelation const&, EquivRelation const&) = default;
    friend auto operator<=>(EquivRelation const& a, EquivRelation const& b) {
      return a.labels_ <=> b.labels_;
    }

   private:
    explicit EquivRelation(std::vector<std::size_t> canonical_labels);

    std::vector<std::size_t> labels_;
    std::size_t              blocks_ = 0;
  };

  // All equivalence relations on n points in lexicographic RGS order.
  std::vector<EquivRelation> all_partitions(std::size_t n);

}  // namespace multalg
