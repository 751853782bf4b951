#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace multalg {

  // Disjoint-set forest with path halving and union by size.
  class UnionFind {
   public:
    explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1), blocks_(n) {
      std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x) noexcept {
      while (parent_[x] != x) {
        x = parent_[x] = parent_[parent_[x]];
      }
      return x;
    }

    // Returns true if x and y were in different blocks.
    bool unite(std::size_t x, std::size_t y) noexcept {
      x = find(x);
      y = find(y);
      if (x == y) {
        return false;
      }
      if (size_[x] < size_[y]) {
        std::swap(x, y);
      }
      parent_[y] = x;
      size_[x] += size_[y];
      --blocks_;
      return true;
    }

    std::size_t size() const noexcept {
      return parent_.size();
    }
    std::size_t number_of_blocks() const noexcept {
      return blocks_;
    }

   private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> size_;
    std::size_t              blocks_;
  };

}  // namespace multalg
