#include "multalg/equivalence.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "multalg/errors.hpp"

namespace multalg {

  namespace {
    constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();
  }

  EquivRelation::EquivRelation(std::vector<std::size_t> canonical_labels)
      : labels_(std::move(canonical_labels)) {
    blocks_ = labels_.empty() ? 0 : *std::max_element(labels_.begin(), labels_.end()) + 1;
  }

  EquivRelation EquivRelation::diagonal(std::size_t n) {
    std::vector<std::size_t> labels(n);
    for (std::size_t i = 0; i < n; ++i) {
      labels[i] = i;
    }
    return EquivRelation(std::move(labels));
  }

  EquivRelation EquivRelation::total(std::size_t n) {
    return EquivRelation(std::vector<std::size_t>(n, 0));
  }

  EquivRelation EquivRelation::from_labels(std::span<std::size_t const> labels) {
    std::vector<std::size_t> canonical(labels.size());
    std::vector<std::pair<std::size_t, std::size_t>> seen;  // (label, block)
    std::size_t next = 0;
    for (std::size_t x = 0; x < labels.size(); ++x) {
      auto it = std::find_if(seen.begin(), seen.end(),
                             [&](auto const& p) { return p.first == labels[x]; });
      if (it == seen.end()) {
        seen.emplace_back(labels[x], next);
        canonical[x] = next++;
      } else {
        canonical[x] = it->second;
      }
    }
    return EquivRelation(std::move(canonical));
  }

  EquivRelation EquivRelation::from_blocks(std::size_t n,
                                           std::vector<std::vector<std::size_t>> const& blocks) {
    std::vector<std::size_t> labels(n, kUnset);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (blocks[b].empty()) {
        throw PreconditionError("partition has an empty block");
      }
      for (auto x : blocks[b]) {
        if (x >= n) {
          throw PreconditionError("partition element " + std::to_string(x)
                                  + " is outside the carrier of size "
                                  + std::to_string(n));
        }
        if (labels[x] != kUnset) {
          throw PreconditionError("element " + std::to_string(x)
                                  + " occurs in two blocks");
        }
        labels[x] = b;
      }
    }
    for (std::size_t x = 0; x < n; ++x) {
      if (labels[x] == kUnset) {
        throw PreconditionError("element " + std::to_string(x)
                                + " is not covered by the partition");
      }
    }
    return from_labels(labels);
  }

  EquivRelation EquivRelation::from_union_find(UnionFind& uf) {
    std::vector<std::size_t> roots(uf.size());
    for (std::size_t x = 0; x < uf.size(); ++x) {
      roots[x] = uf.find(x);
    }
    return from_labels(roots);
  }

  EquivRelation EquivRelation::parse(std::string_view text, std::size_t n) {
    std::vector<std::vector<std::size_t>> blocks;
    std::size_t                           pos = 0;
    auto skip = [&] {
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
        ++pos;
      }
    };
    auto expect = [&](char c) {
      skip();
      if (pos >= text.size() || text[pos] != c) {
        throw PreconditionError("malformed partition '" + std::string(text)
                                + "': expected '" + c + "' at offset "
                                + std::to_string(pos));
      }
      ++pos;
    };
    auto peek = [&]() -> char {
      skip();
      return pos < text.size() ? text[pos] : '\0';
    };
    expect('{');
    if (peek() != '}') {
      while (true) {
        expect('{');
        std::vector<std::size_t> block;
        while (true) {
          skip();
          std::size_t start = pos;
          while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            ++pos;
          }
          if (start == pos) {
            throw PreconditionError("malformed partition '" + std::string(text)
                                    + "': expected an element index at offset "
                                    + std::to_string(pos));
          }
          block.push_back(std::stoul(std::string(text.substr(start, pos - start))));
          if (peek() == ',') {
            ++pos;
            continue;
          }
          break;
        }
        expect('}');
        blocks.push_back(std::move(block));
        if (peek() == ',') {
          ++pos;
          continue;
        }
        break;
      }
    }
    expect('}');
    skip();
    if (pos != text.size()) {
      throw PreconditionError("trailing characters after partition '"
                              + std::string(text) + "'");
    }
    return from_blocks(n, blocks);
  }

  std::vector<std::vector<std::size_t>> EquivRelation::blocks() const {
    std::vector<std::vector<std::size_t>> out(blocks_);
    for (std::size_t x = 0; x < labels_.size(); ++x) {
      out[labels_[x]].push_back(x);
    }
    return out;
  }

  std::vector<Subset> EquivRelation::block_sets() const {
    std::vector<Subset> out(blocks_);
    for (std::size_t x = 0; x < labels_.size(); ++x) {
      out[labels_[x]].insert(x);
    }
    return out;
  }

  std::size_t EquivRelation::representative(std::size_t b) const {
    // Canonical labels make the first occurrence of b its minimum.
    return static_cast<std::size_t>(
        std::find(labels_.begin(), labels_.end(), b) - labels_.begin());
  }

  bool EquivRelation::within_one_block(Subset s) const {
    if (s.empty()) {
      return true;
    }
    auto const b  = labels_[s.min()];
    bool       ok = true;
    s.for_each([&](std::size_t x) { ok = ok && labels_[x] == b; });
    return ok;
  }

  bool EquivRelation::refines(EquivRelation const& other) const {
    // Each block of *this must map into one block of other.
    std::vector<std::size_t> image(blocks_, kUnset);
    for (std::size_t x = 0; x < labels_.size(); ++x) {
      auto& img = image[labels_[x]];
      if (img == kUnset) {
        img = other.labels_[x];
      } else if (img != other.labels_[x]) {
        return false;
      }
    }
    return true;
  }

  EquivRelation EquivRelation::meet(EquivRelation const& other) const {
    std::vector<std::size_t> labels(labels_.size());
    for (std::size_t x = 0; x < labels_.size(); ++x) {
      labels[x] = labels_[x] * other.blocks_ + other.labels_[x];
    }
    return from_labels(labels);
  }

  EquivRelation EquivRelation::join(EquivRelation const& other) const {
    UnionFind uf(labels_.size());
    for (auto const* rel : {this, &other}) {
      std::vector<std::size_t> first(rel->blocks_, kUnset);
      for (std::size_t x = 0; x < labels_.size(); ++x) {
        auto& f = first[rel->labels_[x]];
        if (f == kUnset) {
          f = x;
        } else {
          uf.unite(f, x);
        }
      }
    }
    return from_union_find(uf);
  }

  EquivRelation EquivRelation::over(EquivRelation const& base) const {
    if (!base.refines(*this)) {
      throw PreconditionError("quotient relation requires the base relation "
                              "to refine it");
    }
    std::vector<std::size_t> labels(base.blocks_);
    for (std::size_t x = 0; x < labels_.size(); ++x) {
      labels[base.labels_[x]] = labels_[x];
    }
    return from_labels(labels);
  }

  std::string EquivRelation::to_string() const {
    std::string out = "{";
    auto        bs  = blocks();
    for (std::size_t b = 0; b < bs.size(); ++b) {
      if (b > 0) {
        out += ',';
      }
      out += '{';
      for (std::size_t i = 0; i < bs[b].size(); ++i) {
        if (i > 0) {
          out += ',';
        }
        out += std::to_string(bs[b][i]);
      }
      out += '}';
    }
    out += '}';
    return out;
  }

  std::vector<EquivRelation> all_partitions(std::size_t n) {
    std::vector<EquivRelation> out;
    if (n == 0) {
      out.push_back(EquivRelation::from_labels(std::vector<std::size_t>{}));
      return out;
    }
    // Restricted growth strings a[0] = 0, a[i] <= 1 + max(a[0..i-1]),
    // generated in lexicographic order.
    std::vector<std::size_t> a(n, 0), mx(n, 0);
    while (true) {
      out.push_back(EquivRelation::from_labels(a));
      std::size_t i = n - 1;
      while (i > 0 && a[i] == mx[i - 1] + 1) {
        --i;
      }
      if (i == 0) {
        return out;
      }
      ++a[i];
      mx[i] = std::max(mx[i - 1], a[i]);
      for (std::size_t j = i + 1; j < n; ++j) {
        a[j] = 0;
        mx[j] = mx[i];
      }
    }
  }

}  // namespace multalg
