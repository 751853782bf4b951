#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "multalg/subset.hpp"

namespace multalg {

  inline constexpr std::size_t kDefaultMaxArity = 3;

  struct Operation {
    std::string symbol;
    std::size_t arity = 0;

    friend bool operator==(Operation const&, Operation const&) = default;
  };

  /// Finite ordered list of operation symbols with arities.
  class Signature {
   public:
    Signature() = default;
    // Throws PreconditionError on duplicate symbols or an arity above
    // max_arity.
    explicit Signature(std::vector<Operation> ops,
                       std::size_t max_arity = kDefaultMaxArity);

    std::size_t size() const noexcept {
      return ops_.size();
    }
    bool empty() const noexcept {
      return ops_.empty();
    }
    Operation const& operator[](std::size_t i) const {
      return ops_[i];
    }
    auto begin() const noexcept {
      return ops_.begin();
    }
    auto end() const noexcept {
      return ops_.end();
    }

    std::optional<std::size_t> find(std::string_view symbol) const noexcept;
    // Like find, but throws PreconditionError for an unknown symbol.
    std::size_t index_of(std::string_view symbol) const;

    friend bool operator==(Signature const&, Signature const&) = default;

   private:
    std::vector<Operation> ops_;
  };

  // n^arity, the number of argument tuples of an arity-ary operation.
  std::size_t tuple_count(std::size_t n, std::size_t arity);

  // Tuples are numbered in lexicographic order, first argument most
  // significant.
  std::size_t encode_tuple(std::span<std::size_t const> args, std::size_t n);
  void decode_tuple(std::size_t index, std::size_t n, std::span<std::size_t> out);

  /// A finite multialgebra: carrier {0..n-1} and one dense table per
  /// operation, mapping every argument tuple to a nonempty output set.
  /// Immutable after construction.
  class Multialgebra {
   public:
    using Table = std::vector<Subset>;

    Multialgebra() = default;
    // Validates totality (table sizes), nonempty outputs and bounds.
    Multialgebra(std::size_t carrier_size,
                 Signature   signature,
                 std::vector<Table> tables);

    std::size_t size() const noexcept {
      return size_;
    }
    Signature const& signature() const noexcept {
      return signature_;
    }
    Table const& table(std::size_t op) const {
      return tables_[op];
    }
    std::size_t arity(std::size_t op) const {
      return signature_[op].arity;
    }
    Subset at(std::size_t op, std::span<std::size_t const> args) const {
      return tables_[op][encode_tuple(args, size_)];
    }
    Subset full() const noexcept {
      return Subset::full(size_);
    }

    friend bool operator==(Multialgebra const&, Multialgebra const&) = default;

   private:
    std::size_t        size_ = 0;
    Signature          signature_;
    std::vector<Table> tables_;
  };

  /// Operation of the power-set algebra: the union of f(a0,...,ak-1) over
  /// all ai in args[i].  Throws PreconditionError on unknown symbol, arity
  /// mismatch, or an empty / out-of-range argument.
  Subset lift_op(Multialgebra const&      a,
                 std::string_view         symbol,
                 std::span<Subset const>  args);

  // Same, by operation index, with no argument validation.
  Subset lift(Multialgebra const& a, std::size_t op, std::span<Subset const> args);

  inline Subset lift(Multialgebra const& a, std::size_t op, Subset x, Subset y) {
    Subset const args[2] = {x, y};
    return lift(a, op, args);
  }

  bool is_universal_algebra(Multialgebra const& a);

  // The reduct keeping only the named operations, in the given order.
  Multialgebra reduct(Multialgebra const& a, std::span<std::string const> symbols);

  // a extended with additional operations.
  Multialgebra extend(Multialgebra const&                 a,
                      std::vector<Operation> const&       ops,
                      std::vector<Multialgebra::Table>    tables);

}  // namespace multalg
