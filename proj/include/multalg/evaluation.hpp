#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "multalg/multialgebra.hpp"
#include "multalg/subset.hpp"
#include "multalg/term.hpp"

namespace multalg {

  /// A term resolved against one multialgebra, evaluated as a term function
  /// of the power-set algebra P*(A).  Symbol lookup and arity checks happen
  /// once, at construction.
  class TermEvaluator {
   public:
    // Throws PreconditionError for an unknown symbol or arity mismatch.
    TermEvaluator(Multialgebra const& a, Term const& t);

    // Throws PreconditionError if env is shorter than the term's variable
    // bound or holds an empty / out-of-range set.
    Subset operator()(std::span<Subset const> env) const;

    // No environment checks.
    Subset evaluate(std::span<Subset const> env) const;

    std::size_t variable_bound() const noexcept {
      return bound_;
    }

   private:
    struct Node {
      bool        is_variable;
      std::size_t index;        // variable index or operation index
      std::size_t first_child;  // children occupy [first_child, first_child + arity)
      std::size_t arity;
    };

    std::size_t build(Term const& t);
    Subset      eval_node(std::size_t node, std::span<Subset const> env) const;

    Multialgebra const* algebra_;
    std::vector<Node>   nodes_;
    std::vector<std::size_t> children_;
    std::size_t         root_  = 0;
    std::size_t         bound_ = 0;
  };

  Subset eval_term(Multialgebra const& a, Term const& t, std::span<Subset const> env);

  /// Strong mode: the two sides agree on every tuple of singleton arguments.
  /// Weak mode: they intersect on every such tuple.
  bool check_identity(Multialgebra const& a, Identity const& id);
  bool check_identity(Multialgebra const& a, Identity const& id, IdentityMode mode);

  // Every identity of the set, each in its own mode.
  bool check_identities(Multialgebra const& a, IdentitySet const& ids);

  // Calls f(env) for every tuple of singletons in A^arity, in lexicographic
  // order.
  template <typename Func>
  void for_each_singleton_tuple(std::size_t n, std::size_t arity, Func&& f) {
    std::vector<std::size_t> idx(arity);
    std::vector<Subset>      env(arity);
    auto const               count = tuple_count(n, arity);
    for (std::size_t t = 0; t < count; ++t) {
      decode_tuple(t, n, idx);
      for (std::size_t i = 0; i < arity; ++i) {
        env[i] = Subset::singleton(idx[i]);
      }
      f(std::span<Subset const>(env));
    }
  }

}  // namespace multalg
