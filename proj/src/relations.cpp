#include "multalg/relations.hpp"

#include <optional>
#include <string>

#include "multalg/errors.hpp"
#include "multalg/evaluation.hpp"
#include "multalg/kernels.hpp"

namespace multalg {

  bool doublebar(EquivRelation const& rho, Subset xs, Subset ys) {
    if (xs.empty() || ys.empty()) {
      return true;
    }
    return rho.within_one_block(xs | ys);
  }

  bool in_eua(Multialgebra const& a, EquivRelation const& rho) {
    if (rho.size() != a.size()) {
      throw PreconditionError("partition size does not match the carrier");
    }
    auto const               n = a.size();
    std::vector<std::size_t> out_block, args;
    for (std::size_t op = 0; op < a.signature().size(); ++op) {
      auto const& table = a.table(op);
      auto const  k     = a.arity(op);
      out_block.resize(table.size());
      for (std::size_t t = 0; t < table.size(); ++t) {
        if (!rho.within_one_block(table[t])) {
          return false;
        }
        out_block[t] = rho.block_of(table[t].min());
      }
      // Moving coordinate i to its block representative must not change the
      // output block.
      args.resize(k);
      for (std::size_t t = 0; t < table.size(); ++t) {
        decode_tuple(t, n, args);
        for (std::size_t i = 0; i < k; ++i) {
          auto const saved = args[i];
          args[i]          = rho.representative(rho.block_of(saved));
          if (out_block[encode_tuple(args, n)] != out_block[t]) {
            return false;
          }
          args[i] = saved;
        }
      }
    }
    return true;
  }

  EquivRelation alpha_closure(Multialgebra const& a, PairRelation const& r) {
    auto const n = a.size();
    if (r.carrier_size() != n) {
      throw PreconditionError("seed relation is over a different carrier");
    }
    UnionFind uf(n);
    for (auto [x, y] : r.pairs()) {
      uf.unite(x, y);
    }
    std::vector<std::size_t> args;
    bool                     changed = true;
    while (changed) {
      changed = false;
      for (std::size_t op = 0; op < a.signature().size(); ++op) {
        auto const& table = a.table(op);
        auto const  k     = a.arity(op);
        args.resize(k);
        for (std::size_t t = 0; t < table.size(); ++t) {
          auto const first = table[t].min();
          table[t].for_each([&](std::size_t x) { changed |= uf.unite(first, x); });
          decode_tuple(t, n, args);
          for (std::size_t i = 0; i < k; ++i) {
            auto const saved = args[i];
            args[i]          = uf.find(saved);
            if (args[i] != saved) {
              changed |= uf.unite(first, table[encode_tuple(args, n)].min());
            }
            args[i] = saved;
          }
        }
      }
    }
    auto result = EquivRelation::from_union_find(uf);
    if (!in_eua(a, result) || !r.subset_of(result)) {
      throw TheoremViolation("alpha_closure reached a fixpoint outside E_ua: "
                             + result.to_string());
    }
    return result;
  }

  EquivRelation fundamental(Multialgebra const& a) {
    return alpha_closure(a, PairRelation(a.size()));
  }

  PairRelation relation_ri(Multialgebra const& a, IdentitySet const& ids) {
    PairRelation r(a.size());
    for (auto const& id : ids) {
      TermEvaluator lhs(a, id.lhs), rhs(a, id.rhs);
      for_each_singleton_tuple(a.size(), id.arity(), [&](std::span<Subset const> env) {
        r.insert_product(lhs.evaluate(env), rhs.evaluate(env));
      });
    }
    return r;
  }

  EquivRelation alpha_star_i(Multialgebra const& a, IdentitySet const& ids) {
    return alpha_closure(a, relation_ri(a, ids));
  }

  std::vector<EquivRelation> enumerate_eua(Multialgebra const& a, Limits const& limits) {
    if (a.size() > limits.max_enumeration_carrier) {
      throw GuardExceeded("partition enumeration is limited to carriers of size "
                          + std::to_string(limits.max_enumeration_carrier)
                          + ", got " + std::to_string(a.size()));
    }
    auto const parts = all_partitions(a.size());
    auto const flags = kernels::parallel::eua_flags(a, parts);
    std::vector<EquivRelation> out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (flags[i] != 0) {
        out.push_back(parts[i]);
      }
    }
    return out;
  }

  EquivRelation least_member_containing(std::span<EquivRelation const> members,
                                        PairRelation const&            r) {
    std::optional<EquivRelation> meet;
    for (auto const& rho : members) {
      if (r.subset_of(rho)) {
        meet = meet ? meet->meet(rho) : rho;
      }
    }
    if (!meet) {
      throw PreconditionError("no member contains the seed relation");
    }
    return *meet;
  }

  EquivRelation alpha_closure_by_enumeration(Multialgebra const& a,
                                             PairRelation const& r,
                                             Limits const&       limits) {
    auto const members = enumerate_eua(a, limits);
    return least_member_containing(members, r);
  }

}  // namespace multalg
