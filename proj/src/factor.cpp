#include "multalg/factor.hpp"

#include "multalg/errors.hpp"

namespace multalg {

  Multialgebra factor(Multialgebra const& a, EquivRelation const& rho) {
    if (rho.size() != a.size()) {
      throw PreconditionError("partition of " + std::to_string(rho.size())
                              + " points is inconsistent with carrier of size "
                              + std::to_string(a.size()));
    }
    auto const blocks = rho.block_sets();
    auto const m      = blocks.size();

    std::vector<Multialgebra::Table> tables;
    std::vector<std::size_t>         args;
    std::vector<Subset>              arg_sets;
    for (std::size_t op = 0; op < a.signature().size(); ++op) {
      auto const k = a.arity(op);
      args.resize(k);
      arg_sets.resize(k);
      Multialgebra::Table table(tuple_count(m, k));
      for (std::size_t t = 0; t < table.size(); ++t) {
        decode_tuple(t, m, args);
        for (std::size_t i = 0; i < k; ++i) {
          arg_sets[i] = blocks[args[i]];
        }
        Subset out;
        lift(a, op, arg_sets).for_each([&](std::size_t b) { out.insert(rho.block_of(b)); });
        table[t] = out;
      }
      tables.push_back(std::move(table));
    }
    return Multialgebra(m, a.signature(), std::move(tables));
  }

  Homomorphism projection(Multialgebra const& a, EquivRelation const& rho) {
    return Homomorphism(a, factor(a, rho), rho.labels());
  }

}  // namespace multalg
