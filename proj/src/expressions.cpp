#include <string>

#include "multalg/errors.hpp"
#include "multalg/hyperstructures.hpp"
#include "multalg/kernels.hpp"
#include "multalg/relations.hpp"

namespace multalg {

  namespace {

    void require_hyperring(Multialgebra const& a, std::string const& plus, std::string const& times) {
      if (!check_axioms(a, plus, times).hyperring) {
        throw PreconditionError("structure is not a hyperring");
      }
    }

    void require_size(std::size_t max_size) {
      if (max_size == 0) {
        throw PreconditionError("expression size cap must be at least 1");
      }
    }

    PairRelation sop_pairs_upto(Multialgebra const&   a,
                                std::size_t           max_size,
                                std::string const&    plus,
                                std::string const&    times,
                                kernels::SwapStrategy strategy) {
      require_size(max_size);
      require_hyperring(a, plus, times);
      auto const   p = a.signature().index_of(plus);
      auto const   t = a.signature().index_of(times);
      PairRelation r(a.size());
      for (std::size_t s = 1; s <= max_size; ++s) {
        r |= kernels::parallel::sum_of_products_pairs(a, p, t, s, strategy);
      }
      return r;
    }

  }  // namespace

  PairRelation alpha_pairs_def1(Multialgebra const& a,
                                std::size_t         max_size,
                                std::string const&  plus,
                                std::string const&  times) {
    return sop_pairs_upto(a, max_size, plus, times, kernels::SwapStrategy::all_permutations);
  }

  PairRelation alpha0_pairs(Multialgebra const& a,
                            std::size_t         max_size,
                            std::string const&  plus,
                            std::string const&  times) {
    return sop_pairs_upto(a, max_size, plus, times, kernels::SwapStrategy::adjacent);
  }

  PairRelation alpha_prime0_additive(Multialgebra const& a, std::size_t max_size, std::string const& plus) {
    require_size(max_size);
    auto const op = a.signature().index_of(plus);
    if (a.arity(op) != 2) {
      throw PreconditionError("operation '" + plus + "' must be binary");
    }
    PairRelation r(a.size());
    for (std::size_t s = 2; s <= max_size; ++s) {
      r |= kernels::parallel::additive_swap_pairs(a, op, s);
    }
    return r;
  }

  HyperringAlphaResult alpha_star_hyperring(Multialgebra const& a,
                                            HyperringStrategy   strategy,
                                            std::size_t         max_size,
                                            std::string const&  plus,
                                            std::string const&  times) {
    require_size(max_size);
    require_hyperring(a, plus, times);
    auto const p    = a.signature().index_of(plus);
    auto const t    = a.signature().index_of(times);
    auto const swap = strategy == HyperringStrategy::def1 ? kernels::SwapStrategy::all_permutations
                                                            : kernels::SwapStrategy::adjacent;

    HyperringAlphaResult result{EquivRelation::diagonal(a.size()),
                                alpha_star_i(a, commutativity_identities(plus, times)),
                                std::nullopt,
                                true};
    PairRelation pairs(a.size());
    for (std::size_t s = 1; s <= max_size; ++s) {
      pairs |= kernels::parallel::sum_of_products_pairs(a, p, t, s, swap);
      result.relation = pairs.equivalence_closure();
      result.sound    = result.sound && result.relation.refines(result.target);
      if (result.relation == result.target) {
        result.converged_at = s;
        break;
      }
    }
    return result;
  }

}  // namespace multalg
