#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "multalg/config.hpp"
#include "multalg/equivalence.hpp"
#include "multalg/kernels.hpp"
#include "multalg/multialgebra.hpp"
#include "multalg/pair_relation.hpp"
#include "multalg/term.hpp"

namespace multalg {

  // Laws of a single binary hyperoperation, each checked over all elements.
  struct HyperoperationReport {
    bool weak_associative = false;  // (ab)c ∩ a(bc) ≠ ∅
    bool associative      = false;  // (ab)c = a(bc)
    bool reproducible     = false;  // aA = Aa = A
    bool weak_commutative = false;  // ab ∩ ba ≠ ∅
    bool commutative      = false;  // ab = ba
    bool single_valued    = false;

    bool hv_group() const noexcept {
      return weak_associative && reproducible;
    }
    bool hypergroup() const noexcept {
      return associative && reproducible;
    }
  };

  HyperoperationReport check_hyperoperation(Multialgebra const& a, std::string const& symbol);

  struct AxiomReport {
    bool weak_associative_plus  = false;
    bool associative_plus       = false;
    bool reproducible_plus      = false;
    bool weak_associative_times = false;
    bool associative_times      = false;
    bool weak_distributive      = false;
    bool distributive           = false;
    bool hv_group_plus          = false;
    bool hypergroup_plus        = false;
    bool hv_ring                = false;
    bool hyperring              = false;
    bool plus_weak_commutative  = false;
    bool times_weak_commutative = false;
    // Not required by the ring-type definitions, reported for the
    // single-valued specialisations.
    bool plus_commutative     = false;
    bool times_commutative    = false;
    bool times_single_valued  = false;
  };

  /// Both binary symbols must exist; throws PreconditionError otherwise.
  AxiomReport check_axioms(Multialgebra const& a,
                           std::string const&  plus  = "plus",
                           std::string const&  times = "times");

  struct Divisions {
    Multialgebra::Table right;  // over(b, a) = b / a = {x : b ∈ x∘a}
    Multialgebra::Table left;   // under(a, b) = a \ b = {x : b ∈ a∘x}
  };

  // Throws PreconditionError if some quotient is empty (the operation is
  // not reproducible).
  Divisions derived_divisions(Multialgebra const& a, std::string const& symbol);

  // a with the two division operations appended as <symbol>_over and
  // <symbol>_under.
  Multialgebra with_divisions(Multialgebra const& a, std::string const& symbol);

  /// Pairs (x, y) with x in a sum of products of total size at most
  /// max_size and y in a variant with summands and factors permuted; the
  /// identity permutation is included, so the relation is reflexive on
  /// every value.  Requires a hyperring.
  PairRelation alpha_pairs_def1(Multialgebra const& a,
                                std::size_t         max_size,
                                std::string const&  plus  = "plus",
                                std::string const&  times = "times");

  /// Pairs from t × t' where t' differs from t by one adjacent swap of
  /// factors in a product or of two neighbouring summands.
  PairRelation alpha0_pairs(Multialgebra const& a,
                            std::size_t         max_size,
                            std::string const&  plus  = "plus",
                            std::string const&  times = "times");

  /// Pure sums z1 + ... + zm, m <= max_size, against the same sum with two
  /// neighbouring summands swapped.  Needs only the additive operation.
  PairRelation alpha_prime0_additive(Multialgebra const& a,
                                     std::size_t         max_size,
                                     std::string const&  plus = "plus");

  enum class HyperringStrategy { def1, adjacent };

  struct HyperringAlphaResult {
    EquivRelation              relation;   // closure at the last size tried
    EquivRelation              target;     // alpha_star_i with commutativity
    std::optional<std::size_t> converged_at;
    bool                       sound = true;  // relation ⊆ target at every size
  };

  /// Iterative deepening over expression size 1..max_size: the equivalence
  /// closure of the strategy's pairs is compared against the generic
  /// commutative-fundamental relation after each size.  Throws
  /// PreconditionError unless a is a hyperring.
  HyperringAlphaResult alpha_star_hyperring(Multialgebra const& a,
                                            HyperringStrategy   strategy,
                                            std::size_t         max_size = Limits{}.max_expression_size,
                                            std::string const&  plus     = "plus",
                                            std::string const&  times    = "times");

  // {x0+x1 = x1+x0, x0*x1 = x1*x0} in prefix syntax.
  IdentitySet commutativity_identities(std::string const& plus  = "plus",
                                       std::string const& times = "times");

  struct RingCheck {
    bool single_valued         = false;
    bool plus_associative      = false;
    bool plus_commutative      = false;
    bool times_associative     = false;
    bool times_commutative     = false;
    bool distributive          = false;
    std::optional<std::size_t> zero;
    bool additive_inverses     = false;

    bool commutative_ring() const noexcept {
      return single_valued && plus_associative && plus_commutative && times_associative
             && times_commutative && distributive && zero.has_value() && additive_inverses;
    }
  };

  RingCheck check_commutative_ring(Multialgebra const& a,
                                   std::string const&  plus  = "plus",
                                   std::string const&  times = "times");

}  // namespace multalg
