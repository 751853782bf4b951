#pragma once

#include <span>
#include <vector>

#include "multalg/config.hpp"
#include "multalg/equivalence.hpp"
#include "multalg/multialgebra.hpp"
#include "multalg/pair_relation.hpp"
#include "multalg/term.hpp"

namespace multalg {

  // X ×× Y: every x in X is rho-related to every y in Y.
  bool doublebar(EquivRelation const& rho, Subset xs, Subset ys);

  /// True iff A/rho is a universal algebra.  Checked as: every output set
  /// lies in one block, and replacing a single argument by a related element
  /// never changes the block of the output.
  bool in_eua(Multialgebra const& a, EquivRelation const& rho);

  /// The least rho in E_ua(A) containing r.
  ///
  /// Worklist fixpoint over a union-find forest seeded with r.  Each pass
  /// merges every output set into one block and, for every operation,
  /// coordinate and tuple, merges the output with the output obtained by
  /// replacing that coordinate by its current block root.  Once a pass makes
  /// no merge, related arguments share a root, so the relation satisfies the
  /// single-coordinate condition; every merge is forced in any member of
  /// E_ua containing r, so the result is the least one.  The result is
  /// re-checked with in_eua.
  EquivRelation alpha_closure(Multialgebra const& a, PairRelation const& r);

  // alpha_closure(a, empty): the fundamental relation.
  EquivRelation fundamental(Multialgebra const& a);

  /// The union of q(a...) × r(a...) over all identities q = r of ids and all
  /// tuples of singletons.  The mode of each identity is ignored.
  PairRelation relation_ri(Multialgebra const& a, IdentitySet const& ids);

  // alpha_closure(a, relation_ri(a, ids)).
  EquivRelation alpha_star_i(Multialgebra const& a, IdentitySet const& ids);

  /// Every partition of the carrier lying in E_ua(A), in RGS order.  Throws
  /// GuardExceeded when the carrier exceeds limits.max_enumeration_carrier.
  std::vector<EquivRelation> enumerate_eua(Multialgebra const& a, Limits const& limits = {});

  // Meet of all members containing r; members must include the total
  // relation.
  EquivRelation least_member_containing(std::span<EquivRelation const> members,
                                        PairRelation const&            r);

  // Oracle route for alpha_closure via enumerate_eua.
  EquivRelation alpha_closure_by_enumeration(Multialgebra const& a,
                                             PairRelation const& r,
                                             Limits const&       limits = {});

}  // namespace multalg
