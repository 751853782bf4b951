#pragma once

#include "multalg/equivalence.hpp"
#include "multalg/homomorphism.hpp"
#include "multalg/multialgebra.hpp"

namespace multalg {

  /// The factor multialgebra A/rho.  Element b of the result is block b of
  /// rho (blocks ordered by minimum element); the output at a tuple of
  /// blocks is the set of blocks meeting f(b0,...,bk-1) for bi ranging over
  /// the input blocks.
  Multialgebra factor(Multialgebra const& a, EquivRelation const& rho);

  // The canonical projection A -> A/rho.
  Homomorphism projection(Multialgebra const& a, EquivRelation const& rho);

}  // namespace multalg
