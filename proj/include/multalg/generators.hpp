#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "multalg/multialgebra.hpp"

namespace multalg {

  // (plus, times) with every output equal to the whole carrier.
  Multialgebra total_hyperstructure(std::size_t n);

  /// The quotient hyperring of Z/m by the orbits of a subgroup G of its
  /// units: class(x) + class(y) = {class(gx + hy) : g, h in G} and
  /// class(x) * class(y) = class(xy).  Classes are ordered by their least
  /// residue.  Throws PreconditionError unless G is a subgroup of the unit
  /// group of Z/m.
  Multialgebra krasner_from_ring(std::size_t m, std::vector<std::size_t> const& units);

  // Single binary operation "plus" from a Cayley table (row-major).
  Multialgebra from_group(std::size_t n, std::vector<std::size_t> const& table);
  // "plus" and "times" from two Cayley tables.
  Multialgebra from_ring(std::size_t                     n,
                         std::vector<std::size_t> const& add,
                         std::vector<std::size_t> const& mul);

  Multialgebra cyclic_group(std::size_t m);  // (Z/m, plus)
  Multialgebra cyclic_ring(std::size_t m);   // (Z/m, plus, times)

  // "plus" with x∘y = {x}.
  Multialgebra left_projection(std::size_t n);

  /// Componentwise product: (a, b) is encoded as a_index * |B| + b_index
  /// and outputs are products of the component output sets.
  Multialgebra direct_product(Multialgebra const& a, Multialgebra const& b);

  /// Random multialgebra: each output is a singleton, or with probability
  /// multi_percent/100 a random nonempty subset.  Deterministic for a given
  /// seed on every platform.
  Multialgebra random_multialgebra(std::size_t          n,
                                   Signature const&     signature,
                                   std::uint64_t        seed,
                                   unsigned             multi_percent = 25);

}  // namespace multalg
