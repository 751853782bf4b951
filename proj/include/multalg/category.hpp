#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "multalg/equivalence.hpp"
#include "multalg/homomorphism.hpp"
#include "multalg/multialgebra.hpp"
#include "multalg/term.hpp"

namespace multalg {

  // x ≡ y iff h(x) = h(y).
  EquivRelation kernel(Homomorphism const& h);

  /// The unique map h̄ : A/rho -> B with h̄ ∘ π = h, defined via block
  /// representatives.  Throws PreconditionError unless rho ⊆ ker h.  The
  /// homomorphism conditions of h̄ are recorded in its report.
  Homomorphism factor_through(Homomorphism const& h, EquivRelation const& rho);

  /// A variety of universal algebras given by strong identities.
  struct Variety {
    Signature   signature;
    IdentitySet identities;

    bool contains(Multialgebra const& b) const;
  };

  struct Reflection {
    EquivRelation relation;    // alpha*_I of the source
    Homomorphism  projection;  // A -> A/alpha*_I
    Homomorphism  induced;     // A/alpha*_I -> B
  };

  /// Factors a homomorphism h : A -> B, B in V, through the projection onto
  /// the I-fundamental algebra of A.  Throws PreconditionError when B is not
  /// in V or h fails condition (1); throws TheoremViolation if ker h is not
  /// in E_ua(A), alpha*_I is not contained in ker h, or the induced map is
  /// not a homomorphism of universal algebras.
  Reflection reflect(Multialgebra const& a, Variety const& v, Homomorphism const& h);

  /// F_I(h) : A/alpha*_I -> B/alpha*_I, the unique map with
  /// F_I(h) ∘ π_A = π_B ∘ h.
  Homomorphism functor_on_morphism(Homomorphism const& h, IdentitySet const& ids);

  /// A finite directed diagram of multialgebras.  Objects are 0..m-1; the
  /// order is the reflexive-transitive closure of the pairs for which arrows
  /// are supplied, and missing arrows are obtained by composition.  The
  /// constructor checks that the order is a directed partial order, that
  /// every arrow is a homomorphism, and that composites agree.
  class DirectedDiagram {
   public:
    using Arrow = std::pair<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>>;

    DirectedDiagram(std::vector<Multialgebra> objects, std::vector<Arrow> const& arrows);

    // A chain A0 -> A1 -> ... given by consecutive maps.
    static DirectedDiagram chain(std::vector<Multialgebra>              objects,
                                 std::vector<std::vector<std::size_t>> const& maps);

    std::size_t size() const noexcept {
      return objects_.size();
    }
    Multialgebra const& object(std::size_t i) const {
      return objects_[i];
    }
    bool leq(std::size_t i, std::size_t j) const {
      return arrows_.contains({i, j});
    }
    // Requires leq(i, j).
    Homomorphism const& arrow(std::size_t i, std::size_t j) const {
      return arrows_.at({i, j});
    }
    // The maximum of the order; exists because the order is finite and
    // directed.
    std::size_t top() const noexcept {
      return top_;
    }

    // The diagram of I-fundamental algebras and F_I images of the arrows.
    DirectedDiagram image_under(IdentitySet const& ids) const;

   private:
    DirectedDiagram() = default;
    void validate();

    std::vector<Multialgebra>                                     objects_;
    std::map<std::pair<std::size_t, std::size_t>, Homomorphism>   arrows_;
    std::size_t                                                   top_ = 0;
  };

  struct Colimit {
    Multialgebra              object;
    std::vector<Homomorphism> injections;
    // Offset of object i's elements in the disjoint union.
    std::vector<std::size_t>  offsets;
    // Class of each element of the disjoint union.
    std::vector<std::size_t>  class_of;
  };

  /// Disjoint union modulo (i,x) ~ (j,y) iff the two elements meet in some
  /// common upper object.  The operation at a tuple of classes is the union,
  /// over every object u in which all argument classes are represented and
  /// every choice of representatives there, of the classes of the outputs
  /// computed in u.  Injections satisfy condition (1) and commute with the
  /// arrows.
  Colimit colimit(DirectedDiagram const& d);

  /// The unique map from the colimit to B induced by a cocone
  /// g_i : D(i) -> B.  Throws PreconditionError if the cocone does not
  /// commute with the arrows.
  Homomorphism induced_map(DirectedDiagram const&           d,
                           Colimit const&                   c,
                           std::vector<Homomorphism> const& cocone);

  struct ColimitPreservationReport {
    Multialgebra             reflected_colimit;  // colim(D)/alpha*_I
    Multialgebra             colimit_of_images;  // colim(F_I ∘ D)
    std::vector<std::size_t> comparison;         // reflected_colimit -> colimit_of_images
    bool                     bijective       = false;
    bool                     condition1_strict = false;

    bool isomorphism() const noexcept {
      return bijective && condition1_strict;
    }
  };

  /// Builds the canonical comparison map colim(D)/alpha*_I -> colim(F_I ∘ D)
  /// from the cocone of F_I-images and checks that it is an isomorphism.
  ColimitPreservationReport check_colimit_preservation(DirectedDiagram const& d,
                                                       IdentitySet const&     ids);

  /// A bijection satisfying (1') if one exists.  Backtracking over elements
  /// in order with candidates pruned by per-element invariants; the first
  /// isomorphism in lexicographic order of the map is returned.  Throws
  /// PreconditionError on signature mismatch.
  std::optional<std::vector<std::size_t>> find_isomorphism(Multialgebra const& a,
                                                           Multialgebra const& b);

}  // namespace multalg
