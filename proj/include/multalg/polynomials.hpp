#pragma once

#include <cstddef>
#include <vector>

#include "multalg/config.hpp"
#include "multalg/equivalence.hpp"
#include "multalg/errors.hpp"
#include "multalg/multialgebra.hpp"
#include "multalg/term.hpp"

namespace multalg {

  // Value table of a map P*(A) -> P*(A); entry i is the image of the subset
  // whose bitmask is i + 1.
  using PolyTable = std::vector<Subset>;

  inline std::size_t poly_table_size(std::size_t n) {
    return (std::size_t{1} << n) - 1;
  }

  /// A unary polynomial function of the power-set algebra together with the
  /// first generation path that produced it.
  struct UnaryPolyFunction {
    enum class Origin { constant, identity, operation };

    struct Witness {
      Origin                   origin = Origin::identity;
      std::size_t              index  = 0;  // element for constants, operation otherwise
      std::vector<std::size_t> args;        // indices of earlier functions
    };

    PolyTable values;
    Witness   witness;

    Subset operator()(Subset x) const {
      return values[x.bits() - 1];
    }
  };

  class SaturationCapExceeded : public GuardExceeded {
   public:
    SaturationCapExceeded(std::string const& what, std::size_t partial_size)
        : GuardExceeded(what), partial_size_(partial_size) {}

    std::size_t partial_size() const noexcept {
      return partial_size_;
    }

   private:
    std::size_t partial_size_;
  };

  /// The least set of maps P*(A) -> P*(A) containing the singleton constants
  /// and the identity and closed under pointwise application of every
  /// operation.  Functions are deduplicated by value table; order is
  /// constants, identity, then generation waves in lexicographic order of
  /// (operation, arguments).
  ///
  /// Throws GuardExceeded if the carrier is above
  /// limits.max_saturation_carrier, SaturationCapExceeded if more than
  /// limits.saturation_cap functions are generated.
  std::vector<UnaryPolyFunction> saturate_unary_polynomials(Multialgebra const& a,
                                                            Limits const& limits = {});

  /// Transitive closure of {(x, y) : x in p(q(a...)), y in p(r(a...)) or
  /// vice versa} over identities q = r of ids, unary polynomials p and
  /// singleton tuples.  An empty identity set is treated as {x0 = x0}.
  EquivRelation alpha_i_via_polynomials(Multialgebra const& a,
                                        IdentitySet const&  ids,
                                        Limits const&       limits = {});

  // Same, reusing an existing saturation of a.
  EquivRelation alpha_i_via_polynomials(Multialgebra const&                    a,
                                        IdentitySet const&                     ids,
                                        std::vector<UnaryPolyFunction> const& polys);

}  // namespace multalg
