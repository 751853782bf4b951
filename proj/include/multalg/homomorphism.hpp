#pragma once

#include <cstddef>
#include <vector>

#include "multalg/multialgebra.hpp"

namespace multalg {

  struct HomomorphismReport {
    // h(f(a...)) ⊆ f(h(a)...) for every operation and tuple.
    bool condition1 = false;
    // Equality everywhere.
    bool condition1_strict = false;

    friend bool operator==(HomomorphismReport const&, HomomorphismReport const&) = default;
  };

  HomomorphismReport check_homomorphism(Multialgebra const&            source,
                                        Multialgebra const&            target,
                                        std::vector<std::size_t> const& map);

  /// A total map between multialgebras of the same signature, together with
  /// the result of checking the homomorphism conditions at construction.
  /// Construction does not require the condition to hold; operations that
  /// need a homomorphism check report().condition1 themselves.
  class Homomorphism {
   public:
    // Throws PreconditionError on signature mismatch, wrong map length or
    // an image outside the target.
    Homomorphism(Multialgebra source, Multialgebra target, std::vector<std::size_t> map);

    Multialgebra const& source() const noexcept {
      return source_;
    }
    Multialgebra const& target() const noexcept {
      return target_;
    }
    std::vector<std::size_t> const& map() const noexcept {
      return map_;
    }
    std::size_t operator()(std::size_t x) const {
      return map_[x];
    }
    HomomorphismReport const& report() const noexcept {
      return report_;
    }
    bool is_homomorphism() const noexcept {
      return report_.condition1;
    }
    bool is_bijective() const;

    Subset image(Subset s) const;

   private:
    Multialgebra             source_;
    Multialgebra             target_;
    std::vector<std::size_t> map_;
    HomomorphismReport       report_;
  };

  inline HomomorphismReport check_homomorphism(Homomorphism const& h) {
    return h.report();
  }

  Homomorphism identity_homomorphism(Multialgebra const& a);
  // The composite g ∘ h; requires h.target() == g.source().
  Homomorphism compose(Homomorphism const& g, Homomorphism const& h);

}  // namespace multalg
