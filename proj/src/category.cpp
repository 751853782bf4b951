#include "multalg/category.hpp"

#include <set>
#include <string>

#include "multalg/errors.hpp"
#include "multalg/evaluation.hpp"
#include "multalg/factor.hpp"
#include "multalg/pair_relation.hpp"
#include "multalg/relations.hpp"

namespace multalg {

  EquivRelation kernel(Homomorphism const& h) {
    return EquivRelation::from_labels(h.map());
  }

  Homomorphism factor_through(Homomorphism const& h, EquivRelation const& rho) {
    if (rho.size() != h.source().size()) {
      throw PreconditionError("relation size does not match the source carrier");
    }
    if (!rho.refines(kernel(h))) {
      throw PreconditionError("relation is not contained in the kernel");
    }
    std::vector<std::size_t> map(rho.number_of_blocks());
    for (std::size_t b = 0; b < map.size(); ++b) {
      map[b] = h(rho.representative(b));
    }
    return Homomorphism(factor(h.source(), rho), h.target(), std::move(map));
  }

  bool Variety::contains(Multialgebra const& b) const {
    return b.signature() == signature && is_universal_algebra(b) &&
           check_identities(b, identities);
  }

  Reflection reflect(Multialgebra const& a, Variety const& v, Homomorphism const& h) {
    if (!(h.source() == a)) {
      throw PreconditionError("homomorphism does not start at the given algebra");
    }
    if (!v.contains(h.target())) {
      throw PreconditionError("target is not in the variety");
    }
    if (!h.is_homomorphism()) {
      throw PreconditionError("map is not a homomorphism");
    }
    auto const ker = kernel(h);
    if (!in_eua(a, ker)) {
      throw TheoremViolation("kernel of a homomorphism into a universal algebra is not in E_ua");
    }
    auto alpha = alpha_star_i(a, v.identities);
    if (!alpha.refines(ker)) {
      throw TheoremViolation("alpha*_I is not contained in the kernel " + ker.to_string());
    }
    auto induced = factor_through(h, alpha);
    if (!induced.report().condition1_strict) {
      throw TheoremViolation("induced map is not a homomorphism");
    }
    auto proj = projection(a, alpha);
    return Reflection{std::move(alpha), std::move(proj), std::move(induced)};
  }

  Homomorphism functor_on_morphism(Homomorphism const& h, IdentitySet const& ids) {
    if (!h.is_homomorphism()) {
      throw PreconditionError("map is not a homomorphism");
    }
    auto const& a  = h.source();
    auto const& b  = h.target();
    auto const  ra = alpha_star_i(a, ids);
    auto const  rb = alpha_star_i(b, ids);
    std::vector<std::size_t> map(ra.number_of_blocks());
    for (std::size_t x = 0; x < a.size(); ++x) {
      auto const y = rb.block_of(h(x));
      if (x == ra.representative(ra.block_of(x))) {
        map[ra.block_of(x)] = y;
      } else if (map[ra.block_of(x)] != y) {
        throw TheoremViolation("F_I(h) is not well defined");
      }
    }
    return Homomorphism(factor(a, ra), factor(b, rb), std::move(map));
  }

  DirectedDiagram::DirectedDiagram(std::vector<Multialgebra> objects,
                                   std::vector<Arrow> const& arrows)
      : objects_(std::move(objects)) {
    if (objects_.empty()) {
      throw PreconditionError("diagram has no objects");
    }
    auto const m = objects_.size();
    for (std::size_t i = 1; i < m; ++i) {
      if (!(objects_[i].signature() == objects_[0].signature())) {
        throw PreconditionError("diagram objects have different signatures");
      }
    }
    for (std::size_t i = 0; i < m; ++i) {
      arrows_.emplace(std::pair{i, i}, identity_homomorphism(objects_[i]));
    }
    for (auto const& [ij, map] : arrows) {
      auto const [i, j] = ij;
      if (i >= m || j >= m) {
        throw PreconditionError("arrow refers to an unknown object");
      }
      Homomorphism h(objects_[i], objects_[j], map);
      if (!h.is_homomorphism()) {
        throw PreconditionError("arrow " + std::to_string(i) + "<=" + std::to_string(j) +
                                " is not a homomorphism");
      }
      auto [it, inserted] = arrows_.emplace(ij, h);
      if (!inserted && it->second.map() != h.map()) {
        throw PreconditionError("conflicting arrows " + std::to_string(i) + "<=" +
                                std::to_string(j));
      }
    }
    validate();
  }

  void DirectedDiagram::validate() {
    auto const m = objects_.size();
    bool       grew = true;
    while (grew) {
      grew = false;
      std::vector<std::pair<std::pair<std::size_t, std::size_t>, Homomorphism>> fresh;
      for (auto const& [ij, h] : arrows_) {
        for (auto const& [jk, g] : arrows_) {
          if (jk.first != ij.second || ij.first == ij.second || jk.first == jk.second) {
            continue;
          }
          std::pair const ik{ij.first, jk.second};
          if (ik.first == ik.second) {
            throw PreconditionError("arrows form a cycle through object " +
                                    std::to_string(ik.first));
          }
          auto composite = compose(g, h);
          auto it        = arrows_.find(ik);
          if (it != arrows_.end()) {
            if (it->second.map() != composite.map()) {
              throw PreconditionError("diagram does not commute at " +
                                      std::to_string(ik.first) + "<=" +
                                      std::to_string(ik.second));
            }
          } else {
            fresh.emplace_back(ik, std::move(composite));
          }
        }
      }
      for (auto& [ik, h] : fresh) {
        auto [it, inserted] = arrows_.emplace(ik, h);
        if (!inserted && it->second.map() != h.map()) {
          throw PreconditionError("diagram does not commute at " + std::to_string(ik.first) +
                                  "<=" + std::to_string(ik.second));
        }
        grew = grew || inserted;
      }
    }
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        bool upper = false;
        for (std::size_t k = 0; k < m && !upper; ++k) {
          upper = leq(i, k) && leq(j, k);
        }
        if (!upper) {
          throw PreconditionError("objects " + std::to_string(i) + " and " + std::to_string(j) +
                                  " have no common upper bound");
        }
      }
    }
    for (std::size_t k = 0; k < m; ++k) {
      bool is_top = true;
      for (std::size_t i = 0; i < m && is_top; ++i) {
        is_top = leq(i, k);
      }
      if (is_top) {
        top_ = k;
        return;
      }
    }
    throw TheoremViolation("finite directed order without a maximum");
  }

  DirectedDiagram DirectedDiagram::chain(std::vector<Multialgebra>                    objects,
                                         std::vector<std::vector<std::size_t>> const& maps) {
    if (maps.size() + 1 != objects.size()) {
      throw PreconditionError("a chain of n objects needs n-1 maps");
    }
    std::vector<Arrow> arrows;
    for (std::size_t i = 0; i < maps.size(); ++i) {
      arrows.push_back({{i, i + 1}, maps[i]});
    }
    return DirectedDiagram(std::move(objects), arrows);
  }

  DirectedDiagram DirectedDiagram::image_under(IdentitySet const& ids) const {
    std::vector<Multialgebra> objects;
    objects.reserve(objects_.size());
    for (auto const& a : objects_) {
      objects.push_back(factor(a, alpha_star_i(a, ids)));
    }
    std::vector<Arrow> arrows;
    for (auto const& [ij, h] : arrows_) {
      if (ij.first == ij.second) {
        continue;
      }
      auto image = functor_on_morphism(h, ids);
      if (!image.is_homomorphism()) {
        throw TheoremViolation("F_I(h) is not a homomorphism");
      }
      arrows.push_back({ij, image.map()});
    }
    return DirectedDiagram(std::move(objects), arrows);
  }

}  // namespace multalg
