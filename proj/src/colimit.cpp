#include <string>

#include "multalg/category.hpp"
#include "multalg/errors.hpp"
#include "multalg/factor.hpp"
#include "multalg/relations.hpp"
#include "multalg/union_find.hpp"

namespace multalg {

  Colimit colimit(DirectedDiagram const& d) {
    auto const               m = d.size();
    std::vector<std::size_t> offsets(m + 1, 0);
    for (std::size_t i = 0; i < m; ++i) {
      offsets[i + 1] = offsets[i] + d.object(i).size();
    }
    auto const total = offsets[m];
    UnionFind  uf(total);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        if (i == j || !d.leq(i, j)) {
          continue;
        }
        auto const& h = d.arrow(i, j);
        for (std::size_t x = 0; x < d.object(i).size(); ++x) {
          uf.unite(offsets[i] + x, offsets[j] + h(x));
        }
      }
    }

    std::vector<std::size_t> class_of(total);
    std::vector<std::size_t> root_class(total, total);
    std::size_t              classes = 0;
    for (std::size_t e = 0; e < total; ++e) {
      auto const r = uf.find(e);
      if (root_class[r] == total) {
        root_class[r] = classes++;
      }
      class_of[e] = root_class[r];
    }
    if (classes > kMaxCarrier) {
      throw PreconditionError("colimit carrier has " + std::to_string(classes) +
                              " elements, more than supported");
    }

    // members[u][c]: elements of object u in class c.
    std::vector<std::vector<Subset>> members(m, std::vector<Subset>(classes));
    for (std::size_t u = 0; u < m; ++u) {
      for (std::size_t x = 0; x < d.object(u).size(); ++x) {
        members[u][class_of[offsets[u] + x]].insert(x);
      }
    }

    auto const&                     sig = d.object(0).signature();
    std::vector<Multialgebra::Table> tables;
    std::vector<std::size_t>         args;
    std::vector<Subset>              sets;
    for (std::size_t op = 0; op < sig.size(); ++op) {
      auto const  k = sig[op].arity;
      auto const  count = tuple_count(classes, k);
      Multialgebra::Table table(count);
      args.resize(k);
      sets.resize(k);
      for (std::size_t t = 0; t < count; ++t) {
        decode_tuple(t, classes, args);
        Subset out;
        for (std::size_t u = 0; u < m; ++u) {
          bool represented = true;
          for (std::size_t p = 0; p < k && represented; ++p) {
            sets[p]     = members[u][args[p]];
            represented = !sets[p].empty();
          }
          if (!represented) {
            continue;
          }
          lift(d.object(u), op, sets).for_each(
              [&](std::size_t y) { out.insert(class_of[offsets[u] + y]); });
        }
        table[t] = out;
      }
      tables.push_back(std::move(table));
    }
    Multialgebra object(classes, sig, std::move(tables));

    std::vector<Homomorphism> injections;
    injections.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<std::size_t> map(d.object(i).size());
      for (std::size_t x = 0; x < map.size(); ++x) {
        map[x] = class_of[offsets[i] + x];
      }
      injections.emplace_back(d.object(i), object, std::move(map));
      if (!injections.back().is_homomorphism()) {
        throw TheoremViolation("colimit injection " + std::to_string(i) +
                               " is not a homomorphism");
      }
    }
    offsets.pop_back();
    return Colimit{std::move(object), std::move(injections), std::move(offsets),
                   std::move(class_of)};
  }

  Homomorphism induced_map(DirectedDiagram const&           d,
                           Colimit const&                   c,
                           std::vector<Homomorphism> const& cocone) {
    if (cocone.size() != d.size()) {
      throw PreconditionError("cocone has the wrong number of maps");
    }
    auto const& target = cocone[0].target();
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (!(cocone[i].source() == d.object(i)) || !(cocone[i].target() == target)) {
        throw PreconditionError("cocone map " + std::to_string(i) + " has the wrong ends");
      }
      for (std::size_t j = 0; j < d.size(); ++j) {
        if (i == j || !d.leq(i, j)) {
          continue;
        }
        auto const& h = d.arrow(i, j);
        for (std::size_t x = 0; x < d.object(i).size(); ++x) {
          if (cocone[j](h(x)) != cocone[i](x)) {
            throw PreconditionError("cocone does not commute at " + std::to_string(i) + "<=" +
                                    std::to_string(j));
          }
        }
      }
    }
    auto const               none = target.size();
    std::vector<std::size_t> map(c.object.size(), none);
    for (std::size_t i = 0; i < d.size(); ++i) {
      for (std::size_t x = 0; x < d.object(i).size(); ++x) {
        auto const cls = c.class_of[c.offsets[i] + x];
        auto const y   = cocone[i](x);
        if (map[cls] == none) {
          map[cls] = y;
        } else if (map[cls] != y) {
          throw TheoremViolation("cocone is not constant on a colimit class");
        }
      }
    }
    return Homomorphism(c.object, target, std::move(map));
  }

  ColimitPreservationReport check_colimit_preservation(DirectedDiagram const& d,
                                                       IdentitySet const&     ids) {
    auto const c     = colimit(d);
    auto const alpha = alpha_star_i(c.object, ids);
    auto const image = d.image_under(ids);
    auto const cy    = colimit(image);

    std::vector<Homomorphism> cocone;
    cocone.reserve(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
      auto const& a  = d.object(i);
      auto const  pi = projection(a, alpha_star_i(a, ids));
      cocone.push_back(compose(cy.injections[i], pi));
    }
    auto const phi = induced_map(d, c, cocone);
    if (!alpha.refines(kernel(phi))) {
      throw TheoremViolation("alpha*_I of the colimit is not contained in the comparison kernel");
    }
    auto const comparison = factor_through(phi, alpha);

    ColimitPreservationReport report{comparison.source(), cy.object, comparison.map()};
    report.bijective         = comparison.is_bijective();
    report.condition1_strict = comparison.report().condition1_strict;
    return report;
  }

}  // namespace multalg
