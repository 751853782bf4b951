#include "multalg/homomorphism.hpp"

#include <algorithm>

#include "multalg/errors.hpp"

namespace multalg {

  HomomorphismReport check_homomorphism(Multialgebra const&             source,
                                        Multialgebra const&             target,
                                        std::vector<std::size_t> const& map) {
    HomomorphismReport report{true, true};
    std::vector<std::size_t> args, images;
    for (std::size_t op = 0; op < source.signature().size(); ++op) {
      auto const k = source.arity(op);
      args.resize(k);
      images.resize(k);
      auto const& table = source.table(op);
      for (std::size_t t = 0; t < table.size(); ++t) {
        decode_tuple(t, source.size(), args);
        for (std::size_t i = 0; i < k; ++i) {
          images[i] = map[args[i]];
        }
        Subset image;
        table[t].for_each([&](std::size_t x) { image.insert(map[x]); });
        auto const expected = target.at(op, images);
        if (!image.subset_of(expected)) {
          return {false, false};
        }
        if (image != expected) {
          report.condition1_strict = false;
        }
      }
    }
    return report;
  }

  Homomorphism::Homomorphism(Multialgebra source, Multialgebra target, std::vector<std::size_t> map)
      : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
    if (!(source_.signature() == target_.signature())) {
      throw PreconditionError("homomorphism between multialgebras of different signatures");
    }
    if (map_.size() != source_.size()) {
      throw PreconditionError("map must be defined on every source element");
    }
    for (auto y : map_) {
      if (y >= target_.size()) {
        throw PreconditionError("map sends an element outside the target carrier");
      }
    }
    report_ = check_homomorphism(source_, target_, map_);
  }

  bool Homomorphism::is_bijective() const {
    if (source_.size() != target_.size()) {
      return false;
    }
    std::vector<bool> hit(target_.size(), false);
    for (auto y : map_) {
      if (hit[y]) {
        return false;
      }
      hit[y] = true;
    }
    return true;
  }

  Subset Homomorphism::image(Subset s) const {
    Subset out;
    s.for_each([&](std::size_t x) { out.insert(map_[x]); });
    return out;
  }

  Homomorphism identity_homomorphism(Multialgebra const& a) {
    std::vector<std::size_t> map(a.size());
    for (std::size_t x = 0; x < a.size(); ++x) {
      map[x] = x;
    }
    return Homomorphism(a, a, std::move(map));
  }

  Homomorphism compose(Homomorphism const& g, Homomorphism const& h) {
    if (!(h.target() == g.source())) {
      throw PreconditionError("cannot compose: codomain and domain differ");
    }
    std::vector<std::size_t> map(h.source().size());
    for (std::size_t x = 0; x < map.size(); ++x) {
      map[x] = g(h(x));
    }
    return Homomorphism(h.source(), g.target(), std::move(map));
  }

}  // namespace multalg
