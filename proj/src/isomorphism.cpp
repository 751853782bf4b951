#include <algorithm>
#include <functional>

#include "multalg/category.hpp"
#include "multalg/errors.hpp"

namespace multalg {

  namespace {

    // Per element: for every operation and argument position, the sorted
    // output sizes over tuples with the element in that position, then the
    // number of outputs containing the element.
    std::vector<std::vector<std::size_t>> invariants(Multialgebra const& a) {
      auto const                            n = a.size();
      std::vector<std::vector<std::size_t>> inv(n);
      std::vector<std::size_t>              args;
      for (std::size_t op = 0; op < a.signature().size(); ++op) {
        auto const k = a.arity(op);
        args.resize(k);
        std::vector<std::vector<std::size_t>> sizes(n * k);
        std::vector<std::size_t>              hits(n, 0);
        auto const&                           table = a.table(op);
        for (std::size_t t = 0; t < table.size(); ++t) {
          decode_tuple(t, n, args);
          for (std::size_t p = 0; p < k; ++p) {
            sizes[args[p] * k + p].push_back(table[t].size());
          }
          table[t].for_each([&](std::size_t y) { ++hits[y]; });
        }
        for (std::size_t x = 0; x < n; ++x) {
          for (std::size_t p = 0; p < k; ++p) {
            auto& s = sizes[x * k + p];
            std::sort(s.begin(), s.end());
            inv[x].insert(inv[x].end(), s.begin(), s.end());
          }
          inv[x].push_back(hits[x]);
        }
      }
      return inv;
    }

  }  // namespace

  std::optional<std::vector<std::size_t>> find_isomorphism(Multialgebra const& a,
                                                           Multialgebra const& b) {
    if (!(a.signature() == b.signature())) {
      throw PreconditionError("cannot compare multialgebras of different signatures");
    }
    auto const n = a.size();
    if (b.size() != n) {
      return std::nullopt;
    }
    auto const ia = invariants(a);
    auto const ib = invariants(b);

    auto const               none = n;
    std::vector<std::size_t> map(n, none);
    std::vector<std::size_t> inverse(n, none);
    std::vector<std::size_t> args;
    std::vector<std::size_t> image;

    // Checks every tuple over {0..x} that uses x.
    auto consistent = [&](std::size_t x) {
      for (std::size_t op = 0; op < a.signature().size(); ++op) {
        auto const k     = a.arity(op);
        auto const count = tuple_count(x + 1, k);
        args.resize(k);
        image.resize(k);
        for (std::size_t t = 0; t < count; ++t) {
          decode_tuple(t, x + 1, args);
          if (k > 0 && std::find(args.begin(), args.end(), x) == args.end()) {
            continue;
          }
          if (k == 0 && x != 0) {
            continue;
          }
          for (std::size_t p = 0; p < k; ++p) {
            image[p] = map[args[p]];
          }
          auto const fa = a.at(op, args);
          auto const fb = b.at(op, image);
          if (fa.size() != fb.size()) {
            return false;
          }
          bool ok = true;
          fa.for_each([&](std::size_t y) {
            if (map[y] != none && !fb.contains(map[y])) {
              ok = false;
            }
          });
          fb.for_each([&](std::size_t z) {
            if (inverse[z] != none && !fa.contains(inverse[z])) {
              ok = false;
            }
          });
          if (!ok) {
            return false;
          }
        }
      }
      return true;
    };

    std::function<bool(std::size_t)> extend = [&](std::size_t x) {
      if (x == n) {
        return check_homomorphism(a, b, map).condition1_strict;
      }
      for (std::size_t y = 0; y < n; ++y) {
        if (inverse[y] != none || ia[x] != ib[y]) {
          continue;
        }
        map[x]     = y;
        inverse[y] = x;
        if (consistent(x) && extend(x + 1)) {
          return true;
        }
        map[x]     = none;
        inverse[y] = none;
      }
      return false;
    };

    if (extend(0)) {
      return map;
    }
    return std::nullopt;
  }

}  // namespace multalg
