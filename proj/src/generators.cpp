#include "multalg/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <string>

#include "multalg/errors.hpp"

namespace multalg {

  namespace {
    Signature ring_signature() {
      return Signature({{"plus", 2}, {"times", 2}});
    }

    Multialgebra::Table lift_table(std::size_t n, std::vector<std::size_t> const& t) {
      if (t.size() != n * n) {
        throw PreconditionError("Cayley table must have n*n entries");
      }
      Multialgebra::Table out;
      out.reserve(t.size());
      for (auto x : t) {
        if (x >= n) {
          throw PreconditionError("Cayley table entry outside the carrier");
        }
        out.push_back(Subset::singleton(x));
      }
      return out;
    }
  }  // namespace

  Multialgebra total_hyperstructure(std::size_t n) {
    Multialgebra::Table t(n * n, Subset::full(n));
    return Multialgebra(n, ring_signature(), {t, t});
  }

  Multialgebra krasner_from_ring(std::size_t m, std::vector<std::size_t> const& units) {
    if (m < 2) {
      throw PreconditionError("modulus must be at least 2");
    }
    std::set<std::size_t> group;
    for (auto g : units) {
      if (std::gcd(g % m, m) != 1) {
        throw PreconditionError(std::to_string(g) + " is not a unit modulo "
                                + std::to_string(m));
      }
      group.insert(g % m);
    }
    if (!group.contains(1)) {
      throw PreconditionError("unit subgroup must contain 1");
    }
    for (auto g : group) {
      for (auto h : group) {
        if (!group.contains(g * h % m)) {
          throw PreconditionError("unit set is not closed under multiplication");
        }
      }
      // In a finite group, closure under multiplication gives inverses;
      // check anyway so a bad list is reported precisely.
      bool has_inverse = std::any_of(group.begin(), group.end(),
                                     [&](std::size_t h) { return g * h % m == 1; });
      if (!has_inverse) {
        throw PreconditionError("unit set is not closed under inverses");
      }
    }
    // Orbits ordered by least residue.
    std::vector<std::size_t> cls(m, m);
    std::size_t              classes = 0;
    for (std::size_t x = 0; x < m; ++x) {
      if (cls[x] != m) {
        continue;
      }
      for (auto g : group) {
        cls[g * x % m] = classes;
      }
      ++classes;
    }
    std::vector<std::size_t> rep(classes);
    for (std::size_t x = m; x-- > 0;) {
      rep[cls[x]] = x;
    }
    Multialgebra::Table add(classes * classes), mul(classes * classes);
    for (std::size_t i = 0; i < classes; ++i) {
      for (std::size_t j = 0; j < classes; ++j) {
        auto const x = rep[i], y = rep[j];
        for (auto g : group) {
          for (auto h : group) {
            add[i * classes + j].insert(cls[(g * x + h * y) % m]);
          }
        }
        mul[i * classes + j] = Subset::singleton(cls[x * y % m]);
      }
    }
    return Multialgebra(classes, ring_signature(), {std::move(add), std::move(mul)});
  }

  Multialgebra from_group(std::size_t n, std::vector<std::size_t> const& table) {
    return Multialgebra(n, Signature({{"plus", 2}}), {lift_table(n, table)});
  }

  Multialgebra from_ring(std::size_t n, std::vector<std::size_t> const& add, std::vector<std::size_t> const& mul) {
    return Multialgebra(n, ring_signature(), {lift_table(n, add), lift_table(n, mul)});
  }

  Multialgebra cyclic_group(std::size_t m) {
    std::vector<std::size_t> add(m * m);
    for (std::size_t x = 0; x < m; ++x) {
      for (std::size_t y = 0; y < m; ++y) {
        add[x * m + y] = (x + y) % m;
      }
    }
    return from_group(m, add);
  }

  Multialgebra cyclic_ring(std::size_t m) {
    std::vector<std::size_t> add(m * m), mul(m * m);
    for (std::size_t x = 0; x < m; ++x) {
      for (std::size_t y = 0; y < m; ++y) {
        add[x * m + y] = (x + y) % m;
        mul[x * m + y] = (x * y) % m;
      }
    }
    return from_ring(m, add, mul);
  }

  Multialgebra left_projection(std::size_t n) {
    std::vector<std::size_t> t(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        t[x * n + y] = x;
      }
    }
    return from_group(n, t);
  }

  Multialgebra direct_product(Multialgebra const& a, Multialgebra const& b) {
    if (!(a.signature() == b.signature())) {
      throw PreconditionError("direct product needs equal signatures");
    }
    auto const na = a.size(), nb = b.size(), n = na * nb;
    std::vector<Multialgebra::Table> tables;
    std::vector<std::size_t>         args, args_a, args_b;
    for (std::size_t op = 0; op < a.signature().size(); ++op) {
      auto const k = a.arity(op);
      args.resize(k);
      args_a.resize(k);
      args_b.resize(k);
      Multialgebra::Table t(tuple_count(n, k));
      for (std::size_t i = 0; i < t.size(); ++i) {
        decode_tuple(i, n, args);
        for (std::size_t j = 0; j < k; ++j) {
          args_a[j] = args[j] / nb;
          args_b[j] = args[j] % nb;
        }
        auto const sb = b.at(op, args_b);
        a.at(op, args_a).for_each([&](std::size_t x) {
          sb.for_each([&](std::size_t y) { t[i].insert(x * nb + y); });
        });
      }
      tables.push_back(std::move(t));
    }
    return Multialgebra(n, a.signature(), std::move(tables));
  }

  Multialgebra random_multialgebra(std::size_t      n,
                                   Signature const& signature,
                                   std::uint64_t    seed,
                                   unsigned         multi_percent) {
    // Raw engine output only: distribution objects are implementation
    // defined and would break cross-platform determinism.
    std::mt19937_64 rng(seed);
    auto            below = [&](std::uint64_t bound) { return rng() % bound; };
    std::vector<Multialgebra::Table> tables;
    for (auto const& op : signature) {
      Multialgebra::Table t(tuple_count(n, op.arity));
      for (auto& out : t) {
        if (below(100) < multi_percent) {
          auto const mask = 1 + below((std::uint64_t{1} << n) - 1);
          out             = Subset(static_cast<std::uint32_t>(mask));
        } else {
          out = Subset::singleton(below(n));
        }
      }
      tables.push_back(std::move(t));
    }
    return Multialgebra(n, signature, std::move(tables));
  }

}  // namespace multalg
