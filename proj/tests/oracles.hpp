#pragma once

// Brute-force reference implementations written directly from the
// definitions.  They use only raw table lookups, never the library's
// lifting, closure or enumeration routines.

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "multalg/equivalence.hpp"
#include "multalg/multialgebra.hpp"
#include "multalg/term.hpp"

namespace oracle {

  using multalg::Multialgebra;
  using multalg::Subset;
  using Labels = std::vector<std::size_t>;

  inline std::vector<std::size_t> digits(std::size_t t, std::size_t n, std::size_t k) {
    std::vector<std::size_t> d(k);
    for (std::size_t i = k; i-- > 0;) {
      d[i] = t % n;
      t /= n;
    }
    return d;
  }

  inline std::size_t power(std::size_t n, std::size_t k) {
    std::size_t p = 1;
    for (std::size_t i = 0; i < k; ++i) {
      p *= n;
    }
    return p;
  }

  // Union of f(a0..ak-1) over ai in sets[i], scanning every tuple.
  inline Subset lift(Multialgebra const& a, std::size_t op, std::vector<Subset> const& sets) {
    auto const n = a.size();
    auto const k = a.arity(op);
    Subset     out;
    for (std::size_t t = 0; t < power(n, k); ++t) {
      auto const d  = digits(t, n, k);
      bool       in = true;
      for (std::size_t i = 0; i < k; ++i) {
        in = in && sets[i].contains(d[i]);
      }
      if (in) {
        out |= a.table(op)[t];
      }
    }
    return out;
  }

  inline Subset eval(Multialgebra const& a, multalg::Term const& t, std::vector<Subset> const& env) {
    if (t.is_variable()) {
      return env.at(t.variable_index());
    }
    auto const          op = a.signature().index_of(t.symbol());
    std::vector<Subset> args;
    for (auto const& s : t.args()) {
      args.push_back(eval(a, s, env));
    }
    return lift(a, op, args);
  }

  // Strong: equal on all singleton tuples; weak: intersecting.
  inline bool holds(Multialgebra const& a, multalg::Identity const& id, bool strong) {
    auto const n = a.size();
    auto const k = id.arity();
    for (std::size_t t = 0; t < power(n, k); ++t) {
      std::vector<Subset> env;
      for (auto x : digits(t, n, k)) {
        env.push_back(Subset::singleton(x));
      }
      auto const l = eval(a, id.lhs, env);
      auto const r = eval(a, id.rhs, env);
      if (strong ? !(l == r) : !l.intersects(r)) {
        return false;
      }
    }
    return true;
  }

  // Every set partition of {0..n-1} as a canonical labelling.
  inline std::vector<Labels> partitions(std::size_t n) {
    std::vector<Labels> out;
    Labels              cur(n, 0);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t used) {
      if (i == n) {
        out.push_back(cur);
        return;
      }
      for (std::size_t b = 0; b <= used; ++b) {
        cur[i] = b;
        rec(i + 1, b == used ? used + 1 : used);
      }
    };
    if (n > 0) {
      cur[0] = 0;
      rec(1, 1);
    }
    return out;
  }

  inline std::size_t blocks(Labels const& l) {
    std::size_t m = 0;
    for (auto x : l) {
      m = std::max(m, x + 1);
    }
    return m;
  }

  // Factor tables computed from the definition, without validation.
  // Returns nullopt when some factor output is not a single block.
  inline std::optional<Multialgebra> factor_if_universal(Multialgebra const& a, Labels const& l) {
    auto const                       n = a.size();
    auto const                       m = blocks(l);
    std::vector<Multialgebra::Table> tables;
    for (std::size_t op = 0; op < a.signature().size(); ++op) {
      auto const          k = a.arity(op);
      Multialgebra::Table table(power(m, k));
      for (std::size_t t = 0; t < power(n, k); ++t) {
        auto const  d  = digits(t, n, k);
        std::size_t bt = 0;
        for (auto x : d) {
          bt = bt * m + l[x];
        }
        a.table(op)[t].for_each([&](std::size_t y) { table[bt].insert(l[y]); });
      }
      for (auto const& s : table) {
        if (s.size() != 1) {
          return std::nullopt;
        }
      }
      tables.push_back(std::move(table));
    }
    return Multialgebra(m, a.signature(), std::move(tables));
  }

  inline bool in_eua(Multialgebra const& a, Labels const& l) {
    return factor_if_universal(a, l).has_value();
  }

  inline std::vector<Labels> eua(Multialgebra const& a) {
    std::vector<Labels> out;
    for (auto const& l : partitions(a.size())) {
      if (in_eua(a, l)) {
        out.push_back(l);
      }
    }
    return out;
  }

  inline bool refines(Labels const& fine, Labels const& coarse) {
    for (std::size_t x = 0; x < fine.size(); ++x) {
      for (std::size_t y = 0; y < fine.size(); ++y) {
        if (fine[x] == fine[y] && coarse[x] != coarse[y]) {
          return false;
        }
      }
    }
    return true;
  }

  inline bool contains_pairs(Labels const& l, std::vector<std::pair<std::size_t, std::size_t>> const& r) {
    for (auto [x, y] : r) {
      if (l[x] != l[y]) {
        return false;
      }
    }
    return true;
  }

  // The member of `family` refining all others, if any.
  inline std::optional<Labels> least(std::vector<Labels> const& family) {
    for (auto const& c : family) {
      bool ok = true;
      for (auto const& d : family) {
        ok = ok && refines(c, d);
      }
      if (ok) {
        return c;
      }
    }
    return std::nullopt;
  }

  inline std::optional<Labels> least_eua_containing(
      Multialgebra const& a, std::vector<std::pair<std::size_t, std::size_t>> const& r) {
    std::vector<Labels> family;
    for (auto const& l : eua(a)) {
      if (contains_pairs(l, r)) {
        family.push_back(l);
      }
    }
    return least(family);
  }

  // Least partition whose factor is a universal algebra satisfying ids.
  inline std::optional<Labels> least_satisfying(Multialgebra const& a, multalg::IdentitySet const& ids) {
    std::vector<Labels> family;
    for (auto const& l : partitions(a.size())) {
      auto f = factor_if_universal(a, l);
      if (!f) {
        continue;
      }
      bool ok = true;
      for (auto const& id : ids) {
        ok = ok && holds(*f, id, true);
      }
      if (ok) {
        family.push_back(l);
      }
    }
    return least(family);
  }

  // Condition (1): h(f(a...)) ⊆ f(h(a)...); strict: equality.
  inline std::pair<bool, bool> homomorphism(Multialgebra const&             s,
                                            Multialgebra const&             t,
                                            std::vector<std::size_t> const& h) {
    bool weak = true, strict = true;
    for (std::size_t op = 0; op < s.signature().size(); ++op) {
      auto const k = s.arity(op);
      for (std::size_t i = 0; i < power(s.size(), k); ++i) {
        auto const  d  = digits(i, s.size(), k);
        std::size_t ti = 0;
        for (auto x : d) {
          ti = ti * t.size() + h[x];
        }
        Subset img;
        s.table(op)[i].for_each([&](std::size_t y) { img.insert(h[y]); });
        auto const out = t.table(op)[ti];
        weak   = weak && img.subset_of(out);
        strict = strict && img == out;
      }
    }
    return {weak, strict};
  }

  // Every map s -> t satisfying condition (1).
  inline std::vector<std::vector<std::size_t>> homomorphisms(Multialgebra const& s, Multialgebra const& t) {
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t i = 0; i < power(t.size(), s.size()); ++i) {
      auto const h = digits(i, t.size(), s.size());
      if (homomorphism(s, t, h).first) {
        out.push_back(h);
      }
    }
    return out;
  }

}  // namespace oracle
