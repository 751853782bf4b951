#include "multalg/hyperstructures.hpp"

#include "multalg/errors.hpp"

namespace multalg {

  namespace {

    std::size_t binary_op(Multialgebra const& a, std::string const& symbol) {
      auto const op = a.signature().index_of(symbol);
      if (a.arity(op) != 2) {
        throw PreconditionError("operation '" + symbol + "' must be binary");
      }
      return op;
    }

    Subset single(std::size_t x) {
      return Subset::singleton(x);
    }

    struct Distributivity {
      bool weak   = true;
      bool strong = true;
    };

    Distributivity check_distributivity(Multialgebra const& a, std::size_t plus, std::size_t times) {
      Distributivity d;
      auto const     n = a.size();
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          for (std::size_t z = 0; z < n; ++z) {
            auto const sum = lift(a, plus, single(y), single(z));
            // x(y+z) against xy+xz, and (y+z)x against yx+zx
            auto const l1 = lift(a, times, single(x), sum);
            auto const r1 = lift(a, plus, lift(a, times, single(x), single(y)),
                                 lift(a, times, single(x), single(z)));
            auto const l2 = lift(a, times, sum, single(x));
            auto const r2 = lift(a, plus, lift(a, times, single(y), single(x)),
                                 lift(a, times, single(z), single(x)));
            d.weak   = d.weak && l1.intersects(r1) && l2.intersects(r2);
            d.strong = d.strong && l1 == r1 && l2 == r2;
          }
        }
      }
      return d;
    }

  }  // namespace

  HyperoperationReport check_hyperoperation(Multialgebra const& a, std::string const& symbol) {
    auto const           op = binary_op(a, symbol);
    auto const           n  = a.size();
    HyperoperationReport r{true, true, true, true, true, true};
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        auto const xy = lift(a, op, single(x), single(y));
        auto const yx = lift(a, op, single(y), single(x));
        r.single_valued    = r.single_valued && xy.size() == 1;
        r.weak_commutative = r.weak_commutative && xy.intersects(yx);
        r.commutative      = r.commutative && xy == yx;
        for (std::size_t z = 0; z < n; ++z) {
          auto const left  = lift(a, op, xy, single(z));
          auto const right = lift(a, op, single(x), lift(a, op, single(y), single(z)));
          r.weak_associative = r.weak_associative && left.intersects(right);
          r.associative      = r.associative && left == right;
        }
      }
      auto const whole = a.full();
      r.reproducible   = r.reproducible && lift(a, op, single(x), whole) == whole
                       && lift(a, op, whole, single(x)) == whole;
    }
    return r;
  }

  AxiomReport check_axioms(Multialgebra const& a, std::string const& plus, std::string const& times) {
    auto const p  = binary_op(a, plus);
    auto const t  = binary_op(a, times);
    auto const hp = check_hyperoperation(a, plus);
    auto const ht = check_hyperoperation(a, times);
    auto const d  = check_distributivity(a, p, t);

    AxiomReport r;
    r.weak_associative_plus  = hp.weak_associative;
    r.associative_plus       = hp.associative;
    r.reproducible_plus      = hp.reproducible;
    r.weak_associative_times = ht.weak_associative;
    r.associative_times      = ht.associative;
    r.weak_distributive      = d.weak;
    r.distributive           = d.strong;
    r.hv_group_plus          = hp.hv_group();
    r.hypergroup_plus        = hp.hypergroup();
    r.hv_ring                = hp.hv_group() && ht.weak_associative && d.weak;
    r.hyperring              = hp.hypergroup() && ht.associative && d.strong;
    r.plus_weak_commutative  = hp.weak_commutative;
    r.times_weak_commutative = ht.weak_commutative;
    r.plus_commutative       = hp.commutative;
    r.times_commutative      = ht.commutative;
    r.times_single_valued    = ht.single_valued;
    return r;
  }

  Divisions derived_divisions(Multialgebra const& a, std::string const& symbol) {
    auto const op = binary_op(a, symbol);
    auto const n  = a.size();
    Divisions  d{Multialgebra::Table(n * n), Multialgebra::Table(n * n)};
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        a.table(op)[x * n + y].for_each([&](std::size_t b) {
          d.right[b * n + y].insert(x);  // b ∈ x∘y  =>  x ∈ b/y
          d.left[x * n + b].insert(y);   // b ∈ x∘y  =>  y ∈ x\b
        });
      }
    }
    for (std::size_t i = 0; i < n * n; ++i) {
      if (d.right[i].empty() || d.left[i].empty()) {
        throw PreconditionError("operation '" + symbol
                                + "' is not reproducible: a quotient is empty");
      }
    }
    return d;
  }

  Multialgebra with_divisions(Multialgebra const& a, std::string const& symbol) {
    auto d = derived_divisions(a, symbol);
    return extend(a, {{symbol + "_over", 2}, {symbol + "_under", 2}},
                  {std::move(d.right), std::move(d.left)});
  }

  IdentitySet commutativity_identities(std::string const& plus, std::string const& times) {
    auto comm = [](std::string const& s) {
      return Identity{Term::apply(s, {Term::variable(0), Term::variable(1)}),
                      Term::apply(s, {Term::variable(1), Term::variable(0)}),
                      IdentityMode::strong};
    };
    return {comm(plus), comm(times)};
  }

  RingCheck check_commutative_ring(Multialgebra const& a, std::string const& plus, std::string const& times) {
    auto const p  = binary_op(a, plus);
    auto const t  = binary_op(a, times);
    auto const hp = check_hyperoperation(a, plus);
    auto const ht = check_hyperoperation(a, times);
    auto const n  = a.size();

    RingCheck r;
    r.single_valued     = is_universal_algebra(a);
    r.plus_associative  = hp.associative;
    r.plus_commutative  = hp.commutative;
    r.times_associative = ht.associative;
    r.times_commutative = ht.commutative;
    r.distributive      = check_distributivity(a, p, t).strong;
    if (!r.single_valued) {
      return r;
    }
    for (std::size_t z = 0; z < n && !r.zero; ++z) {
      bool neutral = true;
      for (std::size_t x = 0; x < n; ++x) {
        neutral = neutral && a.table(p)[z * n + x] == single(x) && a.table(p)[x * n + z] == single(x);
      }
      if (neutral) {
        r.zero = z;
      }
    }
    if (r.zero) {
      r.additive_inverses = true;
      for (std::size_t x = 0; x < n; ++x) {
        bool found = false;
        for (std::size_t y = 0; y < n && !found; ++y) {
          found = a.table(p)[x * n + y] == single(*r.zero);
        }
        r.additive_inverses = r.additive_inverses && found;
      }
    }
    return r;
  }

}  // namespace multalg
