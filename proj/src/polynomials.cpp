#include "multalg/polynomials.hpp"

#include <set>
#include <string>
#include <unordered_map>

#include "multalg/evaluation.hpp"
#include "multalg/kernels.hpp"
#include "multalg/pair_relation.hpp"

namespace multalg {

  namespace {

    struct TableHash {
      std::size_t operator()(PolyTable const& t) const noexcept {
        std::size_t h = 1469598103934665603ULL;
        for (auto s : t) {
          h = (h ^ s.bits()) * 1099511628211ULL;
        }
        return h;
      }
    };

    constexpr std::size_t kChunk = std::size_t{1} << 15;

    class Saturation {
     public:
      Saturation(Multialgebra const& a, Limits const& limits) : a_(a), limits_(limits) {}

      std::vector<UnaryPolyFunction> run() {
        auto const n    = a_.size();
        auto const size = poly_table_size(n);
        for (std::size_t e = 0; e < n; ++e) {
          add(PolyTable(size, Subset::singleton(e)), {UnaryPolyFunction::Origin::constant, e, {}});
        }
        PolyTable id(size);
        for (std::size_t x = 0; x < size; ++x) {
          id[x] = Subset(static_cast<std::uint32_t>(x + 1));
        }
        add(std::move(id), {UnaryPolyFunction::Origin::identity, 0, {}});

        std::size_t first_new = 0;
        while (first_new < functions_.size()) {
          auto const universe = functions_.size();
          for (std::size_t op = 0; op < a_.signature().size(); ++op) {
            auto const k = a_.arity(op);
            if (k == 0) {
              if (first_new == 0) {
                add(PolyTable(size, a_.table(op)[0]), {UnaryPolyFunction::Origin::operation, op, {}});
              }
              continue;
            }
            auto const total = tuple_count(universe, k);
            // Tuples drawn entirely from earlier waves are skipped by the
            // kernel; they were applied already.
            for (std::size_t begin = 0; begin < total; begin += kChunk) {
              auto const end = std::min(total, begin + kChunk);
              for (auto& [flat, table] : kernels::parallel::apply_operation(
                       a_, op, functions_, universe, first_new, begin, end)) {
                std::vector<std::size_t> args(k);
                decode_tuple(flat, universe, args);
                add(std::move(table), {UnaryPolyFunction::Origin::operation, op, std::move(args)});
              }
            }
          }
          first_new = universe;
        }
        return std::move(functions_);
      }

     private:
      void add(PolyTable table, UnaryPolyFunction::Witness witness) {
        if (index_.contains(table)) {
          return;
        }
        if (functions_.size() >= limits_.saturation_cap) {
          throw SaturationCapExceeded(
              "unary polynomial saturation exceeded the cap of "
                  + std::to_string(limits_.saturation_cap) + " functions",
              functions_.size());
        }
        index_.emplace(table, functions_.size());
        functions_.push_back({std::move(table), std::move(witness)});
      }

      Multialgebra const&                                   a_;
      Limits const&                                         limits_;
      std::vector<UnaryPolyFunction>                        functions_;
      std::unordered_map<PolyTable, std::size_t, TableHash> index_;
    };

  }  // namespace

  std::vector<UnaryPolyFunction> saturate_unary_polynomials(Multialgebra const& a,
                                                            Limits const&       limits) {
    if (a.size() > limits.max_saturation_carrier) {
      throw GuardExceeded("polynomial saturation is limited to carriers of size "
                          + std::to_string(limits.max_saturation_carrier) + ", got "
                          + std::to_string(a.size()));
    }
    return Saturation(a, limits).run();
  }

  EquivRelation alpha_i_via_polynomials(Multialgebra const&                   a,
                                        IdentitySet const&                    ids,
                                        std::vector<UnaryPolyFunction> const& polys) {
    IdentitySet const trivial{{Term::variable(0), Term::variable(0), IdentityMode::strong}};
    auto const&       effective = ids.empty() ? trivial : ids;

    std::set<std::pair<std::uint32_t, std::uint32_t>> value_pairs;
    for (auto const& id : effective) {
      TermEvaluator lhs(a, id.lhs), rhs(a, id.rhs);
      for_each_singleton_tuple(a.size(), id.arity(), [&](std::span<Subset const> env) {
        value_pairs.emplace(lhs.evaluate(env).bits(), rhs.evaluate(env).bits());
      });
    }
    PairRelation r(a.size());
    for (auto const& p : polys) {
      for (auto [q, s] : value_pairs) {
        auto const xs = p(Subset(q));
        auto const ys = p(Subset(s));
        r.insert_product(xs, ys);
        r.insert_product(ys, xs);
      }
    }
    return r.equivalence_closure();
  }

  EquivRelation alpha_i_via_polynomials(Multialgebra const& a,
                                        IdentitySet const&  ids,
                                        Limits const&       limits) {
    return alpha_i_via_polynomials(a, ids, saturate_unary_polynomials(a, limits));
  }

}  // namespace multalg
