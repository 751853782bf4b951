#include "multalg/evaluation.hpp"

#include "multalg/errors.hpp"

namespace multalg {

  TermEvaluator::TermEvaluator(Multialgebra const& a, Term const& t)
      : algebra_(&a), bound_(t.variable_bound()) {
    root_ = build(t);
  }

  std::size_t TermEvaluator::build(Term const& t) {
    if (t.is_variable()) {
      nodes_.push_back({true, t.variable_index(), 0, 0});
      return nodes_.size() - 1;
    }
    auto const op = algebra_->signature().index_of(t.symbol());
    if (algebra_->arity(op) != t.args().size()) {
      throw PreconditionError("operation '" + t.symbol() + "' expects "
                              + std::to_string(algebra_->arity(op))
                              + " arguments, term '" + t.to_string() + "' gives "
                              + std::to_string(t.args().size()));
    }
    std::vector<std::size_t> kids;
    kids.reserve(t.args().size());
    for (auto const& arg : t.args()) {
      kids.push_back(build(arg));
    }
    auto const first = children_.size();
    children_.insert(children_.end(), kids.begin(), kids.end());
    nodes_.push_back({false, op, first, kids.size()});
    return nodes_.size() - 1;
  }

  Subset TermEvaluator::eval_node(std::size_t node, std::span<Subset const> env) const {
    auto const& nd = nodes_[node];
    if (nd.is_variable) {
      return env[nd.index];
    }
    switch (nd.arity) {
      case 0:
        return algebra_->table(nd.index)[0];
      case 1: {
        Subset const args[1] = {eval_node(children_[nd.first_child], env)};
        return lift(*algebra_, nd.index, args);
      }
      case 2: {
        return lift(*algebra_, nd.index,
                    eval_node(children_[nd.first_child], env),
                    eval_node(children_[nd.first_child + 1], env));
      }
      default: {
        std::vector<Subset> args(nd.arity);
        for (std::size_t i = 0; i < nd.arity; ++i) {
          args[i] = eval_node(children_[nd.first_child + i], env);
        }
        return lift(*algebra_, nd.index, args);
      }
    }
  }

  Subset TermEvaluator::evaluate(std::span<Subset const> env) const {
    return eval_node(root_, env);
  }

  Subset TermEvaluator::operator()(std::span<Subset const> env) const {
    if (env.size() < bound_) {
      throw PreconditionError("environment of length " + std::to_string(env.size())
                              + " is too short for a term over "
                              + std::to_string(bound_) + " variables");
    }
    for (auto s : env) {
      if (s.empty() || !s.within(algebra_->size())) {
        throw PreconditionError("environment entry " + s.to_string()
                                + " is not a nonempty subset of the carrier");
      }
    }
    return evaluate(env);
  }

  Subset eval_term(Multialgebra const& a, Term const& t, std::span<Subset const> env) {
    return TermEvaluator(a, t)(env);
  }

  bool check_identity(Multialgebra const& a, Identity const& id, IdentityMode mode) {
    TermEvaluator lhs(a, id.lhs), rhs(a, id.rhs);
    bool          ok = true;
    for_each_singleton_tuple(a.size(), id.arity(), [&](std::span<Subset const> env) {
      if (!ok) {
        return;
      }
      auto const l = lhs.evaluate(env);
      auto const r = rhs.evaluate(env);
      ok = mode == IdentityMode::strong ? l == r : l.intersects(r);
    });
    return ok;
  }

  bool check_identity(Multialgebra const& a, Identity const& id) {
    return check_identity(a, id, id.mode);
  }

  bool check_identities(Multialgebra const& a, IdentitySet const& ids) {
    for (auto const& id : ids) {
      if (!check_identity(a, id)) {
        return false;
      }
    }
    return true;
  }

}  // namespace multalg
