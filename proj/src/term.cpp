#include "multalg/term.hpp"

#include <algorithm>

namespace multalg {

  Term Term::variable(std::size_t index) {
    Term t;
    t.is_variable_ = true;
    t.index_       = index;
    return t;
  }

  Term Term::apply(std::string symbol, std::vector<Term> args) {
    Term t;
    t.symbol_ = std::move(symbol);
    t.args_   = std::move(args);
    return t;
  }

  std::size_t Term::variable_bound() const {
    if (is_variable_) {
      return index_ + 1;
    }
    std::size_t bound = 0;
    for (auto const& a : args_) {
      bound = std::max(bound, a.variable_bound());
    }
    return bound;
  }

  std::size_t Term::depth() const {
    std::size_t d = 0;
    for (auto const& a : args_) {
      d = std::max(d, a.depth());
    }
    return is_variable_ ? 0 : d + 1;
  }

  std::string Term::to_string() const {
    if (is_variable_) {
      return "x" + std::to_string(index_);
    }
    if (args_.empty()) {
      return symbol_;
    }
    std::string out = symbol_ + "(";
    for (std::size_t i = 0; i < args_.size(); ++i) {
      if (i > 0) {
        out += ", ";
      }
      out += args_[i].to_string();
    }
    return out + ")";
  }

  std::size_t Identity::arity() const {
    return std::max<std::size_t>({1, lhs.variable_bound(), rhs.variable_bound()});
  }

  std::string Identity::to_string() const {
    return lhs.to_string() + (mode == IdentityMode::strong ? " = " : " ~= ")
           + rhs.to_string();
  }

  std::string to_string(IdentitySet const& set) {
    std::string out;
    for (auto const& id : set) {
      out += id.to_string();
      out += '\n';
    }
    return out;
  }

}  // namespace multalg
