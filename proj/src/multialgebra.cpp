#include "multalg/multialgebra.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "multalg/errors.hpp"

namespace multalg {

  std::string Subset::to_string() const {
    std::string out = "{";
    bool        first = true;
    for_each([&](std::size_t x) {
      if (!first) {
        out += ',';
      }
      first = false;
      out += std::to_string(x);
    });
    out += '}';
    return out;
  }

  Signature::Signature(std::vector<Operation> ops, std::size_t max_arity)
      : ops_(std::move(ops)) {
    std::set<std::string_view> seen;
    for (auto const& op : ops_) {
      if (op.symbol.empty()) {
        throw PreconditionError("operation symbol must be nonempty");
      }
      if (!seen.insert(op.symbol).second) {
        throw PreconditionError("duplicate operation symbol '" + op.symbol
                                + "'");
      }
      if (op.arity > max_arity) {
        throw PreconditionError("operation '" + op.symbol + "' has arity "
                                + std::to_string(op.arity)
                                + ", above the limit "
                                + std::to_string(max_arity));
      }
    }
  }

  std::optional<std::size_t> Signature::find(std::string_view symbol) const noexcept {
    for (std::size_t i = 0; i < ops_.size(); ++i) {
      if (ops_[i].symbol == symbol) {
        return i;
      }
    }
    return std::nullopt;
  }

  std::size_t Signature::index_of(std::string_view symbol) const {
    auto i = find(symbol);
    if (!i) {
      throw PreconditionError("unknown operation symbol '"
                              + std::string(symbol) + "'");
    }
    return *i;
  }

  std::size_t tuple_count(std::size_t n, std::size_t arity) {
    std::size_t count = 1;
    for (std::size_t i = 0; i < arity; ++i) {
      count *= n;
    }
    return count;
  }

  std::size_t encode_tuple(std::span<std::size_t const> args, std::size_t n) {
    std::size_t index = 0;
    for (auto x : args) {
      index = index * n + x;
    }
    return index;
  }

  void decode_tuple(std::size_t index, std::size_t n, std::span<std::size_t> out) {
    for (std::size_t i = out.size(); i-- > 0;) {
      out[i] = index % n;
      index /= n;
    }
  }

  Multialgebra::Multialgebra(std::size_t        carrier_size,
                             Signature          signature,
                             std::vector<Table> tables)
      : size_(carrier_size),
        signature_(std::move(signature)),
        tables_(std::move(tables)) {
    if (size_ == 0) {
      throw PreconditionError("carrier must be nonempty");
    }
    if (size_ > kMaxCarrier) {
      throw PreconditionError("carrier of size " + std::to_string(size_)
                              + " exceeds the supported maximum "
                              + std::to_string(kMaxCarrier));
    }
    if (tables_.size() != signature_.size()) {
      throw PreconditionError("expected one table per operation");
    }
    for (std::size_t op = 0; op < tables_.size(); ++op) {
      auto const& sym = signature_[op].symbol;
      if (tables_[op].size() != tuple_count(size_, signature_[op].arity)) {
        throw PreconditionError("table of '" + sym
                                + "' is not total: wrong number of entries");
      }
      for (auto out : tables_[op]) {
        if (out.empty()) {
          throw PreconditionError("table of '" + sym
                                  + "' has an empty output set");
        }
        if (!out.within(size_)) {
          throw PreconditionError("table of '" + sym
                                  + "' has an output outside the carrier");
        }
      }
    }
  }

  Subset lift(Multialgebra const& a, std::size_t op, std::span<Subset const> args) {
    auto const& table = a.table(op);
    auto const  n     = a.size();
    switch (args.size()) {
      case 0:
        return table[0];
      case 1: {
        Subset out;
        args[0].for_each([&](std::size_t x) { out |= table[x]; });
        return out;
      }
      case 2: {
        Subset out;
        args[0].for_each([&](std::size_t x) {
          args[1].for_each([&](std::size_t y) { out |= table[x * n + y]; });
        });
        return out;
      }
      default:
        break;
    }
    // Odometer over the members of each argument.
    std::vector<std::vector<std::size_t>> members;
    members.reserve(args.size());
    for (auto s : args) {
      members.push_back(s.members());
    }
    std::vector<std::size_t> pos(args.size(), 0);
    Subset                   out;
    while (true) {
      std::size_t index = 0;
      for (std::size_t i = 0; i < args.size(); ++i) {
        index = index * n + members[i][pos[i]];
      }
      out |= table[index];
      std::size_t i = args.size();
      while (i > 0) {
        --i;
        if (++pos[i] < members[i].size()) {
          break;
        }
        pos[i] = 0;
        if (i == 0) {
          return out;
        }
      }
    }
  }

  Subset lift_op(Multialgebra const&     a,
                 std::string_view        symbol,
                 std::span<Subset const> args) {
    auto const op = a.signature().index_of(symbol);
    if (args.size() != a.arity(op)) {
      throw PreconditionError("operation '" + std::string(symbol)
                              + "' expects "
                              + std::to_string(a.arity(op))
                              + " arguments, got "
                              + std::to_string(args.size()));
    }
    for (auto s : args) {
      if (s.empty() || !s.within(a.size())) {
        throw PreconditionError("argument " + s.to_string()
                                + " is not a nonempty subset of the carrier");
      }
    }
    return lift(a, op, args);
  }

  bool is_universal_algebra(Multialgebra const& a) {
    for (std::size_t op = 0; op < a.signature().size(); ++op) {
      auto const& t = a.table(op);
      if (!std::all_of(t.begin(), t.end(), [](Subset s) { return s.size() == 1; })) {
        return false;
      }
    }
    return true;
  }

  Multialgebra reduct(Multialgebra const& a, std::span<std::string const> symbols) {
    std::vector<Operation>           ops;
    std::vector<Multialgebra::Table> tables;
    for (auto const& sym : symbols) {
      auto op = a.signature().index_of(sym);
      ops.push_back(a.signature()[op]);
      tables.push_back(a.table(op));
    }
    return Multialgebra(a.size(), Signature(std::move(ops)), std::move(tables));
  }

  Multialgebra extend(Multialgebra const&              a,
                      std::vector<Operation> const&    extra,
                      std::vector<Multialgebra::Table> extra_tables) {
    std::vector<Operation>           ops(a.signature().begin(), a.signature().end());
    std::vector<Multialgebra::Table> tables;
    for (std::size_t op = 0; op < a.signature().size(); ++op) {
      tables.push_back(a.table(op));
    }
    ops.insert(ops.end(), extra.begin(), extra.end());
    for (auto& t : extra_tables) {
      tables.push_back(std::move(t));
    }
    std::size_t max_arity = kDefaultMaxArity;
    for (auto const& op : ops) {
      max_arity = std::max(max_arity, op.arity);
    }
    return Multialgebra(a.size(), Signature(std::move(ops), max_arity), std::move(tables));
  }

}  // namespace multalg
