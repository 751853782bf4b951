#include "multalg/cli/structure_file.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "multalg/errors.hpp"

namespace multalg::cli {

  FormatError::FormatError(std::string const& source, std::size_t line, std::string const& message)
      : std::runtime_error(line == 0 ? source + ": " + message
                                     : source + ":" + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t StructureFile::element_index(std::string_view n) const {
    for (std::size_t i = 0; i < elements.size(); ++i) {
      if (elements[i] == n) {
        return i;
      }
    }
    throw PreconditionError("unknown element '" + std::string(n) + "'");
  }

  namespace {

    std::string_view trim(std::string_view s) {
      auto const b = s.find_first_not_of(" \t\r");
      if (b == std::string_view::npos) {
        return {};
      }
      auto const e = s.find_last_not_of(" \t\r");
      return s.substr(b, e - b + 1);
    }

    std::vector<std::string_view> words(std::string_view s) {
      std::vector<std::string_view> out;
      std::size_t                   i = 0;
      while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) {
          ++i;
        }
        auto const b = i;
        while (i < s.size() && s[i] != ' ' && s[i] != '\t') {
          ++i;
        }
        if (i > b) {
          out.push_back(s.substr(b, i - b));
        }
      }
      return out;
    }

    bool valid_name(std::string_view n) {
      return !n.empty() && n.find_first_of(",{}#") == std::string_view::npos &&
             n.find("->") == std::string_view::npos;
    }

    struct OpBlock {
      Operation                  op;
      std::size_t                line = 0;
      std::vector<Subset>        table;
      std::vector<std::size_t>   defined_at;
    };

    class Reader {
     public:
      Reader(std::string_view text, std::string const& source) : text_(text), source_(source) {}

      StructureFile read() {
        std::size_t line_no = 0;
        std::size_t start   = 0;
        while (start <= text_.size()) {
          auto end = text_.find('\n', start);
          if (end == std::string_view::npos) {
            end = text_.size();
          }
          ++line_no;
          line(line_no, text_.substr(start, end - start));
          start = end + 1;
        }
        return finish();
      }

     private:
      [[noreturn]] void fail(std::size_t line, std::string const& message) const {
        throw FormatError(source_, line, message);
      }

      void line(std::size_t no, std::string_view raw) {
        auto const hash = raw.find('#');
        auto const s    = trim(raw.substr(0, hash));
        if (s.empty()) {
          return;
        }
        if (s.starts_with("name:")) {
          if (have_name_) {
            fail(no, "duplicate name line");
          }
          have_name_ = true;
          name_      = std::string(trim(s.substr(5)));
          return;
        }
        if (s.starts_with("elements:")) {
          if (have_elements_) {
            fail(no, "duplicate elements line");
          }
          have_elements_ = true;
          for (auto w : words(s.substr(9))) {
            if (!valid_name(w)) {
              fail(no, "invalid element name '" + std::string(w) + "'");
            }
            if (index_.contains(std::string(w))) {
              fail(no, "duplicate element '" + std::string(w) + "'");
            }
            index_.emplace(std::string(w), elements_.size());
            elements_.emplace_back(w);
          }
          if (elements_.empty()) {
            fail(no, "empty carrier");
          }
          if (elements_.size() > kMaxCarrier) {
            fail(no, "more than " + std::to_string(kMaxCarrier) + " elements");
          }
          return;
        }
        if (s.starts_with("op ")) {
          header(no, s);
          return;
        }
        auto const arrow = s.find("->");
        if (arrow == std::string_view::npos) {
          fail(no, "unrecognised line");
        }
        entry(no, s.substr(0, arrow), trim(s.substr(arrow + 2)));
      }

      void header(std::size_t no, std::string_view s) {
        if (!have_elements_) {
          fail(no, "operation block before the elements line");
        }
        auto body = trim(s.substr(3));
        if (!body.ends_with(':')) {
          fail(no, "operation header must end with ':'");
        }
        body             = trim(body.substr(0, body.size() - 1));
        auto const slash = body.rfind('/');
        if (slash == std::string_view::npos) {
          fail(no, "operation header needs symbol/arity");
        }
        auto const  symbol = trim(body.substr(0, slash));
        auto const  digits = trim(body.substr(slash + 1));
        std::size_t arity  = 0;
        auto [p, ec]       = std::from_chars(digits.data(), digits.data() + digits.size(), arity);
        if (ec != std::errc{} || p != digits.data() + digits.size() || digits.empty()) {
          fail(no, "invalid arity '" + std::string(digits) + "'");
        }
        if (symbol.empty() || symbol.find_first_of(" \t(),") != std::string_view::npos) {
          fail(no, "invalid operation symbol '" + std::string(symbol) + "'");
        }
        for (auto const& b : ops_) {
          if (b.op.symbol == symbol) {
            fail(no, "duplicate operation '" + std::string(symbol) + "'");
          }
        }
        if (arity > kDefaultMaxArity) {
          fail(no, "arity above " + std::to_string(kDefaultMaxArity));
        }
        OpBlock b;
        b.op    = Operation{std::string(symbol), arity};
        b.line  = no;
        auto const count = tuple_count(elements_.size(), arity);
        b.table.assign(count, Subset{});
        b.defined_at.assign(count, 0);
        ops_.push_back(std::move(b));
      }

      std::size_t element(std::size_t no, std::string_view w) const {
        auto it = index_.find(std::string(w));
        if (it == index_.end()) {
          fail(no, "unknown element '" + std::string(w) + "'");
        }
        return it->second;
      }

      void entry(std::size_t no, std::string_view lhs, std::string_view rhs) {
        if (ops_.empty()) {
          fail(no, "table line outside an operation block");
        }
        auto&       b    = ops_.back();
        auto const  args = words(lhs);
        if (args.size() != b.op.arity) {
          fail(no, "expected " + std::to_string(b.op.arity) + " arguments for '" + b.op.symbol +
                       "', got " + std::to_string(args.size()));
        }
        std::vector<std::size_t> tuple;
        for (auto w : args) {
          tuple.push_back(element(no, w));
        }
        if (!rhs.starts_with('{') || !rhs.ends_with('}')) {
          fail(no, "output must be a set in braces");
        }
        Subset out;
        auto   inner = rhs.substr(1, rhs.size() - 2);
        while (!trim(inner).empty()) {
          auto const comma = inner.find(',');
          auto const w     = trim(inner.substr(0, comma));
          if (w.empty()) {
            fail(no, "empty element in output set");
          }
          out.insert(element(no, w));
          if (comma == std::string_view::npos) {
            break;
          }
          inner = inner.substr(comma + 1);
          if (trim(inner).empty()) {
            fail(no, "trailing comma in output set");
          }
        }
        if (out.empty()) {
          fail(no, "empty output set");
        }
        auto const t = encode_tuple(tuple, elements_.size());
        if (b.defined_at[t] != 0) {
          fail(no, "tuple already defined at line " + std::to_string(b.defined_at[t]));
        }
        b.defined_at[t] = no;
        b.table[t]      = out;
      }

      StructureFile finish() {
        if (!have_elements_) {
          fail(0, "missing elements line");
        }
        auto const                       n = elements_.size();
        std::vector<Operation>           ops;
        std::vector<Multialgebra::Table> tables;
        std::vector<std::size_t>         tuple;
        for (auto& b : ops_) {
          for (std::size_t t = 0; t < b.table.size(); ++t) {
            if (b.defined_at[t] == 0) {
              tuple.resize(b.op.arity);
              decode_tuple(t, n, tuple);
              std::string args;
              for (auto x : tuple) {
                args += (args.empty() ? "" : " ") + elements_[x];
              }
              fail(b.line, "operation '" + b.op.symbol + "' is missing tuple (" + args + ")");
            }
          }
          ops.push_back(b.op);
          tables.push_back(std::move(b.table));
        }
        return StructureFile{name_, elements_, Multialgebra(n, Signature(ops), std::move(tables))};
      }

      std::string_view                   text_;
      std::string const&                 source_;
      bool                               have_name_     = false;
      bool                               have_elements_ = false;
      std::string                        name_;
      std::vector<std::string>           elements_;
      std::map<std::string, std::size_t> index_;
      std::vector<OpBlock>               ops_;
    };

  }  // namespace

  StructureFile parse_structure(std::string_view text, std::string const& source) {
    return Reader(text, source).read();
  }

  StructureFile load_structure(std::filesystem::path const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw FormatError(path.string(), 0, "cannot open file");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_structure(buffer.str(), path.string());
  }

  StructureFile named(Multialgebra a, std::string name, std::vector<std::string> elements) {
    if (elements.empty()) {
      for (std::size_t i = 0; i < a.size(); ++i) {
        elements.push_back(std::to_string(i));
      }
    }
    if (elements.size() != a.size()) {
      throw PreconditionError("wrong number of element names");
    }
    return StructureFile{std::move(name), std::move(elements), std::move(a)};
  }

  std::string format_set(StructureFile const& s, Subset set) {
    std::string out = "{";
    bool        first = true;
    set.for_each([&](std::size_t x) {
      if (!first) {
        out += ",";
      }
      first = false;
      out += s.elements[x];
    });
    return out + "}";
  }

  std::string write_structure(StructureFile const& s) {
    auto const&              a = s.algebra;
    std::string              out;
    std::vector<std::size_t> tuple;
    out += "name: " + s.name + "\n";
    out += "elements:";
    for (auto const& e : s.elements) {
      out += " " + e;
    }
    out += "\n";
    for (std::size_t op = 0; op < a.signature().size(); ++op) {
      auto const k = a.arity(op);
      out += "op " + a.signature()[op].symbol + "/" + std::to_string(k) + ":\n";
      tuple.resize(k);
      for (std::size_t t = 0; t < a.table(op).size(); ++t) {
        decode_tuple(t, a.size(), tuple);
        out += " ";
        for (auto x : tuple) {
          out += " " + s.elements[x];
        }
        out += " -> " + format_set(s, a.table(op)[t]) + "\n";
      }
    }
    return out;
  }

}  // namespace multalg::cli
