#include <algorithm>
#include <cctype>

#include "multalg/term.hpp"

namespace multalg {

  namespace {

    bool is_ident_start(char c) {
      return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }
    bool is_ident_char(char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }

    // Recursive descent over a single line of text.
    class Parser {
     public:
      explicit Parser(std::string_view text, std::size_t base = 0)
          : text_(text), base_(base) {}

      Term term() {
        skip();
        auto const start = pos_;
        if (pos_ >= text_.size() || !is_ident_start(text_[pos_])) {
          fail("expected a variable or operation symbol");
        }
        while (pos_ < text_.size() && is_ident_char(text_[pos_])) {
          ++pos_;
        }
        auto name = text_.substr(start, pos_ - start);
        if (is_variable_name(name)) {
          return Term::variable(std::stoul(std::string(name.substr(1))));
        }
        std::vector<Term> args;
        skip();
        if (pos_ < text_.size() && text_[pos_] == '(') {
          ++pos_;
          args.push_back(term());
          while (true) {
            skip();
            if (pos_ < text_.size() && text_[pos_] == ',') {
              ++pos_;
              args.push_back(term());
              continue;
            }
            if (pos_ < text_.size() && text_[pos_] == ')') {
              ++pos_;
              break;
            }
            fail("expected ',' or ')'");
          }
        }
        return Term::apply(std::string(name), std::move(args));
      }

      Identity identity() {
        Identity id{term(), Term::variable(0), IdentityMode::strong};
        skip();
        if (text_.substr(pos_, 2) == "~=") {
          id.mode = IdentityMode::weak;
          pos_ += 2;
        } else if (pos_ < text_.size() && text_[pos_] == '=') {
          ++pos_;
        } else {
          fail("expected '=' or '~='");
        }
        id.rhs = term();
        finish();
        return id;
      }

      void finish() {
        skip();
        if (pos_ != text_.size()) {
          fail("unexpected trailing input");
        }
      }

     private:
      static bool is_variable_name(std::string_view name) {
        return name.size() >= 2 && name[0] == 'x'
               && std::all_of(name.begin() + 1, name.end(),
                              [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
      }

      void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
          ++pos_;
        }
      }

      [[noreturn]] void fail(std::string const& what) const {
        throw ParseError(what, base_ + pos_);
      }

      std::string_view text_;
      std::size_t      base_;
      std::size_t      pos_ = 0;
    };

  }  // namespace

  Term parse_term(std::string_view text) {
    Parser p(text);
    Term   t = p.term();
    p.finish();
    return t;
  }

  Identity parse_identity(std::string_view text) {
    return Parser(text).identity();
  }

  IdentitySet parse_identity_set(std::string_view text) {
    IdentitySet set;
    std::size_t start = 0;
    while (start <= text.size()) {
      auto end = text.find('\n', start);
      if (end == std::string_view::npos) {
        end = text.size();
      }
      auto line = text.substr(start, end - start);
      if (auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
      }
      if (line.find_first_not_of(" \t\r") != std::string_view::npos) {
        set.push_back(Parser(line, start).identity());
      }
      start = end + 1;
    }
    return set;
  }

}  // namespace multalg
