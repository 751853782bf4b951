#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace multalg {

  /// A term over an operation signature: either a variable x<i> or an
  /// operation symbol applied to argument terms.  Symbols are resolved
  /// against a concrete signature only when the term is evaluated.
  class Term {
   public:
    static Term variable(std::size_t index);
    static Term apply(std::string symbol, std::vector<Term> args = {});

    bool is_variable() const noexcept {
      return is_variable_;
    }
    std::size_t variable_index() const noexcept {
      return index_;
    }
    std::string const& symbol() const noexcept {
      return symbol_;
    }
    std::vector<Term> const& args() const noexcept {
      return args_;
    }

    // 1 + largest variable index occurring, or 0 for a ground term.
    std::size_t variable_bound() const;
    std::size_t depth() const;

    // f(x0, g(x1)); nullary applications print as the bare symbol.
    std::string to_string() const;

    friend bool operator==(Term const&, Term const&) = default;

   private:
    Term() = default;

    bool              is_variable_ = false;
    std::size_t       index_       = 0;
    std::string       symbol_;
    std::vector<Term> args_;
  };

  enum class IdentityMode { strong, weak };

  struct Identity {
    Term         lhs;
    Term         rhs;
    IdentityMode mode = IdentityMode::strong;

    // Number of variables the identity is quantified over; at least 1.
    std::size_t arity() const;
    std::string to_string() const;

    friend bool operator==(Identity const&, Identity const&) = default;
  };

  using IdentitySet = std::vector<Identity>;

  class ParseError : public std::runtime_error {
   public:
    ParseError(std::string const& message, std::size_t position)
        : std::runtime_error(message + " at offset " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept {
      return position_;
    }

   private:
    std::size_t position_;
  };

  // Grammar:
  //   term     := var | sym "(" term ("," term)* ")" | sym
  //   var      := "x" digits
  //   identity := term ("=" | "~=") term
  // Identity sets hold one identity per line; "#" starts a comment.
  Term        parse_term(std::string_view text);
  Identity    parse_identity(std::string_view text);
  IdentitySet parse_identity_set(std::string_view text);

  std::string to_string(IdentitySet const& set);

}  // namespace multalg
