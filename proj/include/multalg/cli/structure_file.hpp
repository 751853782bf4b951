#pragma once

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "multalg/multialgebra.hpp"

namespace multalg::cli {

  // Malformed structure or diagram file, with the 1-based offending line
  // (0 when the problem is not tied to a line).
  class FormatError : public std::runtime_error {
   public:
    FormatError(std::string const& source, std::size_t line, std::string const& message);

    std::size_t line() const noexcept {
      return line_;
    }

   private:
    std::size_t line_;
  };

  struct StructureFile {
    std::string              name;
    std::vector<std::string> elements;
    Multialgebra             algebra;

    std::size_t element_index(std::string_view name) const;  // throws PreconditionError
  };

  /// Line format, "#" starts a comment:
  ///
  ///   name: K3
  ///   elements: w0 w1 w2
  ///   op plus/2:
  ///     w0 w0 -> {w0}
  ///     ...
  ///   op c/0:
  ///     -> {w1}
  ///
  /// Every tuple must be listed exactly once with a nonempty output set.
  StructureFile parse_structure(std::string_view text, std::string const& source = "<input>");
  StructureFile load_structure(std::filesystem::path const& path);

  // Element names default to 0..n-1.
  StructureFile named(Multialgebra a, std::string name, std::vector<std::string> elements = {});

  // Tuples in lexicographic order; parse_structure(write_structure(s)) == s.
  std::string write_structure(StructureFile const& s);

  std::string format_set(StructureFile const& s, Subset set);

}  // namespace multalg::cli
