#pragma once

#include <cstdint>
#include <iosfwd>

#include "multalg/config.hpp"

namespace multalg::cli {

  enum class OutputFormat { text, json };

  struct RunConfig {
    Limits        limits;
    std::size_t   smax   = Limits{}.max_expression_size;
    OutputFormat  format = OutputFormat::text;
    std::uint64_t seed   = 1;
  };

  inline constexpr int kExitOk        = 0;
  inline constexpr int kExitUsage     = 1;
  inline constexpr int kExitPrecondition = 2;
  inline constexpr int kExitTheorem   = 3;

  // Full command line entry point; argv[0] is the program name.
  int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err);

}  // namespace multalg::cli
