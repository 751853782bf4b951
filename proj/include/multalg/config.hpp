#pragma once

#include <cstddef>

namespace multalg {

  // Size guards for the brute-force routes.  All of them are configuration;
  // the CLI exposes each one as a flag.
  struct Limits {
    // Largest carrier for which E_ua is enumerated partition by partition.
    std::size_t max_enumeration_carrier = 8;
    // Largest carrier for unary polynomial saturation (tables have 2^n - 1
    // entries).
    std::size_t max_saturation_carrier = 4;
    // Saturation stops with GuardExceeded beyond this many functions.
    std::size_t saturation_cap = 5000;
    // Largest total size of a sum-of-products expression.
    std::size_t max_expression_size = 6;
  };

}  // namespace multalg
