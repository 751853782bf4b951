#pragma once

#include <stdexcept>
#include <string>

namespace multalg {

  // Malformed input or a violated operation precondition.
  class PreconditionError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  // A configured size guard (enumeration carrier, saturation cap, ...) was
  // exceeded.  Distinct from PreconditionError so callers can report partial
  // progress.
  class GuardExceeded : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Two computations that must agree did not.  Never caught internally.
  class TheoremViolation : public std::logic_error {
   public:
    using std::logic_error::logic_error;
  };

}  // namespace multalg
