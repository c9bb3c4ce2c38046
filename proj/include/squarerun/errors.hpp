#pragma once

#include <stdexcept>
#include <string>

namespace squarerun {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed textual input (rational literals, JSON payloads, CLI values).
struct ParseError : Error {
  using Error::Error;
};

// Arguments outside a function's stated domain (zero denominators, excluded
// parameter values, non-monic maps where a monic one is required, ...).
struct DomainError : Error {
  using Error::Error;
};

// Orbit iteration exceeded the configured coefficient-size budget.
struct HeightLimitError : Error {
  using Error::Error;
};

// A curve or quartic model with vanishing discriminant.
struct SingularModelError : Error {
  using Error::Error;
};

// A birational map was evaluated on its exceptional locus.
struct ExceptionalPointError : Error {
  using Error::Error;
};

// An internal cross-check between two independent computations failed.
struct ConsistencyError : Error {
  using Error::Error;
};

}  // namespace squarerun
