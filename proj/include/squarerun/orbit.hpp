#pragma once

#include <vector>

#include "squarerun/quadmap.hpp"

namespace squarerun {

// Guard against coefficient blowup along orbits.  max_bits bounds
// bit_size() (numerator plus denominator bits) of any iterate.
struct IterationLimits {
  std::size_t max_bits = 4096;
};

// f^n(x0); throws HeightLimitError when an iterate exceeds the guard.
Rational iterate(const QuadMap& f, Rational x0, unsigned n, const IterationLimits& lim = {});

// Orbit prefix x0, f(x0), ..., with exact cycle structure when one was found
// within the budget.  tail_length is the number of strictly pre-periodic
// iterates and cycle_length the minimal period; both are zero when truncated.
struct Orbit {
  std::vector<Rational> iterates;
  unsigned tail_length = 0;
  unsigned cycle_length = 0;
  bool truncated = false;

  bool periodic() const { return !truncated && tail_length == 0; }

  bool operator==(const Orbit&) const = default;
};

// Iterates until the first repeated value, the step budget, or the height
// guard.  Repetition is exact rational equality, so the reported tail and
// minimal period are exact.  Hitting the height guard reports truncated
// rather than throwing: an escaping orbit is an answer, not an error.
Orbit detect_cycle(const QuadMap& f, const Rational& x0, unsigned max_steps = 256,
                   const IterationLimits& lim = {});

// Length of the initial run of consecutive perfect squares in the orbit of
// x0, with the nonnegative square roots of that run.  Counting stops at the
// first non-square, at max_run values, or at the height guard (truncated).
struct SquareRunReport {
  unsigned run_length = 0;
  std::vector<Rational> roots;
  bool truncated = false;

  bool operator==(const SquareRunReport&) const = default;
};

SquareRunReport square_run(const QuadMap& f, const Rational& x0, unsigned max_run = 16,
                           const IterationLimits& lim = {});

}  // namespace squarerun
