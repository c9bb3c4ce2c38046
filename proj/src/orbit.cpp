#include "squarerun/orbit.hpp"

#include <unordered_map>

namespace squarerun {

Rational iterate(const QuadMap& f, Rational x0, unsigned n, const IterationLimits& lim) {
  Rational x = std::move(x0);
  for (unsigned i = 0; i < n; ++i) {
    x = f(x);
    if (x.bit_size() > lim.max_bits)
      throw HeightLimitError("iterate " + std::to_string(i + 1) + " exceeds " +
                             std::to_string(lim.max_bits) + " bits");
  }
  return x;
}

Orbit detect_cycle(const QuadMap& f, const Rational& x0, unsigned max_steps,
                   const IterationLimits& lim) {
  Orbit out;
  std::unordered_map<Rational, unsigned> seen;
  Rational x = x0;
  for (unsigned i = 0; i < max_steps; ++i) {
    auto [it, fresh] = seen.emplace(x, i);
    out.iterates.push_back(x);
    if (!fresh) {
      out.tail_length = it->second;
      out.cycle_length = i - it->second;
      return out;
    }
    x = f(x);
    if (x.bit_size() > lim.max_bits) break;
  }
  out.truncated = true;
  return out;
}

SquareRunReport square_run(const QuadMap& f, const Rational& x0, unsigned max_run,
                           const IterationLimits& lim) {
  SquareRunReport out;
  Rational x = x0;
  while (out.run_length < max_run) {
    auto root = sqrt_exact(x);
    if (!root) return out;
    ++out.run_length;
    out.roots.push_back(*root);
    x = f(x);
    if (x.bit_size() > lim.max_bits) {
      out.truncated = true;
      return out;
    }
  }
  out.truncated = true;
  return out;
}

}  // namespace squarerun
