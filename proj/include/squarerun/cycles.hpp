#pragma once

#include <array>
#include <string>
#include <vector>

#include "squarerun/quadmap.hpp"
#include "squarerun/rational.hpp"

namespace squarerun {

// Rational periodic points of x^2 + c from the period-1/2/3
// parametrizations.  For period 2 and 3 the points form one cycle in orbit
// order; poonen_fixed lists the fixed points individually.
struct PoonenCycle {
  Rational c;
  std::vector<Rational> points;
  Rational parameter;

  bool operator==(const PoonenCycle&) const = default;
};

// c = 1/4 - rho^2; fixed points 1/2 + rho and 1/2 - rho, deduplicated.
PoonenCycle poonen_fixed(const Rational& rho);

// c = -3/4 - sigma^2; 2-cycle -1/2 + sigma, -1/2 - sigma.  sigma != 0.
PoonenCycle poonen_two_cycle(const Rational& sigma);

// The degree-6 c formula in tau; 3-cycle x1, x2, x3 with the realized
// orientation verified, never assumed.  tau outside {0, -1}.
PoonenCycle poonen_three_cycle(const Rational& tau);

// Monic map with a periodic orbit of perfect squares.
struct SquareCycleWitness {
  QuadMap map;
  std::vector<Rational> squares;
  std::vector<Rational> roots;
  std::vector<Rational> params;
  bool degenerate = false;

  bool operator==(const SquareCycleWitness&) const = default;
};

// Checks roots[i]^2 = squares[i] and that the map cyclically permutes the
// squares in listed order.
bool verify_square_cycle(const SquareCycleWitness& w);

// a = -1 - m^2 - k^2, b = m^2 + k^2 + m^2 k^2; f swaps m^2 and k^2.
// m^2 = k^2 is allowed but flagged degenerate (the cycle collapses to a
// fixed point).
SquareCycleWitness square_two_cycle(const Rational& m, const Rational& k);

// The degree-8 constraint whose vanishing makes (m, n, r) a square 3-cycle
// of some monic quadratic.
Rational square_three_cycle_condition(const Rational& m, const Rational& n,
                                      const Rational& r);

// The induced map for a vanishing condition; requires pairwise distinct
// squares.  Throws DomainError carrying the residual otherwise.
SquareCycleWitness square_three_cycle_map(const Rational& m, const Rational& n,
                                          const Rational& r);

// All rational tau whose period-3 parametrization value equals the normal
// form of the given monic map; empty when there is none.
std::vector<Rational> recover_tau(const QuadMap& f);

struct CatalogRowReport {
  int index = 0;
  QuadMap map;
  std::array<Rational, 3> roots;
  Rational printed_tau;
  std::vector<Rational> recovered_tau;
  bool pass = false;
  std::vector<std::string> failures;
};

struct CatalogReport {
  std::vector<CatalogRowReport> rows;

  bool all_pass() const;
};

// Re-verifies the five worked examples end to end: printed cycle, vanishing
// condition, (a, b) recomputation, tau recovery, shift to the period-3
// normal-form cycle, and exact period 3.
CatalogReport catalog_check();

// Enumerates nonnegative triples (m, n, r) of height at most height_bound
// (p/q in lowest terms, 0 <= p <= 2*height_bound, 1 <= q <= height_bound),
// keeps vanishing-condition triples with distinct squares, and returns
// verified witnesses deduplicated up to cyclic rotation.
std::vector<SquareCycleWitness> square_cycle_search(long height_bound,
                                                    unsigned shards = 1);

}  // namespace squarerun
