#pragma once

#include <array>
#include <optional>

#include "squarerun/quadmap.hpp"
#include "squarerun/rational.hpp"

namespace squarerun {

// The three one-parameter families with three consecutive squares in an
// orbit, named by the shape of their maps: x^2+c, x^2+ax+b, x^2+ax-a.
enum class Family { Xc, Xaxb, XaxMinusA };

const char* family_tag(Family f);

// A verified orbit start: x0 = r0^2, f(x0) = r1^2, f^2(x0) = r2^2, with
// nonnegative roots.  `multiple` records which multiple of the curve
// generator produced the witness; the closed-form generators sit at 2.
struct ThreeSquareWitness {
  Family family;
  Rational parameter;
  long multiple;
  QuadMap map;
  Rational x0;
  std::array<Rational, 3> roots;

  bool operator==(const ThreeSquareWitness&) const = default;
};

// Recomputes the three square identities from scratch.
bool verify_witness(const ThreeSquareWitness& w);

// Orbit start for the x^2+ax-a family: x0 itself need not be a square, but
// f(x0) and f^2(x0) are.  root0 is present exactly when x0 is a square,
// in which case as_witness() upgrades the triple.
struct OrbitTriple {
  Rational parameter;
  long multiple;
  QuadMap map;
  Rational x0;
  Rational second, third;
  std::array<Rational, 2> roots;
  std::optional<Rational> root0;

  std::optional<ThreeSquareWitness> as_witness() const;

  bool operator==(const OrbitTriple&) const = default;
};

bool verify_triple(const OrbitTriple& t);

// Closed-form generators.  Each one recomputes its values along two
// independent routes and throws ConsistencyError on any disagreement.
ThreeSquareWitness family_xc(const Rational& beta);        // beta != 0
ThreeSquareWitness family_xaxb(const Rational& a);
OrbitTriple family_xax_minus_a(const Rational& alpha);     // alpha != 1

// Curve-powered extension: build the family quartic, pass to Weierstrass
// form, take n times the image of the second base point, pull the slope
// back, and run it through the conic parametrization.  n = 2 reproduces
// the closed-form generator exactly.  Throws ExceptionalPointError when
// the multiple lands over an exceptional place.
ThreeSquareWitness extend_family_xc(const Rational& beta, long n);
ThreeSquareWitness extend_family_xaxb(const Rational& a, long n);
OrbitTriple extend_family_xax_minus_a(const Rational& alpha, long n);

}  // namespace squarerun
