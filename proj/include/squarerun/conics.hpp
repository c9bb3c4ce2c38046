#pragma once

#include "squarerun/rational.hpp"

namespace squarerun {

// Conic z^2 + X^2 = D T^2 with a designated affine rational point
// (z0, X0, 1); every further rational point is cut out by a chord
// through the base.
struct ConicSlopeParam {
  Rational d;
  Rational z0, x0;

  // Rejects d = 0 and base points that miss the conic.
  ConicSlopeParam(Rational d, Rational z0, Rational x0);
};

// Second intersection of the slope-t chord through the base point, as an
// unreduced homogeneous triple (T = 1 + t^2 > 0) plus affine accessors.
// The tangent slope returns the base point itself.
struct ConicChordPoint {
  Rational z, x, t;

  Rational affine_z() const { return z / t; }
  Rational affine_x() const { return x / t; }
};

ConicChordPoint chord_point(const ConicSlopeParam& conic, const Rational& slope);

// Chord parametrizations of the two conics behind the three-consecutive-
// square families; m is the chord slope, the base point is (beta^2, beta)
// resp. (a^2, a).
struct ConicPair {
  Rational alpha, gamma;
};

// alpha^2 + gamma^2 = beta^4 + beta^2 (family x^2 + c); beta != 0.
ConicPair xc_conic_point(const Rational& beta, const Rational& m);

// alpha^2 + gamma^2 + a*alpha = a^4 + a^3 + a^2 (family x^2 + ax + b); a != 0.
ConicPair xab_conic_point(const Rational& a, const Rational& m);

// (gamma, w, Y, mu) = (s^2+t^2+u^2, 2su, s^2+t^2-u^2, 2tu), so that
// gamma^2 = w^2 + Y^2 + mu^2 identically.
struct PythagoreanQuadruple {
  Rational gamma, w, y, mu;
};

PythagoreanQuadruple pythagorean_quadruple(const Rational& s, const Rational& t,
                                           const Rational& u);

// The degree-2 forms in (p,q,r) feeding the four-consecutive-square search,
// with the derived T = 4tu and Zsq = s^2+t^2+u^2-2tu.  Satisfies
// y^2 = s^2 + t^2 - u^2 identically.
struct PqrForms {
  Rational s, t, u, y;
  Rational big_t;
  Rational z_sq;
};

PqrForms stuy_forms(const Rational& p, const Rational& q, const Rational& r);

}  // namespace squarerun
