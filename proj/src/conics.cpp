#include "squarerun/conics.hpp"

namespace squarerun {

ConicSlopeParam::ConicSlopeParam(Rational d_in, Rational z0_in, Rational x0_in)
    : d(std::move(d_in)), z0(std::move(z0_in)), x0(std::move(x0_in)) {
  if (d.is_zero()) throw DomainError("degenerate conic: d = 0");
  if (z0 * z0 + x0 * x0 != d) throw DomainError("conic base point is not on the conic");
}

ConicChordPoint chord_point(const ConicSlopeParam& conic, const Rational& slope) {
  // Substituting X = X0 + t(z - z0) into z^2 + X^2 = D and dividing out the
  // known root z = z0 leaves the second intersection below.
  Rational t2 = slope * slope;
  Rational two_t = Rational(2) * slope;
  ConicChordPoint out{
      conic.z0 * (t2 - Rational(1)) - two_t * conic.x0,
      conic.x0 * (Rational(1) - t2) - two_t * conic.z0,
      Rational(1) + t2,
  };
  return out;
}

ConicPair xc_conic_point(const Rational& beta, const Rational& m) {
  if (beta.is_zero()) throw DomainError("xc conic needs beta != 0");
  Rational den = Rational(1) + m * m;
  Rational alpha = beta * (m * m * beta - Rational(2) * m - beta) / den;
  Rational gamma = m * (alpha - beta * beta) + beta;
  return {alpha, gamma};
}

ConicPair xab_conic_point(const Rational& a, const Rational& m) {
  if (a.is_zero()) throw DomainError("xab conic needs a != 0");
  Rational den = Rational(1) + m * m;
  Rational alpha = a * (a * m * m - Rational(2) * m - Rational(1) - a) / den;
  Rational gamma = m * (alpha - a * a) + a;
  return {alpha, gamma};
}

PythagoreanQuadruple pythagorean_quadruple(const Rational& s, const Rational& t,
                                           const Rational& u) {
  Rational s2 = s * s, t2 = t * t, u2 = u * u;
  return {s2 + t2 + u2, Rational(2) * s * u, s2 + t2 - u2, Rational(2) * t * u};
}

PqrForms stuy_forms(const Rational& p, const Rational& q, const Rational& r) {
  Rational p2 = p * p, q2 = q * q, r2 = r * r;
  Rational two = 2, four = 4;
  PqrForms out{
      four * p2 + two * q * p - two * p * r - q2 + r2,
      four * q * p + q2 - two * q * r + r2,
      four * p2 + two * q * p - two * p * r + q2 - r2,
      four * p * r + two * q * r - q2 - r2,
      {},
      {},
  };
  out.big_t = four * out.t * out.u;
  out.z_sq = out.s * out.s + out.t * out.t + out.u * out.u - two * out.t * out.u;
  return out;
}

}  // namespace squarerun
