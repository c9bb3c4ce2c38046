#include "squarerun/families.hpp"

#include "squarerun/conics.hpp"
#include "squarerun/elliptic.hpp"
#include "squarerun/errors.hpp"
#include "squarerun/quartic.hpp"

namespace squarerun {

namespace {

Rational horner(const long* coeffs, std::size_t n, const Rational& x) {
  Rational acc;
  for (std::size_t i = n; i-- > 0;) acc = acc * x + Rational(coeffs[i]);
  return acc;
}

// Closed forms for the x^2+c family, written exactly as displayed; the
// generator recomputes everything through the conic and compares.
Rational xc_alpha_closed(const Rational& b) {
  Rational b2 = b * b, b4 = b2 * b2;
  Rational den = Rational(1) + 8 * b2 + 4 * b4;
  Rational num = Rational(3) - 4 * b4;
  return b2 * num * num / (den * den);
}

Rational xc_gamma_closed(const Rational& b) {
  Rational b2 = b * b, b4 = b2 * b2;
  Rational den = Rational(1) + 8 * b2 + 4 * b4;
  Rational inner = b2 + 3 * b4 + 4 * b2 * b4 + 2 * b4 * b4;
  return b * (Rational(-1) + 24 * inner) / (den * den);
}

Rational xc_c_closed(const Rational& b) {
  static const long num_coeffs[] = {0,    1,    -49,  400, 2864,
                                    7264, 8864, 6400, 2816, 256, -256};
  Rational b2 = b * b;
  Rational den = Rational(1) + 8 * b2 + 4 * b2 * b2;
  return horner(num_coeffs, 11, b2) / den.pow(4);
}

Rational xaxb_den(const Rational& a) {
  return Rational(1) + a * (Rational(2) + a * (Rational(9) + 4 * a * (Rational(1) + a)));
}

Rational xaxb_delta_closed(const Rational& a) {
  return a * (Rational(1) + a) * (Rational(-3) + a + 4 * a.pow(3)) / xaxb_den(a);
}

Rational xaxb_gamma_closed(const Rational& a) {
  Rational q = Rational(5) + 4 * a * (Rational(1) + a);
  Rational inner = Rational(6) + a * (Rational(8) + 3 * a * q);
  Rational den = xaxb_den(a);
  return a * (Rational(-1) + a * a * q * inner) / (den * den);
}

Rational xaxb_b_closed(const Rational& a) {
  static const long num_coeffs[] = {0,     0,     1,     -1,    -69,   -196,  314,
                                    2226,  7622,  15308, 25285, 30279, 31599, 24864,
                                    16624, 6496,  160,   -3072, -2560, -1280, -256};
  return horner(num_coeffs, 21, a) / xaxb_den(a).pow(4);
}

// Slope of the second chord on the family quartic, as displayed for the
// doubled base point.
Rational xc_doubled_slope(const Rational& b) {
  Rational b2 = b * b;
  return (Rational(-1, 2) * b2 * b2 - Rational(1, 8)) / (b * b2 + Rational(1, 2) * b);
}

Rational xaxb_doubled_slope(const Rational& a) {
  Rational a2 = a * a;
  Rational num = Rational(-1, 2) * a2 * a2 - Rational(1, 2) * a * a2 -
                 Rational(1, 8) * a2 - Rational(1, 4) * a - Rational(1, 8);
  Rational den = a * a2 + Rational(1, 2) * a2 + Rational(1, 2) * a;
  return num / den;
}

ThreeSquareWitness assemble_xc(const Rational& beta, const Rational& m, long multiple) {
  ConicPair p = xc_conic_point(beta, m);
  auto r0 = sqrt_exact(p.alpha);
  if (!r0)
    throw ExceptionalPointError("slope m = " + m.str() +
                                " gives a non-square first orbit value " + p.alpha.str());
  Rational c = beta * beta - p.alpha * p.alpha;
  ThreeSquareWitness w{Family::Xc, beta,      multiple,
                       QuadMap::normal(c),    p.alpha,
                       {*r0, beta.abs(), p.gamma.abs()}};
  if (!verify_witness(w)) throw ConsistencyError("x^2+c witness failed verification");
  return w;
}

ThreeSquareWitness assemble_xaxb(const Rational& a, const Rational& m, long multiple) {
  ConicPair p = xab_conic_point(a, m);
  auto delta = sqrt_exact(p.alpha);
  if (!delta)
    throw ExceptionalPointError("slope m = " + m.str() +
                                " gives a non-square first orbit value " + p.alpha.str());
  Rational b = a * a - p.alpha * p.alpha - a * p.alpha;
  ThreeSquareWitness w{Family::Xaxb, a,      multiple,
                       QuadMap(1, a, b),     p.alpha,
                       {*delta, a.abs(), p.gamma.abs()}};
  if (!verify_witness(w)) throw ConsistencyError("x^2+ax+b witness failed verification");
  return w;
}

OrbitTriple assemble_xax_minus_a(const Rational& alpha, const Rational& beta, long multiple) {
  Rational a = (beta * beta - alpha * alpha) / (alpha - 1);
  QuadMap f(1, a, -a);
  Rational second = beta * beta;
  Rational third = f(second);
  auto r2 = sqrt_exact(third);
  if (!r2)
    throw ExceptionalPointError("pulled-back value beta = " + beta.str() +
                                " gives a non-square third orbit value " + third.str());
  OrbitTriple t{alpha, multiple, f, alpha, second, third, {beta.abs(), *r2}, sqrt_exact(alpha)};
  if (!verify_triple(t)) throw ConsistencyError("x^2+ax-a triple failed verification");
  return t;
}

QuarticModel xc_quartic(const Rational& beta) {
  Rational b2 = beta * beta;
  return QuarticModel({b2, -2 * beta, Rational(0), -2 * beta, -b2},
                      QuarticModel::InfinityBranch{beta});
}

QuarticModel xaxb_quartic(const Rational& a) {
  return QuarticModel({a * a, -2 * a, -a, -2 * a, -a * a - a},
                      QuarticModel::InfinityBranch{a});
}

QuarticModel xax_minus_a_quartic(const Rational& alpha) {
  Rational am1 = alpha - 1;
  return QuarticModel({alpha * am1, Rational(0), am1 * (Rational(-1) - alpha * alpha),
                       Rational(0), am1 * alpha * alpha},
                      QuarticModel::AffineBase{Rational(1), am1});
}

Rational pull_back_slope(const QuarticModel& model, long n) {
  if (n < 2) throw DomainError("extension multiple must be at least 2");
  BirationalCorrespondence corr = quartic_to_weierstrass(model);
  ECPoint g = corr.conjugate_base_image();
  return corr.pullback_parameter(ec_mul(corr.curve(), n, g));
}

}  // namespace

const char* family_tag(Family f) {
  switch (f) {
    case Family::Xc: return "xc";
    case Family::Xaxb: return "xaxb";
    case Family::XaxMinusA: return "xaxma";
  }
  return "?";
}

bool verify_witness(const ThreeSquareWitness& w) {
  if (w.roots[0] * w.roots[0] != w.x0) return false;
  Rational x1 = w.map(w.x0);
  if (w.roots[1] * w.roots[1] != x1) return false;
  return w.roots[2] * w.roots[2] == w.map(x1);
}

std::optional<ThreeSquareWitness> OrbitTriple::as_witness() const {
  if (!root0) return std::nullopt;
  return ThreeSquareWitness{Family::XaxMinusA, parameter, multiple,
                            map,               x0,        {*root0, roots[0], roots[1]}};
}

bool verify_triple(const OrbitTriple& t) {
  if (t.root0 && *t.root0 * *t.root0 != t.x0) return false;
  if (t.map(t.x0) != t.second || t.roots[0] * t.roots[0] != t.second) return false;
  return t.map(t.second) == t.third && t.roots[1] * t.roots[1] == t.third;
}

ThreeSquareWitness family_xc(const Rational& beta) {
  if (beta.is_zero()) throw DomainError("beta = 0 gives c = 0 and the trivial map");
  ThreeSquareWitness w = assemble_xc(beta, xc_doubled_slope(beta), 2);
  if (w.x0 != xc_alpha_closed(beta) || w.map.C != xc_c_closed(beta) ||
      w.roots[2] != xc_gamma_closed(beta).abs())
    throw ConsistencyError("x^2+c closed forms disagree with the conic route");
  return w;
}

ThreeSquareWitness family_xaxb(const Rational& a) {
  if (a.is_zero()) {
    ThreeSquareWitness w{Family::Xaxb, a, 2, QuadMap(1, 0, 0), Rational(0),
                         {Rational(0), Rational(0), Rational(0)}};
    return w;
  }
  if (xaxb_den(a).is_zero()) throw DomainError("vanishing denominator at a = " + a.str());
  ThreeSquareWitness w = assemble_xaxb(a, xaxb_doubled_slope(a), 2);
  Rational delta = xaxb_delta_closed(a);
  if (w.x0 != delta * delta || w.map.C != xaxb_b_closed(a) ||
      w.roots[2] != xaxb_gamma_closed(a).abs())
    throw ConsistencyError("x^2+ax+b closed forms disagree with the conic route");
  return w;
}

OrbitTriple family_xax_minus_a(const Rational& alpha) {
  if (alpha == Rational(1))
    throw DomainError("alpha = 1 makes the factor alpha - 1 vanish");
  Rational den = alpha * alpha - alpha - 4;
  if (den.is_zero()) throw DomainError("vanishing denominator at alpha = " + alpha.str());
  Rational beta = (alpha * alpha - 5 * alpha) / den;
  OrbitTriple t = assemble_xax_minus_a(alpha, beta, 2);
  Rational a_closed = -(alpha - 1) * alpha * alpha * (alpha * alpha - 9) / (den * den);
  Rational third_num = ((3 * alpha * alpha - 13 * alpha + 13) * alpha * alpha -
                        15 * alpha + 12) * alpha;
  Rational third_den = (den * den) * (alpha - 1);
  if (t.map.B != a_closed || t.third != (third_num / third_den).square())
    throw ConsistencyError("x^2+ax-a closed forms disagree with the chord route");
  return t;
}

ThreeSquareWitness extend_family_xc(const Rational& beta, long n) {
  if (beta.is_zero()) throw DomainError("beta = 0 gives c = 0 and the trivial map");
  return assemble_xc(beta, pull_back_slope(xc_quartic(beta), n), n);
}

ThreeSquareWitness extend_family_xaxb(const Rational& a, long n) {
  if (a.is_zero()) throw DomainError("a = 0 degenerates the family quartic");
  return assemble_xaxb(a, pull_back_slope(xaxb_quartic(a), n), n);
}

OrbitTriple extend_family_xax_minus_a(const Rational& alpha, long n) {
  if (alpha == Rational(1) || alpha.is_zero())
    throw DomainError("alpha in {0, 1} degenerates the family quartic");
  return assemble_xax_minus_a(alpha, pull_back_slope(xax_minus_a_quartic(alpha), n), n);
}

}  // namespace squarerun
