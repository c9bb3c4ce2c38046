#include "squarerun/conics.hpp"

#include <random>

#include "doctest.h"
#include "squarerun/errors.hpp"

using namespace squarerun;

TEST_CASE("conic base point validation") {
  CHECK_THROWS_AS(ConicSlopeParam(0, 0, 0), DomainError);
  CHECK_THROWS_AS(ConicSlopeParam(2, 1, 2), DomainError);
  ConicSlopeParam ok(2, 1, 1);
  CHECK(ok.d == Rational(2));
}

TEST_CASE("chord points satisfy the conic exactly") {
  ConicSlopeParam conic(2, 1, 1);
  for (long num = -9; num <= 9; ++num)
    for (long den = 1; den <= 4; ++den) {
      ConicChordPoint p = chord_point(conic, Rational(num, den));
      CHECK(p.z.square() + p.x.square() == conic.d * p.t.square());
      CHECK(!p.t.is_zero());
      CHECK(p.affine_z().square() + p.affine_x().square() == conic.d);
    }
}

TEST_CASE("chord at the tangent slope returns the base point") {
  ConicSlopeParam conic(2, 1, 1);
  // the chord z + X = 2 (slope -1) is tangent at (1, 1)
  ConicChordPoint p = chord_point(conic, -1);
  CHECK(p.affine_z() == Rational(1));
  CHECK(p.affine_x() == Rational(1));
}

TEST_CASE("conic parametrizations reject a zero base parameter") {
  CHECK_THROWS_AS(xc_conic_point(0, 1), DomainError);
  CHECK_THROWS_AS(xab_conic_point(0, 1), DomainError);
}

TEST_CASE("xc conic point closed form") {
  ConicPair zero = xc_conic_point(3, 0);
  CHECK(zero.alpha == Rational(-9));
  CHECK(zero.gamma == Rational(3));

  ConicPair one = xc_conic_point(1, 1);
  CHECK(one.alpha == Rational(-1));
  CHECK(one.gamma == Rational(-1));

  ConicPair ex = xc_conic_point(2, Rational(-65, 72));
  CHECK(ex.alpha == Rational(14884, 9409));

  std::mt19937 rng(29);
  std::uniform_int_distribution<long> num(-20, 20), den(1, 9);
  for (int i = 0; i < 200; ++i) {
    Rational beta(num(rng), den(rng));
    if (beta.is_zero()) continue;
    Rational m(num(rng), den(rng));
    ConicPair p = xc_conic_point(beta, m);
    CHECK(p.alpha.square() + p.gamma.square() == beta.pow(4) + beta.square());
  }
}

TEST_CASE("xab conic point closed form") {
  ConicPair zero = xab_conic_point(5, 0);
  CHECK(zero.alpha == Rational(-30));
  CHECK(zero.gamma == Rational(5));

  ConicPair one = xab_conic_point(1, 1);
  CHECK(one.alpha == Rational(-3, 2));
  CHECK(one.gamma == Rational(-3, 2));

  ConicPair dbl = xab_conic_point(1, Rational(-3, 4));
  CHECK(dbl.alpha == Rational(1, 25));

  std::mt19937 rng(31);
  std::uniform_int_distribution<long> num(-20, 20), den(1, 9);
  for (int i = 0; i < 200; ++i) {
    Rational a(num(rng), den(rng));
    if (a.is_zero()) continue;
    Rational m(num(rng), den(rng));
    ConicPair p = xab_conic_point(a, m);
    CHECK(p.alpha.square() + p.gamma.square() + a * p.alpha ==
          a.pow(4) + a.pow(3) + a.square());
  }
}

TEST_CASE("pythagorean quadruple identity") {
  PythagoreanQuadruple q1 = pythagorean_quadruple(1, 1, 1);
  CHECK(q1.gamma == Rational(3));
  CHECK(q1.w == Rational(2));
  CHECK(q1.y == Rational(1));
  CHECK(q1.mu == Rational(2));

  PythagoreanQuadruple q2 = pythagorean_quadruple(2, 0, 1);
  CHECK(q2.gamma == Rational(5));
  CHECK(q2.w == Rational(4));
  CHECK(q2.y == Rational(3));
  CHECK(q2.mu == Rational(0));

  PythagoreanQuadruple q3 = pythagorean_quadruple(1, 2, 3);
  CHECK(q3.gamma == Rational(14));
  CHECK(q3.w == Rational(6));
  CHECK(q3.y == Rational(-4));
  CHECK(q3.mu == Rational(12));

  std::mt19937 rng(37);
  std::uniform_int_distribution<long> num(-15, 15), den(1, 7);
  for (int i = 0; i < 100; ++i) {
    PythagoreanQuadruple q = pythagorean_quadruple(
        Rational(num(rng), den(rng)), Rational(num(rng), den(rng)),
        Rational(num(rng), den(rng)));
    CHECK(q.gamma.square() == q.w.square() + q.y.square() + q.mu.square());
  }
}

TEST_CASE("degree-2 forms in p q r") {
  PqrForms f1 = stuy_forms(1, 1, 1);
  CHECK(f1.s == Rational(4));
  CHECK(f1.t == Rational(4));
  CHECK(f1.u == Rational(4));
  CHECK(f1.y == Rational(4));
  CHECK(f1.big_t == Rational(64));
  CHECK(f1.z_sq == Rational(16));

  PqrForms f2 = stuy_forms(1, 2, 0);
  CHECK(f2.s == Rational(4));
  CHECK(f2.t == Rational(12));
  CHECK(f2.u == Rational(12));
  CHECK(f2.y == Rational(-4));

  PqrForms f3 = stuy_forms(1, 0, 0);
  CHECK(f3.s == Rational(4));
  CHECK(f3.t == Rational(0));
  CHECK(f3.u == Rational(4));
  CHECK(f3.y == Rational(0));
  CHECK(f3.big_t == Rational(0));

  std::mt19937 rng(41);
  std::uniform_int_distribution<long> num(-15, 15), den(1, 7);
  for (int i = 0; i < 100; ++i) {
    PqrForms f = stuy_forms(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)),
                            Rational(num(rng), den(rng)));
    CHECK(f.y.square() == f.s.square() + f.t.square() - f.u.square());
    CHECK(f.big_t == 4 * f.t * f.u);
    CHECK(f.z_sq == f.s.square() + f.t.square() + f.u.square() - 2 * f.t * f.u);
  }
}
