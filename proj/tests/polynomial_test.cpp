#include "squarerun/polynomial.hpp"

#include <algorithm>

#include "doctest.h"

using namespace squarerun;

TEST_CASE("construction trims trailing zeros") {
  UniPoly p({Rational(1), Rational(2), Rational(0)});
  CHECK(p.degree() == 1);
  CHECK(p.coeff(0) == Rational(1));
  CHECK(p.coeff(1) == Rational(2));
  CHECK(p.coeff(5) == Rational(0));
  CHECK(UniPoly({Rational(0), Rational(0)}).is_zero());
  CHECK(UniPoly().degree() == -1);
}

TEST_CASE("evaluation") {
  UniPoly one_plus_x2({Rational(1), Rational(0), Rational(1)});
  CHECK(one_plus_x2.eval(2) == Rational(5));
  // 4m^4 - 4m^3 - 4m - 4 at m = 1
  UniPoly h2({Rational(-4), Rational(-4), Rational(0), Rational(-4), Rational(4)});
  CHECK(h2.eval(1) == Rational(-8));
  CHECK(UniPoly().eval(Rational(77, 5)) == Rational(0));
}

TEST_CASE("shift matches direct evaluation") {
  UniPoly p({Rational(3), Rational(-1), Rational(0), Rational(2)});
  for (long e : {0L, 1L, -2L, 5L}) {
    UniPoly q = p.shifted(Rational(e));
    for (long x = -4; x <= 4; ++x) CHECK(q.eval(x) == p.eval(Rational(x + e)));
  }
  UniPoly q = p.shifted(Rational(1, 2));
  CHECK(q.eval(Rational(1, 2)) == p.eval(Rational(1)));
}

TEST_CASE("scalar multiply and add") {
  UniPoly p({Rational(1), Rational(2)});
  UniPoly q({Rational(0), Rational(-2), Rational(5)});
  UniPoly sum = p + q;
  CHECK(sum.eval(3) == p.eval(3) + q.eval(3));
  CHECK((p * Rational(3)).eval(7) == Rational(3) * p.eval(7));
  CHECK((p + p * Rational(-1)).is_zero());
}

TEST_CASE("rational_roots finds exactly the rational roots") {
  // (x - 1/2)(x + 3)(2x - 5) scaled: roots 1/2, -3, 5/2
  UniPoly p({Rational(15, 2), Rational(-31, 2), Rational(0), Rational(2)});
  CHECK(p.eval(Rational(1, 2)) == Rational(0));
  CHECK(p.eval(Rational(-3)) == Rational(0));
  CHECK(p.eval(Rational(5, 2)) == Rational(0));
  auto roots = rational_roots(p);
  CHECK(roots == std::vector<Rational>{Rational(-3), Rational(1, 2), Rational(5, 2)});

  CHECK(rational_roots(UniPoly({Rational(1), Rational(0), Rational(1)})).empty());
  CHECK(rational_roots(UniPoly({Rational(2)})).empty());

  // x^2 root 0 with multiplicity 2: reported once
  auto zero_roots = rational_roots(UniPoly({Rational(0), Rational(0), Rational(1)}));
  CHECK(zero_roots == std::vector<Rational>{Rational(0)});

  // large coefficients: the normal-form sextic of the last catalog map must
  // yield tau = -12
  Rational a = Rational::parse("-74333/4356");
  Rational b = Rational::parse("211660729/4743684");
  Rational c = b - a.square() / 4 + a / 2;
  UniPoly sextic({Rational(1), Rational(4), Rational(9) + 4 * c, Rational(8) + 8 * c,
                  Rational(4) + 4 * c, Rational(2), Rational(1)});
  auto taus = rational_roots(sextic);
  CHECK(std::find(taus.begin(), taus.end(), Rational(-12)) != taus.end());
}

TEST_CASE("factor_integer and divisors") {
  auto f = factor_integer(600);
  REQUIRE(f.size() == 3);
  CHECK(f[0].first == 2);
  CHECK(f[0].second == 3);
  CHECK(f[1].first == 3);
  CHECK(f[1].second == 1);
  CHECK(f[2].first == 5);
  CHECK(f[2].second == 2);

  auto d = divisors(12);
  CHECK(d == std::vector<mpz_class>{1, 2, 3, 4, 6, 12});
  CHECK(divisors(1) == std::vector<mpz_class>{1});

  mpz_class semi = mpz_class(1000003) * 998117;
  auto sf = factor_integer(semi);
  REQUIRE(sf.size() == 2);
  CHECK(sf[0].first * sf[1].first == semi);
}
