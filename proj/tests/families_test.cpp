#include "squarerun/families.hpp"

#include <random>

#include "doctest.h"
#include "squarerun/errors.hpp"
#include "squarerun/rational.hpp"

using namespace squarerun;

namespace {

Rational random_param(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-12, 12), den(1, 6);
  return Rational(num(rng), den(rng));
}

}  // namespace

TEST_CASE("x^2+c generator at beta = 2") {
  ThreeSquareWitness w = family_xc(2);
  CHECK(w.family == Family::Xc);
  CHECK(w.parameter == Rational(2));
  CHECK(w.multiple == 2);
  CHECK(w.map == QuadMap::normal(Rational(132583668, 88529281)));
  CHECK(w.x0 == Rational(14884, 9409));
  CHECK(w.roots[0] == Rational(122, 97));
  CHECK(w.roots[1] == Rational(2));
  CHECK(w.roots[2] == Rational(39358, 9409));
  CHECK(verify_witness(w));
}

TEST_CASE("x^2+c generator at beta = 1") {
  ThreeSquareWitness w = family_xc(1);
  CHECK(w.map == QuadMap::normal(Rational(28560, 28561)));
  CHECK(w.x0 == Rational(1, 169));
  CHECK(w.roots[0] == Rational(1, 13));
  CHECK(w.roots[1] == Rational(1));
  CHECK(w.roots[2] == Rational(239, 169));
}

TEST_CASE("x^2+c witnesses are even in beta") {
  for (const Rational& beta : {Rational(2), Rational(1, 2), Rational(5, 3)}) {
    ThreeSquareWitness plus = family_xc(beta);
    ThreeSquareWitness minus = family_xc(-beta);
    CHECK(plus.map == minus.map);
    CHECK(plus.x0 == minus.x0);
    CHECK(plus.roots == minus.roots);
  }
}

TEST_CASE("x^2+c excluded parameter") {
  CHECK_THROWS_AS(family_xc(0), DomainError);
  CHECK_THROWS_AS(extend_family_xc(0, 2), DomainError);
  CHECK_THROWS_AS(extend_family_xc(2, 1), DomainError);
}

TEST_CASE("x^2+c random parameters verify") {
  std::mt19937 rng(43);
  int done = 0;
  while (done < 100) {
    Rational beta = random_param(rng);
    if (beta.is_zero()) continue;
    ++done;
    ThreeSquareWitness w = family_xc(beta);
    CHECK(verify_witness(w));
    CHECK(w.roots[1] == beta.abs());
    CHECK(w.map.C == beta.square() - w.x0.square());
    CHECK_FALSE(w.roots[0].is_negative());
    CHECK_FALSE(w.roots[2].is_negative());
  }
}

TEST_CASE("x^2+c maps stay nondegenerate at small parameters") {
  for (const Rational& beta :
       {Rational(1), Rational(2), Rational(3), Rational(1, 2), Rational(3, 2)}) {
    ThreeSquareWitness w = family_xc(beta);
    CHECK(classify_degeneracy(w.map).kind == DegeneracyKind::NonDegenerate);
    CHECK(is_irreducible(w.map));
  }
}

TEST_CASE("x^2+ax+b generator at a = 1") {
  ThreeSquareWitness w = family_xaxb(1);
  CHECK(w.family == Family::Xaxb);
  CHECK(w.map == QuadMap(1, 1, Rational(599, 625)));
  CHECK(w.x0 == Rational(1, 25));
  CHECK(w.roots[0] == Rational(1, 5));
  CHECK(w.roots[1] == Rational(1));
  CHECK(w.roots[2] == Rational(43, 25));
  CHECK(verify_witness(w));
}

TEST_CASE("x^2+ax+b degenerate members") {
  ThreeSquareWitness zero = family_xaxb(0);
  CHECK(zero.map == QuadMap(1, 0, 0));
  CHECK(zero.x0 == Rational(0));
  CHECK(zero.roots == std::array<Rational, 3>{0, 0, 0});
  CHECK(verify_witness(zero));

  ThreeSquareWitness minus = family_xaxb(-1);
  CHECK(minus.map == QuadMap(1, -1, 1));
  CHECK(minus.x0 == Rational(0));
  CHECK(minus.roots == std::array<Rational, 3>{0, 1, 1});
  CHECK(verify_witness(minus));
}

TEST_CASE("x^2+ax+b random parameters verify") {
  std::mt19937 rng(47);
  int done = 0;
  while (done < 100) {
    Rational a = random_param(rng);
    if (a.is_zero()) continue;
    ++done;
    ThreeSquareWitness w = family_xaxb(a);
    CHECK(verify_witness(w));
    CHECK(w.map.B == a);
    CHECK(w.roots[1] == a.abs());
    CHECK(w.map.C == a.square() - w.x0.square() - a * w.x0);
  }
}

TEST_CASE("x^2+ax-a periodic member at alpha = 4") {
  OrbitTriple t = family_xax_minus_a(4);
  CHECK(t.map == QuadMap(1, Rational(-21, 4), Rational(21, 4)));
  CHECK(t.x0 == Rational(4));
  CHECK(t.second == Rational(1, 4));
  CHECK(t.third == Rational(4));
  CHECK(t.roots == std::array<Rational, 2>{Rational(1, 2), Rational(2)});
  REQUIRE(t.root0.has_value());
  CHECK(*t.root0 == Rational(2));
  CHECK(verify_triple(t));

  auto w = t.as_witness();
  REQUIRE(w.has_value());
  CHECK(w->roots == std::array<Rational, 3>{Rational(2), Rational(1, 2), Rational(2)});
  CHECK(verify_witness(*w));
}

TEST_CASE("x^2+ax-a run stops at the fourth iterate for alpha = 2") {
  OrbitTriple t = family_xax_minus_a(2);
  CHECK(t.map == QuadMap(1, 5, -5));
  CHECK(t.x0 == Rational(2));
  CHECK(t.second == Rational(9));
  CHECK(t.third == Rational(121));
  CHECK_FALSE(t.root0.has_value());
  CHECK_FALSE(t.as_witness().has_value());
  CHECK(t.map(t.third) == Rational(15241));
  CHECK_FALSE(sqrt_exact(t.map(t.third)).has_value());
}

TEST_CASE("x^2+ax-a excluded parameters") {
  CHECK_THROWS_AS(family_xax_minus_a(1), DomainError);
  CHECK_THROWS_AS(extend_family_xax_minus_a(1, 2), DomainError);
  CHECK_THROWS_AS(extend_family_xax_minus_a(0, 2), DomainError);
}

TEST_CASE("x^2+ax-a random parameters verify") {
  std::mt19937 rng(53);
  int done = 0;
  while (done < 100) {
    Rational alpha = random_param(rng);
    if (alpha == Rational(1) || (alpha.square() - alpha - 4).is_zero()) continue;
    ++done;
    OrbitTriple t = family_xax_minus_a(alpha);
    CHECK(verify_triple(t));
    CHECK(t.x0 == alpha);
    // defining relation of the family coefficient
    CHECK(t.map.B * (alpha - 1) == t.roots[0].square() - alpha.square());
    CHECK(t.map.C == -t.map.B);
  }
}

TEST_CASE("tampered witnesses fail verification") {
  ThreeSquareWitness w = family_xc(2);
  w.roots[1] += 1;
  CHECK_FALSE(verify_witness(w));

  ThreeSquareWitness w2 = family_xc(2);
  w2.x0 += 1;
  CHECK_FALSE(verify_witness(w2));

  OrbitTriple t = family_xax_minus_a(4);
  t.second += 1;
  CHECK_FALSE(verify_triple(t));
}

TEST_CASE("curve extension at n = 2 reproduces the closed forms") {
  for (const Rational& beta : {Rational(1), Rational(-2), Rational(1, 2), Rational(5, 3)}) {
    CHECK(extend_family_xc(beta, 2) == family_xc(beta));
  }
  for (const Rational& a : {Rational(1), Rational(-2), Rational(3, 2)}) {
    CHECK(extend_family_xaxb(a, 2) == family_xaxb(a));
  }
  for (const Rational& alpha : {Rational(2), Rational(4), Rational(-3)}) {
    CHECK(extend_family_xax_minus_a(alpha, 2) == family_xax_minus_a(alpha));
  }
}

TEST_CASE("curve extension reaches new witnesses at n = 3") {
  ThreeSquareWitness w3 = extend_family_xc(2, 3);
  CHECK(w3.multiple == 3);
  CHECK(verify_witness(w3));
  CHECK(w3.map != family_xc(2).map);

  ThreeSquareWitness v3 = extend_family_xaxb(1, 3);
  CHECK(v3.multiple == 3);
  CHECK(verify_witness(v3));
  CHECK(v3.map.B == Rational(1));

  OrbitTriple t3 = extend_family_xax_minus_a(2, 3);
  CHECK(t3.multiple == 3);
  CHECK(verify_triple(t3));
  CHECK(t3.x0 == Rational(2));
  CHECK(t3.map != family_xax_minus_a(2).map);
}
