#include "squarerun/surface.hpp"

#include <random>

#include "doctest.h"
#include "squarerun/errors.hpp"

using namespace squarerun;

namespace {

const SurfacePoint kKnown{Rational(3, 8), Rational(9, 8), Rational(27, 16),
                          Rational(783, 256)};

}  // namespace

TEST_CASE("surface membership") {
  CHECK(on_surface(kKnown));
  SurfacePoint flipped = kKnown;
  flipped.z = -flipped.z;
  CHECK(on_surface(flipped));
  CHECK_FALSE(on_surface({1, 2, 3, 4}));
  for (const Rational& t : {Rational(1), Rational(-2), Rational(1, 2)}) {
    CHECK(on_surface({t, t, t, t}));
    CHECK(is_trivial_point({t, -t, t, -t}));
  }
  CHECK_FALSE(is_trivial_point(kKnown));
}

TEST_CASE("certification of a known nontrivial point") {
  FourSquareHit hit = certify_surface_point(kKnown, "manual");
  CHECK(hit.c == Rational(5103, 4096));
  CHECK(hit.x0_sq == Rational(9, 64));
  CHECK(hit.run.run_length == 4);
  CHECK_FALSE(hit.run.truncated);
  CHECK(hit.run.roots ==
        std::vector<Rational>{Rational(3, 8), Rational(9, 8), Rational(27, 16),
                              Rational(783, 256)});
  CHECK_FALSE(hit.trivial);
  CHECK(hit.source == "manual");
}

TEST_CASE("certification of a trivial fixed point") {
  FourSquareHit hit = certify_surface_point({1, 1, 1, 1});
  CHECK(hit.c == Rational(0));
  CHECK(hit.trivial);
  CHECK(hit.run.run_length == 16);
  CHECK(hit.run.truncated);
}

TEST_CASE("certification rejects off-surface input") {
  CHECK_THROWS_AS(certify_surface_point({1, 2, 3, 4}), ConsistencyError);
}

TEST_CASE("form expansion agrees with the staged pipeline") {
  CHECK(four_square_form(1, 1, 1) == Rational(256));
  CHECK(four_square_form(1, 0, 0) == Rational(0));
  CHECK(four_square_form_pipeline(1, 1, 1) == Rational(256));
  CHECK(four_square_form_pipeline(1, 0, 1) == Rational(81));

  std::mt19937 rng(59);
  std::uniform_int_distribution<long> coord(-20, 20);
  for (int i = 0; i < 200; ++i) {
    Rational p = coord(rng), q = coord(rng), r = coord(rng);
    CHECK(four_square_form(p, q, r) == four_square_form_pipeline(p, q, r));
  }
}

TEST_CASE("the form is even of degree eight") {
  std::mt19937 rng(61);
  std::uniform_int_distribution<long> coord(-9, 9);
  for (int i = 0; i < 40; ++i) {
    Rational p = coord(rng), q = coord(rng), r = coord(rng);
    Rational base = four_square_form(p, q, r);
    CHECK(four_square_form(-p, -q, -r) == base);
    CHECK(four_square_form(2 * p, 2 * q, 2 * r) == Rational(256) * base);
    CHECK(four_square_form(3 * p, 3 * q, 3 * r) == Rational(6561) * base);
  }
}

TEST_CASE("fixed-y search validates its arguments") {
  SearchConfig cfg;
  CHECK_THROWS_AS(search_fixed_y(0, cfg), DomainError);
  cfg.box = 0;
  CHECK_THROWS_AS(search_fixed_y(1, cfg), DomainError);
  CHECK_THROWS_AS(search_form_fourth_power(cfg), DomainError);
}

TEST_CASE("fixed-y search at y = 1 sees only the trivial line") {
  SearchConfig cfg;
  cfg.box = 3;
  CHECK(search_fixed_y(1, cfg).empty());

  cfg.include_trivial = true;
  auto hits = search_fixed_y(1, cfg);
  CHECK_FALSE(hits.empty());
  for (const auto& h : hits) {
    CHECK(h.trivial);
    CHECK(h.point.y == Rational(1));
    CHECK(on_surface(h.point));
  }
}

TEST_CASE("fixed-y search reproduces the known deep point") {
  SearchConfig cfg;
  cfg.box = 8;
  auto hits = search_fixed_y(Rational(9, 8), cfg);
  REQUIRE(hits.size() == 2);

  CHECK(hits[0].point == SurfacePoint{Rational(3, 8), Rational(9, 8), Rational(27, 16),
                                      Rational(783, 256)});
  CHECK(hits[0].source == "fixed_y y=9/8 slope=-7/3");
  CHECK(hits[1].point == SurfacePoint{Rational(3, 8), Rational(9, 8), Rational(-27, 16),
                                      Rational(783, 256)});
  CHECK(hits[1].source == "fixed_y y=9/8 slope=1/3");

  for (const auto& h : hits) {
    CHECK(h.c == Rational(5103, 4096));
    CHECK(h.x0_sq == Rational(9, 64));
    CHECK(h.run.run_length == 4);
    CHECK(h.x0_sq == h.point.x.square());
    CHECK(h.point.x.sign() == 1);
    CHECK_FALSE(h.trivial);
  }
}

TEST_CASE("fixed-y hit order does not depend on the shard count") {
  SearchConfig cfg;
  cfg.box = 8;
  auto one = search_fixed_y(Rational(9, 8), cfg);
  cfg.shards = 3;
  auto three = search_fixed_y(Rational(9, 8), cfg);
  cfg.shards = 7;
  auto seven = search_fixed_y(Rational(9, 8), cfg);
  CHECK(one == three);
  CHECK(one == seven);
}

TEST_CASE("grid search concatenates rows in order") {
  SearchConfig cfg;
  cfg.box = 8;
  cfg.y_grid = {Rational(1), Rational(9, 8)};
  auto grid = search_grid(cfg);
  auto expected = search_fixed_y(Rational(1), cfg);
  auto second = search_fixed_y(Rational(9, 8), cfg);
  expected.insert(expected.end(), second.begin(), second.end());
  CHECK(grid == expected);
}

TEST_CASE("form search in the unit box finds the trivial solution") {
  SearchConfig cfg;
  cfg.box = 1;
  cfg.include_trivial = true;
  FormSearchResult res = search_form_fourth_power(cfg);
  REQUIRE_FALSE(res.hits.empty());
  CHECK(res.candidates == res.rejected + res.hits.size());

  bool saw_half = false;
  for (const auto& h : res.hits) {
    CHECK(h.trivial);
    CHECK(on_surface(h.point));
    if (h.point == SurfacePoint{Rational(1, 2), Rational(1, 2), Rational(1, 2),
                                Rational(1, 2)}) {
      saw_half = true;
      CHECK(h.c == Rational(3, 16));
    }
  }
  CHECK(saw_half);

  cfg.include_trivial = false;
  CHECK(search_form_fourth_power(cfg).hits.empty());
}

TEST_CASE("form search is shard independent") {
  SearchConfig cfg;
  cfg.box = 2;
  cfg.include_trivial = true;
  FormSearchResult one = search_form_fourth_power(cfg);
  cfg.shards = 4;
  FormSearchResult four = search_form_fourth_power(cfg);
  CHECK(one.hits == four.hits);
  CHECK(one.candidates == four.candidates);
  CHECK(one.rejected == four.rejected);
}

TEST_CASE("a zero start value is blocked by torsion") {
  ZeroStartReport rep = zero_start_obstruction();
  CHECK(rep.quartic == std::array<Rational, 5>{1, 2, 1, 1, 0});
  CHECK_FALSE(rep.quartic_discriminant.is_zero());
  CHECK(rep.image == ECPoint::affine(-4, 0));
  CHECK(rep.annihilator == 3);
  CHECK_FALSE(rep.infinite_order);
}
