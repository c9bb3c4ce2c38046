#pragma once

#include <array>
#include <string>
#include <vector>

#include "squarerun/elliptic.hpp"
#include "squarerun/orbit.hpp"
#include "squarerun/rational.hpp"

namespace squarerun {

// Rational point on the intersection z^2 + x^4 = y^2 + y^4 and
// w^2 + y^4 = z^2 + z^4.  Such a point encodes four consecutive squares
// x^2, y^2, z^2, w^2 in the orbit of x^2 under x^2 + (y^2 - x^4).
struct SurfacePoint {
  Rational x, y, z, w;

  bool operator==(const SurfacePoint&) const = default;
};

bool on_surface(const SurfacePoint& pt);

// |x| = |y| = |z| = |w|: the line of points whose orbit is a fixed point,
// yielding no four distinct consecutive squares.
bool is_trivial_point(const SurfacePoint& pt);

struct FourSquareHit {
  SurfacePoint point;
  Rational c;
  Rational x0_sq;
  SquareRunReport run;
  bool trivial = false;
  std::string source;

  bool operator==(const FourSquareHit&) const = default;
};

// End-to-end verification of the orbit encoded by a surface point: derives
// c = y^2 - x^4 and reruns the square-run scan, demanding length >= 4.
// Throws ConsistencyError off the surface or on a failed rerun.
FourSquareHit certify_surface_point(const SurfacePoint& pt, std::string source = {},
                                    unsigned max_run = 16);

// Degree-8 form in (p, q, r) whose positive fourth-power values lead to
// surface points; the explicit 42-term expansion.
Rational four_square_form(const Rational& p, const Rational& q, const Rational& r);

// The same value assembled through the degree-2 forms: y^2 T + y^4 - T Zsq.
Rational four_square_form_pipeline(const Rational& p, const Rational& q, const Rational& r);

struct SearchConfig {
  std::vector<Rational> y_grid;
  long box = 8;
  bool coprime_only = true;
  bool include_trivial = false;
  unsigned shards = 1;
};

// Chord-slope scan of the circle z^2 + X^2 = y^2 + y^4 at fixed nonzero y,
// slopes p/s with 1 <= s <= box and |p| <= box.  Every emitted hit has been
// re-verified end to end, and the hit order depends only on the config, not
// on the shard count.
std::vector<FourSquareHit> search_fixed_y(const Rational& y, const SearchConfig& cfg);

// All grid rows of cfg.y_grid, in order.
std::vector<FourSquareHit> search_grid(const SearchConfig& cfg);

struct FormSearchResult {
  std::vector<FourSquareHit> hits;
  // Triples whose form value is a positive perfect square.
  unsigned long long candidates = 0;
  // Candidates that failed dehomogenization or full verification.
  unsigned long long rejected = 0;
};

// Integer (p, q, r) box scan for square values of the form; candidates are
// dehomogenized by T and accepted solely on full orbit verification.
FormSearchResult search_form_fourth_power(const SearchConfig& cfg);

// The x0 = 0 obstruction: a zero start value forces w^2 = c + c^2 + 2c^3 + c^4,
// and on that curve the image of (c, w) = (0, 0) is torsion, so no orbit with
// four consecutive squares starts at 0.
struct ZeroStartReport {
  std::array<Rational, 5> quartic;
  Rational quartic_discriminant;
  ECPoint image;
  unsigned annihilator = 0;
  bool infinite_order = false;
};

ZeroStartReport zero_start_obstruction();

}  // namespace squarerun
