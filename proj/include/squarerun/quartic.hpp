#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "squarerun/elliptic.hpp"
#include "squarerun/rational.hpp"

namespace squarerun {

// Genus-1 quartic model v^2 = q4 u^4 + q3 u^3 + q2 u^2 + q1 u + q0 with a
// designated rational point: either one of the two places at infinity
// (rational iff q4 is a nonzero square; the branch is named by the limit
// slope v/u^2 -> +-sqrt(q4)) or an affine point with nonzero v.
class QuarticModel {
 public:
  struct InfinityBranch {
    Rational slope;  // slope^2 = q4, slope != 0
  };
  struct AffineBase {
    Rational u, v;  // v^2 = quartic(u), v != 0
  };
  using BasePoint = std::variant<InfinityBranch, AffineBase>;

  // coeffs are (q4, q3, q2, q1, q0), highest degree first.
  // Rejects q4 = 0, singular quartics (repeated roots), and invalid bases;
  // an affine base with v = 0 is rejected with a hint to translate first.
  QuarticModel(std::array<Rational, 5> coeffs, BasePoint base);

  const std::array<Rational, 5>& coeffs() const { return c_; }
  const Rational& q4() const { return c_[0]; }
  const BasePoint& base() const { return base_; }

  Rational eval(const Rational& u) const;

  // Classical invariants of the binary quartic; disc = (4 I^3 - J^2)/27.
  Rational invariant_i() const;
  Rational invariant_j() const;
  Rational discriminant() const;

 private:
  std::array<Rational, 5> c_;
  BasePoint base_;
};

// Bounded search for an affine point (e, w), w != 0, with e running over
// integers and half-integers of magnitude at most `bound`.  This is the
// fallback for quartics whose natural marked point has v = 0; absence is a
// real possibility (a rank-0 model may have no such point at all).
std::optional<QuarticModel::AffineBase> find_affine_square_point(
    const std::array<Rational, 5>& coeffs, long bound = 8);

// Position on a quartic model as produced by pulling a curve point back:
// an affine u (with v when the inverse map determines it) or a place at
// infinity (with the branch slope when determined).
struct QuarticPlace {
  bool at_infinity = false;
  std::optional<Rational> u;
  std::optional<Rational> v;
  std::optional<Rational> branch;
};

// Birational correspondence between a quartic model and its Weierstrass
// curve.  The designated base point maps to the group origin.  Both maps
// round-trip exactly away from the (finite, stored) exceptional loci.
class BirationalCorrespondence {
 public:
  const LongWeierstrass& curve() const { return curve_; }

  // Image of the affine quartic point (u, v); requires v^2 = quartic(u).
  ECPoint forward(const Rational& u, const Rational& v) const;

  // The base point maps to the origin; its conjugate (the opposite infinity
  // branch, or (u0, -v0)) maps to this distinguished affine point.
  ECPoint base_image() const { return ECPoint::inf(); }
  ECPoint conjugate_base_image() const;

  QuarticPlace backward(const ECPoint& p) const;

  // Affine u-coordinate of backward(p); a place at infinity raises
  // ExceptionalPointError naming the locus.
  Rational pullback_parameter(const ECPoint& p) const;

  const std::vector<std::string>& exceptional_points() const { return exceptional_; }

 private:
  friend BirationalCorrespondence quartic_to_weierstrass(const QuarticModel& model);

  BirationalCorrespondence(Rational a, Rational b, Rational c, Rational d, Rational q,
                           Rational shift, bool inverted);

  struct CorePlace {
    bool at_infinity = false;
    Rational u, v;
  };
  ECPoint core_forward(const Rational& u, const Rational& v) const;
  CorePlace core_backward(const ECPoint& p) const;

  // v^2 = a u^4 + b u^3 + c u^2 + d u + q^2 after the pre-transform
  // u_core = inverted ? 1/(u - shift) : u - shift.
  Rational a_, b_, c_, d_, q_;
  Rational shift_;
  bool inverted_;
  LongWeierstrass curve_;
  std::vector<std::string> exceptional_;
};

BirationalCorrespondence quartic_to_weierstrass(const QuarticModel& model);

}  // namespace squarerun
