#pragma once

#include <optional>

#include "squarerun/rational.hpp"

namespace squarerun {

// f(x) = A x^2 + B x + C with A != 0.
struct QuadMap {
  Rational A, B, C;

  QuadMap(Rational a, Rational b, Rational c);

  static QuadMap normal(const Rational& c) { return QuadMap(1, 0, c); }

  Rational operator()(const Rational& x) const { return (A * x + B) * x + C; }

  bool is_monic() const { return A == Rational(1); }
  bool is_normal() const { return is_monic() && B.is_zero(); }
  Rational discriminant() const { return B * B - Rational(4) * A * C; }

  bool operator==(const QuadMap& o) const { return A == o.A && B == o.B && C == o.C; }
};

// Conjugation data for a monic map: with y = x + shift, the map becomes
// y^2 + c.  Orbits correspond term by term under the shift.
struct NormalForm {
  Rational c;
  Rational shift;
};

// Monic maps only; throws DomainError otherwise.
NormalForm conjugate_to_normal(const QuadMap& f);

// True when A x^2 + B x + C has no rational root, i.e. the discriminant is
// not a rational square.
bool is_irreducible(const QuadMap& f);

// Classification of the coefficient loci where orbits with three consecutive
// squares come for free (so the finiteness question is vacuous there).
// Checks run in the listed order and the first match wins; a generic
// coefficient triple falls through to NonDegenerate.
enum class DegeneracyKind {
  NonDegenerate,
  NotQuadratic,             // a = 0
  ZeroDiscriminant,         // b^2 - 4ac = 0, the map is a scaled square of a linear form
  QuadraticMinusReciprocal, // b = 0 and c = -1/a
  FourXNoConstant,          // b = 4 and c = 0
  OnePlusTwoBSquare,        // 1 + 2b a nonzero square s^2 and
                            // 4ac = b^2 - 2b - 2 + 2s for one of the roots s
};

struct DegeneracyClass {
  DegeneracyKind kind = DegeneracyKind::NonDegenerate;
  // For OnePlusTwoBSquare, the root s of 1 + 2b whose branch matched.
  std::optional<Rational> witness;

  bool degenerate() const { return kind != DegeneracyKind::NonDegenerate; }
};

DegeneracyClass classify_degeneracy(const Rational& a, const Rational& b, const Rational& c);
DegeneracyClass classify_degeneracy(const QuadMap& f);

const char* degeneracy_kind_name(DegeneracyKind k);

}  // namespace squarerun
