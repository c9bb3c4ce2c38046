#include "squarerun/quadmap.hpp"

namespace squarerun {

QuadMap::QuadMap(Rational a, Rational b, Rational c)
    : A(std::move(a)), B(std::move(b)), C(std::move(c)) {
  if (A.is_zero()) throw DomainError("quadratic map needs a nonzero leading coefficient");
}

NormalForm conjugate_to_normal(const QuadMap& f) {
  if (!f.is_monic()) throw DomainError("conjugate_to_normal needs a monic map");
  Rational half_b = f.B / Rational(2);
  return NormalForm{f.C - half_b * half_b + half_b, half_b};
}

bool is_irreducible(const QuadMap& f) { return !is_square(f.discriminant()); }

DegeneracyClass classify_degeneracy(const Rational& a, const Rational& b, const Rational& c) {
  if (a.is_zero()) return {DegeneracyKind::NotQuadratic, {}};
  if ((b * b - Rational(4) * a * c).is_zero()) return {DegeneracyKind::ZeroDiscriminant, {}};
  if (b.is_zero() && c == -a.inverse()) return {DegeneracyKind::QuadraticMinusReciprocal, {}};
  if (b == Rational(4) && c.is_zero()) return {DegeneracyKind::FourXNoConstant, {}};
  if (auto s = sqrt_exact(Rational(1) + Rational(2) * b); s && !s->is_zero()) {
    Rational base = b * b - Rational(2) * b - Rational(2);
    Rational four_ac = Rational(4) * a * c;
    for (const Rational& root : {*s, -*s})
      if (four_ac == base + Rational(2) * root)
        return {DegeneracyKind::OnePlusTwoBSquare, root};
  }
  return {DegeneracyKind::NonDegenerate, {}};
}

DegeneracyClass classify_degeneracy(const QuadMap& f) {
  return classify_degeneracy(f.A, f.B, f.C);
}

const char* degeneracy_kind_name(DegeneracyKind k) {
  switch (k) {
    case DegeneracyKind::NonDegenerate: return "non-degenerate";
    case DegeneracyKind::NotQuadratic: return "not-quadratic";
    case DegeneracyKind::ZeroDiscriminant: return "zero-discriminant";
    case DegeneracyKind::QuadraticMinusReciprocal: return "quadratic-minus-reciprocal";
    case DegeneracyKind::FourXNoConstant: return "four-x-no-constant";
    case DegeneracyKind::OnePlusTwoBSquare: return "one-plus-2b-square";
  }
  return "?";
}

}  // namespace squarerun
