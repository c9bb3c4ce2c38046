#pragma once

#include "squarerun/rational.hpp"

namespace squarerun {

// Point on a long Weierstrass model: the origin at infinity or an affine pair.
struct ECPoint {
  bool infinity = true;
  Rational x, y;

  static ECPoint inf() { return {}; }
  static ECPoint affine(Rational x, Rational y) { return {false, std::move(x), std::move(y)}; }

  bool operator==(const ECPoint& o) const {
    if (infinity != o.infinity) return false;
    return infinity || (x == o.x && y == o.y);
  }
};

// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6, nonsingular.
class LongWeierstrass {
 public:
  LongWeierstrass(Rational a1, Rational a2, Rational a3, Rational a4, Rational a6);

  const Rational& a1() const { return a1_; }
  const Rational& a2() const { return a2_; }
  const Rational& a3() const { return a3_; }
  const Rational& a4() const { return a4_; }
  const Rational& a6() const { return a6_; }

  const Rational& discriminant() const { return disc_; }
  Rational c4() const;
  Rational j_invariant() const;

  bool contains(const ECPoint& p) const;

 private:
  Rational a1_, a2_, a3_, a4_, a6_;
  Rational b2_, b4_, b6_, b8_;
  Rational disc_;
};

ECPoint ec_neg(const LongWeierstrass& e, const ECPoint& p);
ECPoint ec_add(const LongWeierstrass& e, const ECPoint& p, const ECPoint& q);
ECPoint ec_mul(const LongWeierstrass& e, long n, const ECPoint& p);

// Least n in [1, 12] with n*P = infinity, or 0 when there is none.
// A zero return certifies infinite order: rational torsion points have
// order at most 12 (Mazur).
unsigned torsion_annihilator(const LongWeierstrass& e, const ECPoint& p);

// torsion_annihilator(e, p) == 0; rejects the point at infinity.
bool mazur_infinite_order(const LongWeierstrass& e, const ECPoint& p);

}  // namespace squarerun
