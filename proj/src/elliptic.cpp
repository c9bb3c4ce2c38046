#include "squarerun/elliptic.hpp"

namespace squarerun {

LongWeierstrass::LongWeierstrass(Rational a1, Rational a2, Rational a3, Rational a4, Rational a6)
    : a1_(std::move(a1)), a2_(std::move(a2)), a3_(std::move(a3)), a4_(std::move(a4)),
      a6_(std::move(a6)) {
  b2_ = a1_ * a1_ + Rational(4) * a2_;
  b4_ = Rational(2) * a4_ + a1_ * a3_;
  b6_ = a3_ * a3_ + Rational(4) * a6_;
  b8_ = a1_ * a1_ * a6_ + Rational(4) * a2_ * a6_ - a1_ * a3_ * a4_ + a2_ * a3_ * a3_ -
        a4_ * a4_;
  disc_ = -b2_ * b2_ * b8_ - Rational(8) * b4_.pow(3) - Rational(27) * b6_ * b6_ +
          Rational(9) * b2_ * b4_ * b6_;
  if (disc_.is_zero()) throw SingularModelError("Weierstrass model has zero discriminant");
}

Rational LongWeierstrass::c4() const { return b2_ * b2_ - Rational(24) * b4_; }

Rational LongWeierstrass::j_invariant() const { return c4().pow(3) / disc_; }

bool LongWeierstrass::contains(const ECPoint& p) const {
  if (p.infinity) return true;
  Rational lhs = p.y * p.y + a1_ * p.x * p.y + a3_ * p.y;
  Rational rhs = ((p.x + a2_) * p.x + a4_) * p.x + a6_;
  return lhs == rhs;
}

ECPoint ec_neg(const LongWeierstrass& e, const ECPoint& p) {
  if (p.infinity) return p;
  return ECPoint::affine(p.x, -p.y - e.a1() * p.x - e.a3());
}

namespace {

void require_on_curve(const LongWeierstrass& e, const ECPoint& p, const char* who) {
  if (!e.contains(p)) throw DomainError(std::string(who) + ": point is not on the curve");
}

}  // namespace

ECPoint ec_add(const LongWeierstrass& e, const ECPoint& p, const ECPoint& q) {
  require_on_curve(e, p, "ec_add");
  require_on_curve(e, q, "ec_add");
  if (p.infinity) return q;
  if (q.infinity) return p;

  if (p.x == q.x && (p.y + q.y + e.a1() * q.x + e.a3()).is_zero()) return ECPoint::inf();

  Rational lambda, nu;
  if (p.x != q.x) {
    Rational dx = q.x - p.x;
    lambda = (q.y - p.y) / dx;
    nu = (p.y * q.x - q.y * p.x) / dx;
  } else {
    // Tangent line; the denominator is nonzero since P = -P was handled above.
    Rational den = Rational(2) * p.y + e.a1() * p.x + e.a3();
    lambda = (Rational(3) * p.x * p.x + Rational(2) * e.a2() * p.x + e.a4() - e.a1() * p.y) / den;
    nu = (-p.x.pow(3) + e.a4() * p.x + Rational(2) * e.a6() - e.a3() * p.y) / den;
  }
  Rational x3 = lambda * lambda + e.a1() * lambda - e.a2() - p.x - q.x;
  Rational y3 = -(lambda + e.a1()) * x3 - nu - e.a3();
  return ECPoint::affine(std::move(x3), std::move(y3));
}

ECPoint ec_mul(const LongWeierstrass& e, long n, const ECPoint& p) {
  require_on_curve(e, p, "ec_mul");
  ECPoint base = n < 0 ? ec_neg(e, p) : p;
  unsigned long k = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
  ECPoint acc = ECPoint::inf();
  while (k > 0) {
    if (k & 1) acc = ec_add(e, acc, base);
    k >>= 1;
    if (k > 0) base = ec_add(e, base, base);
  }
  return acc;
}

unsigned torsion_annihilator(const LongWeierstrass& e, const ECPoint& p) {
  require_on_curve(e, p, "torsion_annihilator");
  ECPoint acc = ECPoint::inf();
  for (unsigned n = 1; n <= 12; ++n) {
    acc = ec_add(e, acc, p);
    if (acc.infinity) return n;
  }
  return 0;
}

bool mazur_infinite_order(const LongWeierstrass& e, const ECPoint& p) {
  if (p.infinity) throw DomainError("mazur_infinite_order: the origin has order 1");
  return torsion_annihilator(e, p) == 0;
}

}  // namespace squarerun
