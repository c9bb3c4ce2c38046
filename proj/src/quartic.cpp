#include "squarerun/quartic.hpp"

#include "squarerun/polynomial.hpp"

namespace squarerun {

QuarticModel::QuarticModel(std::array<Rational, 5> coeffs, BasePoint base)
    : c_(std::move(coeffs)), base_(std::move(base)) {
  if (c_[0].is_zero()) throw DomainError("quartic model needs degree exactly 4");
  if (discriminant().is_zero()) throw SingularModelError("quartic has a repeated root");
  if (const auto* inf = std::get_if<InfinityBranch>(&base_)) {
    if (inf->slope.is_zero() || inf->slope * inf->slope != q4())
      throw DomainError("infinity branch slope must be a nonzero square root of q4");
  } else {
    const auto& aff = std::get<AffineBase>(base_);
    if (aff.v.is_zero())
      throw DomainError(
          "designated affine point has v = 0; translate to a nonzero square value first");
    if (aff.v * aff.v != eval(aff.u)) throw DomainError("designated point is not on the quartic");
  }
}

Rational QuarticModel::eval(const Rational& u) const {
  Rational acc;
  for (const auto& c : c_) acc = acc * u + c;
  return acc;
}

Rational QuarticModel::invariant_i() const {
  const auto& [a, b, c, d, e] = c_;
  return Rational(12) * a * e - Rational(3) * b * d + c * c;
}

Rational QuarticModel::invariant_j() const {
  const auto& [a, b, c, d, e] = c_;
  return Rational(72) * a * c * e + Rational(9) * b * c * d - Rational(27) * a * d * d -
         Rational(27) * e * b * b - Rational(2) * c.pow(3);
}

Rational QuarticModel::discriminant() const {
  Rational i = invariant_i(), j = invariant_j();
  return (Rational(4) * i.pow(3) - j * j) / Rational(27);
}

std::optional<QuarticModel::AffineBase> find_affine_square_point(
    const std::array<Rational, 5>& coeffs, long bound) {
  UniPoly p({coeffs[4], coeffs[3], coeffs[2], coeffs[1], coeffs[0]});
  auto try_at = [&](const Rational& e) -> std::optional<QuarticModel::AffineBase> {
    Rational value = p.eval(e);
    if (value.is_zero()) return std::nullopt;
    if (auto w = sqrt_exact(value)) return QuarticModel::AffineBase{e, *w};
    return std::nullopt;
  };
  if (auto base = try_at(0)) return base;
  for (long twice = 1; twice <= 2 * bound; ++twice)
    for (long sign : {1L, -1L})
      if (auto base = try_at(Rational(sign * twice, 2))) return base;
  return std::nullopt;
}

BirationalCorrespondence::BirationalCorrespondence(Rational a, Rational b, Rational c, Rational d,
                                                   Rational q, Rational shift, bool inverted)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)), q_(std::move(q)),
      shift_(std::move(shift)), inverted_(inverted),
      curve_(d_ / q_,
             c_ - d_ * d_ / (Rational(4) * q_ * q_),
             Rational(2) * q_ * b_,
             Rational(-4) * q_ * q_ * a_,
             a_ * d_ * d_ - Rational(4) * q_ * q_ * a_ * c_) {
  if (inverted_)
    exceptional_.push_back("affine points with u = " + shift_.str() +
                           " (they sit over the places at infinity of the curve side)");
}

ECPoint BirationalCorrespondence::core_forward(const Rational& u, const Rational& v) const {
  Rational q2 = q_ * q_;
  if (u.is_zero()) {
    if (v == q_) return ECPoint::inf();
    // v = -q: the conjugate of the base place.
    return conjugate_base_image();
  }
  Rational u2 = u * u;
  Rational x = (Rational(2) * q_ * (v + q_) + d_ * u) / u2;
  Rational y = (Rational(4) * q2 * (v + q_) + Rational(2) * q_ * (c_ * u2 + d_ * u) -
                d_ * d_ * u2 / (Rational(2) * q_)) /
               (u2 * u);
  return ECPoint::affine(std::move(x), std::move(y));
}

ECPoint BirationalCorrespondence::conjugate_base_image() const {
  Rational q2 = q_ * q_;
  Rational x = -c_ + d_ * d_ / (Rational(4) * q2);
  Rational y = Rational(-2) * b_ * q_ + c_ * d_ / q_ - d_.pow(3) / (Rational(4) * q_ * q2);
  return ECPoint::affine(std::move(x), std::move(y));
}

BirationalCorrespondence::CorePlace BirationalCorrespondence::core_backward(
    const ECPoint& p) const {
  if (p.infinity) return {false, Rational(0), q_};
  Rational q2 = q_ * q_;
  Rational num = Rational(2) * q_ * (p.x + c_) - d_ * d_ / (Rational(2) * q_);
  Rational u;
  if (!p.y.is_zero()) {
    u = num / p.y;
  } else if (!num.is_zero()) {
    return {true, {}, {}};
  } else {
    // Fiber quadratic over this x has the root u = 0 (the conjugate place);
    // the point here is the other root.
    Rational lead = p.x * p.x - Rational(4) * q2 * a_;
    if (lead.is_zero()) return {true, {}, {}};
    u = (Rational(2) * d_ * p.x + Rational(4) * q2 * b_) / lead;
  }
  Rational v = -q_ + u * (u * p.x - d_) / (Rational(2) * q_);
  return {false, std::move(u), std::move(v)};
}

ECPoint BirationalCorrespondence::forward(const Rational& u, const Rational& v) const {
  Rational us = u - shift_;
  if (!inverted_) return core_forward(us, v);
  if (us.is_zero())
    throw ExceptionalPointError("forward map undefined at u = " + shift_.str() +
                                " (exceptional locus)");
  return core_forward(us.inverse(), v / (us * us));
}

QuarticPlace BirationalCorrespondence::backward(const ECPoint& p) const {
  CorePlace core = core_backward(p);
  QuarticPlace out;
  if (inverted_) {
    if (core.at_infinity) {
      // u_core -> infinity means u - shift -> 0; v is determined only up to
      // sign (it squares to the quartic value at the shift).
      out.u = shift_;
      return out;
    }
    if (core.u.is_zero()) {
      out.at_infinity = true;
      out.branch = core.v == q_ ? q_ : -q_;
      return out;
    }
    Rational inv = core.u.inverse();
    out.u = shift_ + inv;
    out.v = core.v * inv * inv;
    return out;
  }
  if (core.at_infinity) {
    out.at_infinity = true;
    return out;
  }
  out.u = shift_ + core.u;
  out.v = core.v;
  return out;
}

Rational BirationalCorrespondence::pullback_parameter(const ECPoint& p) const {
  QuarticPlace place = backward(p);
  if (place.at_infinity)
    throw ExceptionalPointError(
        "pullback lands at a place at infinity of the quartic (exceptional locus" +
        std::string(place.branch ? ", branch slope " + place.branch->str() : "") + ")");
  return *place.u;
}

BirationalCorrespondence quartic_to_weierstrass(const QuarticModel& model) {
  const auto& q = model.coeffs();
  UniPoly poly({q[4], q[3], q[2], q[1], q[0]});

  if (const auto* inf = std::get_if<QuarticModel::InfinityBranch>(&model.base())) {
    // Invert around a non-root position so the branch at infinity becomes the
    // square constant term of the reversed quartic.
    Rational shift = 0;
    if (q[4].is_zero()) {
      for (long e = 1;; e = e > 0 ? -e : -e + 1) {
        if (!poly.eval(Rational(e)).is_zero()) {
          shift = Rational(e);
          break;
        }
      }
    }
    UniPoly shifted = poly.shifted(shift);
    const auto& s = shifted.coeffs();  // s[i] is the u^i coefficient
    return BirationalCorrespondence(s[0], s[1], s[2], s[3], inf->slope, shift, true);
  }

  const auto& aff = std::get<QuarticModel::AffineBase>(model.base());
  UniPoly shifted = poly.shifted(aff.u);
  const auto& s = shifted.coeffs();
  return BirationalCorrespondence(s[4], s[3], s[2], s[1], aff.v, aff.u, false);
}

}  // namespace squarerun
