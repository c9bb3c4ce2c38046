#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "squarerun/errors.hpp"

namespace squarerun {

// Exact rational number, always held in canonical form: gcd(|num|, den) = 1
// and den > 0.  Thin value wrapper around mpq_class; every operation that
// could leave a non-canonical value re-canonicalizes.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design, small literals are pervasive
  Rational(long num, long den);
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(const mpz_class& n) : v_(n) {}
  explicit Rational(mpq_class q);

  // Accepts "123", "-4/9", "+7/3".  Denominator must be positive and nonzero;
  // whitespace and any other decoration are rejected.
  static Rational parse(std::string_view text);

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_negative() const { return sgn(v_) < 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  Rational abs() const { return Rational(mpq_class(::abs(v_))); }
  Rational square() const { return *this * *this; }
  Rational pow(unsigned e) const;
  // Negative exponents invert; throws DomainError on 0^negative.
  Rational pow_int(long e) const;
  Rational inverse() const;

  // Naive height max(|num|, den), the usual search/enumeration measure.
  mpz_class height() const;
  // Bits of num plus bits of den; the orbit growth guard works in these units.
  std::size_t bit_size() const;

  // "num/den", or just "num" for integers.
  std::string str() const;

  std::size_t hash() const;

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Floor square root of a nonnegative integer, with exactness flag.
// Throws DomainError for negative input.
struct IntSqrt {
  mpz_class root;
  bool exact;
};
IntSqrt int_sqrt(const mpz_class& n);

// The nonnegative rational square root, if the argument is a perfect square
// in lowest terms (numerator and denominator both integer squares).
std::optional<Rational> sqrt_exact(const Rational& q);

inline bool is_square(const Rational& q) { return sqrt_exact(q).has_value(); }

}  // namespace squarerun

template <>
struct std::hash<squarerun::Rational> {
  std::size_t operator()(const squarerun::Rational& r) const noexcept { return r.hash(); }
};
