#include "squarerun/rational.hpp"

#include <cctype>
#include <ostream>

namespace squarerun {

namespace {

mpq_class make_canonical(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  bool neg = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s))
    throw ParseError("bad rational literal: \"" + std::string(whole) + "\"");
  mpz_class z(std::string(s), 10);
  return neg ? mpz_class(-z) : z;
}

}  // namespace

Rational::Rational(long num, long den) : v_(make_canonical(num, den)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) : v_(make_canonical(num, den)) {}

Rational::Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  mpz_class num = parse_integer(text.substr(0, slash), text);
  std::string_view den_part = text.substr(slash + 1);
  if (!all_digits(den_part))
    throw ParseError("bad rational literal: \"" + std::string(text) + "\"");
  mpz_class den(std::string(den_part), 10);
  if (den == 0) throw ParseError("zero denominator: \"" + std::string(text) + "\"");
  return Rational(num, den);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("rational division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::pow(unsigned e) const {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), e);
  Rational out;
  out.v_ = mpq_class(n, d);  // canonical already: gcd(num,den)=1 survives powering
  return out;
}

Rational Rational::pow_int(long e) const {
  if (e >= 0) return pow(static_cast<unsigned>(e));
  return inverse().pow(static_cast<unsigned>(-e));
}

Rational Rational::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  mpq_class inv;
  mpq_inv(inv.get_mpq_t(), v_.get_mpq_t());
  return Rational(std::move(inv));
}

mpz_class Rational::height() const {
  mpz_class n(::abs(v_.get_num()));
  mpz_class d(v_.get_den());
  return n > d ? n : d;
}

std::size_t Rational::bit_size() const {
  return mpz_sizeinbase(mpq_numref(v_.get_mpq_t()), 2) +
         mpz_sizeinbase(mpq_denref(v_.get_mpq_t()), 2);
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::size_t Rational::hash() const {
  auto fold = [](std::size_t seed, mpz_srcptr z) {
    std::size_t h = seed ^ static_cast<std::size_t>(mpz_sgn(z) + 2);
    const mp_limb_t* limbs = mpz_limbs_read(z);
    for (std::size_t i = 0; i < mpz_size(z); ++i)
      h = h * 1099511628211ULL ^ static_cast<std::size_t>(limbs[i]);
    return h;
  };
  std::size_t h = fold(14695981039346656037ULL, mpq_numref(v_.get_mpq_t()));
  return fold(h, mpq_denref(v_.get_mpq_t()));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

IntSqrt int_sqrt(const mpz_class& n) {
  if (n < 0) throw DomainError("int_sqrt of negative integer");
  IntSqrt out;
  mpz_class rem;
  mpz_sqrtrem(out.root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
  out.exact = rem == 0;
  return out;
}

std::optional<Rational> sqrt_exact(const Rational& q) {
  if (q.is_negative()) return std::nullopt;
  IntSqrt n = int_sqrt(q.num());
  if (!n.exact) return std::nullopt;
  IntSqrt d = int_sqrt(q.den());
  if (!d.exact) return std::nullopt;
  return Rational(n.root, d.root);
}

}  // namespace squarerun
