#pragma once

#include <vector>

#include "squarerun/rational.hpp"

namespace squarerun {

// Dense univariate polynomial over Q, coefficients stored lowest degree
// first with no trailing zero.  The zero polynomial has an empty vector
// and degree -1.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs_low_first);

  static UniPoly constant(const Rational& c);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  // Coefficient of x^i, zero beyond the degree.
  const Rational& coeff(std::size_t i) const;
  const Rational& leading() const;

  Rational eval(const Rational& x) const;

  // p(x + e), by repeated synthetic division.
  UniPoly shifted(const Rational& e) const;

  UniPoly operator*(const Rational& s) const;
  UniPoly operator+(const UniPoly& o) const;

  bool operator==(const UniPoly& o) const { return c_ == o.c_; }

 private:
  std::vector<Rational> c_;
};

// All rational roots, exactly, without multiplicity, sorted ascending.
// Clears denominators and applies the rational root theorem; candidate
// divisors come from full integer factorization, so large leading or
// constant coefficients are fine as long as they factor in reasonable time.
std::vector<Rational> rational_roots(const UniPoly& p);

// Prime factorization of a positive integer as (prime, exponent) pairs,
// primes ascending.  Trial division for small primes, then Pollard rho.
std::vector<std::pair<mpz_class, unsigned>> factor_integer(const mpz_class& n);

// All positive divisors of a positive integer, ascending.
std::vector<mpz_class> divisors(const mpz_class& n);

}  // namespace squarerun
