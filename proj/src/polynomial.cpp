#include "squarerun/polynomial.hpp"

#include <algorithm>
#include <map>

namespace squarerun {

UniPoly::UniPoly(std::vector<Rational> coeffs_low_first) : c_(std::move(coeffs_low_first)) {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::constant(const Rational& c) { return UniPoly({c}); }

const Rational& UniPoly::coeff(std::size_t i) const {
  static const Rational zero;
  return i < c_.size() ? c_[i] : zero;
}

const Rational& UniPoly::leading() const {
  if (c_.empty()) throw DomainError("leading coefficient of zero polynomial");
  return c_.back();
}

Rational UniPoly::eval(const Rational& x) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::shifted(const Rational& e) const {
  std::vector<Rational> c = c_;
  if (c.size() < 2) return UniPoly(c);
  for (std::size_t k = 0; k + 1 < c.size(); ++k)
    for (std::size_t j = c.size() - 1; j-- > k;) c[j] += e * c[j + 1];
  return UniPoly(c);
}

UniPoly UniPoly::operator*(const Rational& s) const {
  std::vector<Rational> c = c_;
  for (auto& x : c) x *= s;
  return UniPoly(c);
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<Rational> c(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) + o.coeff(i);
  return UniPoly(c);
}

namespace {

bool miller_rabin(const mpz_class& n) { return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0; }

mpz_class pollard_rho(const mpz_class& n, unsigned long seed) {
  // Brent's cycle variant; n is odd, composite, not a prime power of 2.
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(seed);
  while (true) {
    mpz_class y = rng.get_z_range(n - 3) + 2;
    mpz_class c = rng.get_z_range(n - 1) + 1;
    mpz_class x = y, q = 1, g = 1, ys = y;
    const unsigned long m = 128;
    unsigned long r = 1;
    while (g == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
      for (unsigned long k = 0; k < r && g == 1; k += m) {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = (y * y + c) % n;
          q = q * (x > y ? x - y : y - x) % n;
        }
        g = gcd(q, n);
      }
      r *= 2;
    }
    if (g == n) {
      g = 1;
      while (g == 1) {
        ys = (ys * ys + c) % n;
        g = gcd(x > ys ? x - ys : ys - x, n);
      }
    }
    if (g != n) return g;
  }
}

void factor_into(const mpz_class& n, std::map<mpz_class, unsigned>& out, unsigned long depth) {
  if (n == 1) return;
  if (miller_rabin(n)) {
    ++out[n];
    return;
  }
  mpz_class d = pollard_rho(n, 0x5eed + depth);
  factor_into(d, out, depth + 1);
  factor_into(n / d, out, depth + 1);
}

}  // namespace

std::vector<std::pair<mpz_class, unsigned>> factor_integer(const mpz_class& n) {
  if (n <= 0) throw DomainError("factor_integer needs a positive integer");
  std::map<mpz_class, unsigned> acc;
  mpz_class m = n;
  for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul}) {
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      ++acc[mpz_class(p)];
      m /= static_cast<long>(p);
    }
  }
  for (unsigned long p = 17; p < 10000 && m > 1; p += 2) {
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      ++acc[mpz_class(p)];
      m /= static_cast<long>(p);
    }
  }
  if (m > 1) factor_into(m, acc, 0);
  return {acc.begin(), acc.end()};
}

std::vector<mpz_class> divisors(const mpz_class& n) {
  std::vector<mpz_class> out{1};
  for (const auto& [p, e] : factor_integer(n)) {
    std::size_t base = out.size();
    mpz_class pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Rational> rational_roots(const UniPoly& p) {
  if (p.is_zero()) throw DomainError("rational_roots of the zero polynomial");
  std::vector<Rational> roots;
  // Clear denominators to a primitive integer polynomial.
  mpz_class lcm_den = 1;
  for (const auto& c : p.coeffs()) lcm_den = lcm(lcm_den, c.den());
  std::vector<mpz_class> ic;
  ic.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) ic.push_back(c.num() * (lcm_den / c.den()));
  // Strip x^k so the constant term is nonzero.
  std::size_t low = 0;
  while (low < ic.size() && ic[low] == 0) ++low;
  if (low > 0) roots.emplace_back(0);
  ic.erase(ic.begin(), ic.begin() + static_cast<long>(low));
  if (ic.size() <= 1) {
    std::sort(roots.begin(), roots.end());
    return roots;
  }
  const auto num_divs = divisors(abs(ic.front()));
  const auto den_divs = divisors(abs(ic.back()));
  auto eval_int = [&ic](const Rational& x) {
    Rational acc;
    for (auto it = ic.rbegin(); it != ic.rend(); ++it) acc = acc * x + Rational(*it);
    return acc;
  };
  for (const auto& r : num_divs) {
    for (const auto& s : den_divs) {
      if (gcd(r, s) != 1) continue;
      Rational cand(r, s);
      if (eval_int(cand).is_zero()) roots.push_back(cand);
      if (eval_int(-cand).is_zero()) roots.push_back(-cand);
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace squarerun
