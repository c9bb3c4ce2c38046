#include "squarerun/cycles.hpp"

#include <algorithm>
#include <cstddef>
#include <exception>
#include <numeric>
#include <thread>
#include <utility>

#include "squarerun/errors.hpp"
#include "squarerun/orbit.hpp"
#include "squarerun/polynomial.hpp"

namespace squarerun {

namespace {

bool cycles_in_order(const QuadMap& f, const std::vector<Rational>& pts) {
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (f(pts[i]) != pts[(i + 1) % pts.size()]) return false;
  return true;
}

}  // namespace

PoonenCycle poonen_fixed(const Rational& rho) {
  Rational c = Rational(1, 4) - rho.square();
  Rational half(1, 2);
  PoonenCycle out{c, {half + rho}, rho};
  if (!rho.is_zero()) out.points.push_back(half - rho);
  QuadMap f = QuadMap::normal(c);
  for (const Rational& x : out.points)
    if (f(x) != x) throw ConsistencyError("fixed-point parametrization failed");
  return out;
}

PoonenCycle poonen_two_cycle(const Rational& sigma) {
  if (sigma.is_zero()) throw DomainError("two-cycle parameter must be nonzero");
  Rational c = Rational(-3, 4) - sigma.square();
  Rational mhalf(-1, 2);
  PoonenCycle out{c, {mhalf + sigma, mhalf - sigma}, sigma};
  if (!cycles_in_order(QuadMap::normal(c), out.points))
    throw ConsistencyError("two-cycle parametrization failed");
  return out;
}

PoonenCycle poonen_three_cycle(const Rational& tau) {
  if (tau.is_zero() || tau == Rational(-1))
    throw DomainError("three-cycle parameter must avoid 0 and -1");
  Rational t2 = tau.square();
  Rational t3 = t2 * tau;
  Rational num = t3 * t3 + 2 * t3 * t2 + 4 * t2 * t2 + 8 * t3 + 9 * t2 + 4 * tau + 1;
  Rational c = -num / (4 * t2 * (tau + 1).square());
  Rational den = 2 * tau * (tau + 1);
  Rational x1 = (t3 + 2 * t2 + tau + 1) / den;
  Rational x2 = (t3 - tau - 1) / den;
  Rational x3 = -(t3 + 2 * t2 + 3 * tau + 1) / den;
  QuadMap f = QuadMap::normal(c);
  std::vector<Rational> pts{x1, x2, x3};
  if (!cycles_in_order(f, pts)) {
    pts = {x1, x3, x2};
    if (!cycles_in_order(f, pts))
      throw ConsistencyError("three-cycle parametrization failed");
  }
  return {c, std::move(pts), tau};
}

bool verify_square_cycle(const SquareCycleWitness& w) {
  if (w.squares.empty() || w.squares.size() != w.roots.size()) return false;
  for (std::size_t i = 0; i < w.squares.size(); ++i)
    if (w.roots[i].square() != w.squares[i]) return false;
  return cycles_in_order(w.map, w.squares);
}

SquareCycleWitness square_two_cycle(const Rational& m, const Rational& k) {
  Rational m2 = m.square();
  Rational k2 = k.square();
  Rational a = Rational(-1) - m2 - k2;
  Rational b = m2 + k2 + m2 * k2;
  SquareCycleWitness w{QuadMap(1, a, b), {m2, k2}, {m.abs(), k.abs()}, {m, k}, m2 == k2};
  if (!verify_square_cycle(w))
    throw ConsistencyError("two-cycle map does not swap the squares");
  return w;
}

Rational square_three_cycle_condition(const Rational& m, const Rational& n,
                                      const Rational& r) {
  Rational m2 = m.square(), n2 = n.square(), r2 = r.square();
  Rational m4 = m2.square(), n4 = n2.square(), r4 = r2.square();
  return m4 * (1 - n2 + r2) + m2 * (-n2 + n4 - r2 * (1 + r2)) + r4 -
         n4 * (Rational(-1) + r2) + n2 * r2 * (Rational(-1) + r2);
}

SquareCycleWitness square_three_cycle_map(const Rational& m, const Rational& n,
                                          const Rational& r) {
  Rational m2 = m.square(), n2 = n.square(), r2 = r.square();
  if (m2 == n2 || m2 == r2 || n2 == r2)
    throw DomainError("square three-cycle needs pairwise distinct squares");
  Rational cond = square_three_cycle_condition(m, n, r);
  if (!cond.is_zero())
    throw DomainError("cycle condition does not vanish, residual " + cond.str());
  Rational m4 = m2.square(), n4 = n2.square(), r4 = r2.square();
  Rational den = (m2 - n2) * (m2 - r2) * (n2 - r2);
  Rational a = (-m4 * m2 + m2 * n4 - n4 * n2 + m4 * r2 + n2 * r4 - r4 * r2) / den;
  Rational b =
      (m4 * m2 * n2 - m4 * n4 + n4 * n2 * r2 - m4 * r4 - n4 * r4 + m2 * r4 * r2) / den;
  SquareCycleWitness w{
      QuadMap(1, a, b), {m2, n2, r2}, {m.abs(), n.abs(), r.abs()}, {m, n, r}, false};
  if (!verify_square_cycle(w))
    throw ConsistencyError("derived map does not cycle the squares");
  return w;
}

std::vector<Rational> recover_tau(const QuadMap& f) {
  Rational c = conjugate_to_normal(f).c;
  UniPoly sextic({Rational(1), Rational(4), 9 + 4 * c, 8 + 8 * c, 4 + 4 * c,
                  Rational(2), Rational(1)});
  return rational_roots(sextic);
}

namespace {

struct CatalogRow {
  const char* a;
  const char* b;
  const char* m;
  const char* n;
  const char* r;
  const char* tau;
};

constexpr CatalogRow kCatalog[] = {
    {"-29/8", "841/256", "7/4", "5/4", "1/4", "-1/2"},
    {"-301/72", "90601/20736", "23/12", "19/12", "5/12", "2"},
    {"-421/72", "177241/20736", "25/12", "17/12", "11/12", "1/2"},
    {"-1849/288", "3418801/331776", "55/24", "49/24", "23/24", "3"},
    {"-74333/4356", "211660729/4743684", "115/66", "47/33", "124/33", "-12"},
};

}  // namespace

bool CatalogReport::all_pass() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const CatalogRowReport& r) { return r.pass; });
}

CatalogReport catalog_check() {
  CatalogReport report;
  int index = 1;
  for (const CatalogRow& row : kCatalog) {
    Rational a = Rational::parse(row.a);
    Rational b = Rational::parse(row.b);
    Rational m = Rational::parse(row.m);
    Rational n = Rational::parse(row.n);
    Rational r = Rational::parse(row.r);
    Rational tau = Rational::parse(row.tau);
    QuadMap f(1, a, b);
    CatalogRowReport out{index, f, {m, n, r}, tau, {}, true, {}};
    auto fail = [&out](const char* what) {
      out.pass = false;
      out.failures.push_back(what);
    };

    Rational m2 = m.square(), n2 = n.square(), r2 = r.square();
    if (!(f(m2) == n2 && f(n2) == r2 && f(r2) == m2)) fail("printed cycle");
    if (!square_three_cycle_condition(m, n, r).is_zero()) fail("cycle condition");
    try {
      SquareCycleWitness w = square_three_cycle_map(m, n, r);
      if (!(w.map.B == a && w.map.C == b)) fail("recomputed coefficients");
    } catch (const Error&) {
      fail("recomputed coefficients");
    }
    out.recovered_tau = recover_tau(f);
    if (std::find(out.recovered_tau.begin(), out.recovered_tau.end(), tau) ==
        out.recovered_tau.end())
      fail("parameter recovery");
    try {
      PoonenCycle pc = poonen_three_cycle(tau);
      NormalForm nf = conjugate_to_normal(f);
      std::vector<Rational> shifted{m2 + nf.shift, n2 + nf.shift, r2 + nf.shift};
      std::vector<Rational> expected = pc.points;
      std::sort(shifted.begin(), shifted.end());
      std::sort(expected.begin(), expected.end());
      if (pc.c != nf.c || shifted != expected) fail("normal-form cycle");
    } catch (const Error&) {
      fail("normal-form cycle");
    }
    Orbit orbit = detect_cycle(f, m2);
    if (orbit.truncated || orbit.tail_length != 0 || orbit.cycle_length != 3)
      fail("exact period");

    report.rows.push_back(std::move(out));
    ++index;
  }
  return report;
}

std::vector<SquareCycleWitness> square_cycle_search(long height_bound,
                                                    unsigned shards) {
  if (height_bound < 1) throw DomainError("height bound must be positive");
  if (shards == 0) shards = 1;

  std::vector<Rational> values;
  for (long q = 1; q <= height_bound; ++q)
    for (long p = 0; p <= 2 * height_bound; ++p)
      if (std::gcd(p, q) == 1) values.emplace_back(p, q);
  const std::size_t n_values = values.size();
  const std::size_t total = n_values * n_values * n_values;

  using Found = std::pair<std::size_t, SquareCycleWitness>;
  std::vector<std::vector<Found>> found(shards);

  auto scan = [&](unsigned shard) {
    for (std::size_t idx = shard; idx < total; idx += shards) {
      const Rational& m = values[idx / (n_values * n_values)];
      const Rational& n = values[(idx / n_values) % n_values];
      const Rational& r = values[idx % n_values];
      Rational m2 = m.square(), n2 = n.square(), r2 = r.square();
      if (m2 == n2 || m2 == r2 || n2 == r2) continue;
      // one representative per cycle: values are nonnegative and pairwise
      // distinct here, so the rotation starting at the minimum is canonical
      if (!(m < n && m < r)) continue;
      if (!square_three_cycle_condition(m, n, r).is_zero()) continue;
      found[shard].emplace_back(idx, square_three_cycle_map(m, n, r));
    }
  };

  if (shards == 1) {
    scan(0);
  } else {
    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> errors(shards);
    for (unsigned s = 0; s < shards; ++s)
      workers.emplace_back([&scan, &errors, s] {
        try {
          scan(s);
        } catch (...) {
          errors[s] = std::current_exception();
        }
      });
    for (std::thread& w : workers) w.join();
    for (const std::exception_ptr& e : errors)
      if (e) std::rethrow_exception(e);
  }

  std::vector<Found> all;
  for (std::vector<Found>& part : found)
    all.insert(all.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  std::sort(all.begin(), all.end(),
            [](const Found& x, const Found& y) { return x.first < y.first; });
  std::vector<SquareCycleWitness> out;
  out.reserve(all.size());
  for (Found& hit : all) out.push_back(std::move(hit.second));
  return out;
}

}  // namespace squarerun
