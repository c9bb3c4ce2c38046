#include "squarerun/surface.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <thread>

#include "squarerun/conics.hpp"
#include "squarerun/errors.hpp"
#include "squarerun/quartic.hpp"

namespace squarerun {

namespace {

struct Monomial {
  long coef;
  int ep, eq, er;
};

const Monomial kFormTerms[] = {
    {-2048, 7, 1, 0}, {-1536, 6, 2, 0}, {-768, 5, 3, 0}, {128, 4, 4, 0},
    {192, 3, 5, 0},   {96, 2, 6, 0},    {16, 1, 7, 0},   {1, 0, 8, 0},
    {4096, 6, 1, 1},  {1280, 5, 2, 1},  {-960, 3, 4, 1}, {-448, 2, 5, 1},
    {-160, 1, 6, 1},  {-24, 0, 7, 1},   {-512, 6, 0, 2}, {-1280, 5, 1, 2},
    {1792, 4, 2, 2},  {1664, 3, 3, 2},  {1152, 2, 4, 2}, {368, 1, 5, 2},
    {76, 0, 6, 2},    {768, 5, 0, 3},   {-2048, 4, 1, 3}, {-1920, 3, 2, 3},
    {-1280, 2, 3, 3}, {-384, 1, 4, 3},  {-72, 0, 5, 3},  {384, 4, 0, 4},
    {1728, 3, 1, 4},  {480, 2, 2, 4},   {240, 1, 3, 4},  {-10, 0, 4, 4},
    {-704, 3, 0, 5},  {-64, 2, 1, 5},   {-32, 1, 2, 5},  {24, 0, 3, 5},
    {64, 2, 0, 6},    {-112, 1, 1, 6},  {44, 0, 2, 6},   {64, 1, 0, 7},
    {-56, 0, 1, 7},   {17, 0, 0, 8},
};

// Deterministic sharded scan: worker k handles candidate indices congruent
// to k, results are merged back in index order.
template <typename Body>
void sharded_scan(unsigned long long count, unsigned shards, const Body& body) {
  if (shards <= 1) {
    for (unsigned long long i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> workers;
  std::vector<std::exception_ptr> errors(shards);
  for (unsigned k = 0; k < shards; ++k) {
    workers.emplace_back([&, k] {
      try {
        for (unsigned long long i = k; i < count; i += shards) body(i);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    });
  }
  for (auto& w : workers) w.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

bool square_mod_256(const mpz_class& n) {
  static const auto table = [] {
    std::array<bool, 256> t{};
    for (int i = 0; i < 256; ++i) t[(i * i) % 256] = true;
    return t;
  }();
  return table[mpz_fdiv_ui(n.get_mpz_t(), 256)];
}

}  // namespace

bool on_surface(const SurfacePoint& pt) {
  Rational x2 = pt.x.square(), y2 = pt.y.square(), z2 = pt.z.square(), w2 = pt.w.square();
  return z2 + x2.square() == y2 + y2.square() && w2 + y2.square() == z2 + z2.square();
}

bool is_trivial_point(const SurfacePoint& pt) {
  Rational a = pt.x.abs();
  return pt.y.abs() == a && pt.z.abs() == a && pt.w.abs() == a;
}

FourSquareHit certify_surface_point(const SurfacePoint& pt, std::string source,
                                    unsigned max_run) {
  if (!on_surface(pt)) throw ConsistencyError("point fails the surface equations");
  Rational x0_sq = pt.x.square();
  Rational c = pt.y.square() - x0_sq.square();
  SquareRunReport run = square_run(QuadMap::normal(c), x0_sq, max_run);
  if (run.run_length < 4)
    throw ConsistencyError("surface point rerun gave only " +
                           std::to_string(run.run_length) + " consecutive squares");
  return {pt, std::move(c), std::move(x0_sq), std::move(run), is_trivial_point(pt),
          std::move(source)};
}

Rational four_square_form(const Rational& p, const Rational& q, const Rational& r) {
  Rational acc;
  for (const Monomial& m : kFormTerms)
    acc += Rational(m.coef) * p.pow(m.ep) * q.pow(m.eq) * r.pow(m.er);
  return acc;
}

Rational four_square_form_pipeline(const Rational& p, const Rational& q, const Rational& r) {
  PqrForms f = stuy_forms(p, q, r);
  Rational y2 = f.y.square();
  return y2 * f.big_t + y2.square() - f.big_t * f.z_sq;
}

std::vector<FourSquareHit> search_fixed_y(const Rational& y, const SearchConfig& cfg) {
  if (y.is_zero()) throw DomainError("fixed-y search needs y != 0");
  if (cfg.box < 1) throw DomainError("slope box bound must be positive");
  ConicSlopeParam conic(y.square() + y.pow(4), y.square(), y);
  Rational y4 = y.pow(4);

  const long width = 2 * cfg.box + 1;
  const unsigned long long count =
      static_cast<unsigned long long>(cfg.box) * static_cast<unsigned long long>(width);
  std::vector<std::pair<unsigned long long, FourSquareHit>> found;
  std::mutex found_mutex;

  sharded_scan(count, cfg.shards, [&](unsigned long long idx) {
    long s = static_cast<long>(idx / width) + 1;
    long p = static_cast<long>(idx % width) - cfg.box;
    if (cfg.coprime_only && std::gcd(std::abs(p), s) != 1) return;
    Rational slope(p, s);
    ConicChordPoint pt = chord_point(conic, slope);
    Rational x1 = pt.affine_x();
    if (x1.is_zero()) return;
    auto xs = sqrt_exact(x1);
    if (!xs) return;
    Rational z1 = pt.affine_z();
    auto ws = sqrt_exact(z1.pow(4) + z1.square() - y4);
    if (!ws) return;
    SurfacePoint sp{*xs, y, z1, *ws};
    FourSquareHit hit = certify_surface_point(
        sp, "fixed_y y=" + y.str() + " slope=" + slope.str());
    if (hit.trivial && !cfg.include_trivial) return;
    std::lock_guard<std::mutex> lock(found_mutex);
    found.emplace_back(idx, std::move(hit));
  });

  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<FourSquareHit> hits;
  hits.reserve(found.size());
  for (auto& [idx, hit] : found) hits.push_back(std::move(hit));
  return hits;
}

std::vector<FourSquareHit> search_grid(const SearchConfig& cfg) {
  std::vector<FourSquareHit> all;
  for (const Rational& y : cfg.y_grid) {
    auto row = search_fixed_y(y, cfg);
    std::move(row.begin(), row.end(), std::back_inserter(all));
  }
  return all;
}

FormSearchResult search_form_fourth_power(const SearchConfig& cfg) {
  if (cfg.box < 1) throw DomainError("box radius must be positive");
  const long width = 2 * cfg.box + 1;
  const unsigned long long w = static_cast<unsigned long long>(width);
  const unsigned long long count = w * w * w;

  std::vector<std::pair<unsigned long long, FourSquareHit>> found;
  std::atomic<unsigned long long> candidates{0}, rejected{0};
  std::mutex found_mutex;

  sharded_scan(count, cfg.shards, [&](unsigned long long idx) {
    long p = static_cast<long>(idx / (w * w)) - cfg.box;
    long q = static_cast<long>((idx / w) % w) - cfg.box;
    long r = static_cast<long>(idx % w) - cfg.box;
    if (cfg.coprime_only && std::gcd(std::gcd(std::abs(p), std::abs(q)), std::abs(r)) != 1)
      return;
    Rational m = four_square_form_pipeline(p, q, r);
    if (m.sign() <= 0) return;
    if (!square_mod_256(m.num())) return;
    auto x_form = sqrt_exact(m);
    if (!x_form) return;
    candidates.fetch_add(1, std::memory_order_relaxed);

    PqrForms f = stuy_forms(p, q, r);
    auto reject = [&] { rejected.fetch_add(1, std::memory_order_relaxed); };
    if (f.big_t.is_zero()) return reject();
    auto xs = sqrt_exact(*x_form / f.big_t);
    if (!xs || xs->is_zero()) return reject();
    auto ys = sqrt_exact(f.y.square() / f.big_t);
    if (!ys) return reject();
    auto zs = sqrt_exact(f.z_sq / f.big_t);
    if (!zs) return reject();
    Rational w_val = 2 * f.s * f.u / f.big_t;
    SurfacePoint sp{*xs, *ys, *zs, w_val};
    if (!on_surface(sp)) return reject();
    FourSquareHit hit = certify_surface_point(
        sp, "form p,q,r=" + std::to_string(p) + "," + std::to_string(q) + "," +
                std::to_string(r));
    if (hit.trivial && !cfg.include_trivial) return;
    std::lock_guard<std::mutex> lock(found_mutex);
    found.emplace_back(idx, std::move(hit));
  });

  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  FormSearchResult out;
  out.candidates = candidates.load();
  out.rejected = rejected.load();
  out.hits.reserve(found.size());
  for (auto& [idx, hit] : found) out.hits.push_back(std::move(hit));
  return out;
}

ZeroStartReport zero_start_obstruction() {
  std::array<Rational, 5> coeffs{1, 2, 1, 1, 0};
  QuarticModel model(coeffs, QuarticModel::InfinityBranch{Rational(1)});
  BirationalCorrespondence corr = quartic_to_weierstrass(model);
  ECPoint image = corr.forward(0, 0);
  unsigned n = torsion_annihilator(corr.curve(), image);
  return {coeffs, model.discriminant(), image, n, n == 0};
}

}  // namespace squarerun
