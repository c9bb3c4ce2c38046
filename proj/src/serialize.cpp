#include "squarerun/serialize.hpp"

#include <string>
#include <utility>
#include <vector>

#include "squarerun/errors.hpp"

namespace squarerun {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field \"") + key + "\"");
  return *it;
}

long long integer(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw ParseError(std::string("field \"") + key + "\" must be an integer");
  return v.get<long long>();
}

bool boolean(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_boolean()) throw ParseError(std::string("field \"") + key + "\" must be a boolean");
  return v.get<bool>();
}

std::string text(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) throw ParseError(std::string("field \"") + key + "\" must be a string");
  return v.get<std::string>();
}

Json rat_array(const auto& values) {
  Json out = Json::array();
  for (const Rational& r : values) out.push_back(to_json(r));
  return out;
}

std::vector<Rational> rat_vector(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_array()) throw ParseError(std::string("field \"") + key + "\" must be an array");
  std::vector<Rational> out;
  out.reserve(v.size());
  for (const Json& e : v) out.push_back(rational_from_json(e));
  return out;
}

}  // namespace

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const QuadMap& f) {
  Json j;
  j["A"] = to_json(f.A);
  j["B"] = to_json(f.B);
  j["C"] = to_json(f.C);
  return j;
}

Json to_json(const Orbit& o) {
  Json j;
  j["x0"] = o.iterates.empty() ? Json() : to_json(o.iterates.front());
  j["iterates"] = rat_array(o.iterates);
  j["tail"] = o.tail_length;
  j["period"] = o.cycle_length;
  j["truncated"] = o.truncated;
  return j;
}

Json to_json(const SquareRunReport& r) {
  Json j;
  j["run_length"] = r.run_length;
  j["roots"] = rat_array(r.roots);
  j["truncated"] = r.truncated;
  return j;
}

Json to_json(const ECPoint& p) {
  Json j;
  if (p.infinity) {
    j["inf"] = true;
  } else {
    j["x"] = to_json(p.x);
    j["y"] = to_json(p.y);
  }
  return j;
}

Json to_json(const LongWeierstrass& e) {
  Json j;
  j["a1"] = to_json(e.a1());
  j["a2"] = to_json(e.a2());
  j["a3"] = to_json(e.a3());
  j["a4"] = to_json(e.a4());
  j["a6"] = to_json(e.a6());
  return j;
}

Json to_json(const ThreeSquareWitness& w) {
  Json j;
  j["family"] = family_tag(w.family);
  j["parameter"] = to_json(w.parameter);
  j["map"] = to_json(w.map);
  j["x0"] = to_json(w.x0);
  j["roots"] = rat_array(w.roots);
  j["n"] = w.multiple;
  return j;
}

Json to_json(const OrbitTriple& t) {
  Json j;
  j["family"] = family_tag(Family::XaxMinusA);
  j["parameter"] = to_json(t.parameter);
  j["map"] = to_json(t.map);
  j["x0"] = to_json(t.x0);
  j["second"] = to_json(t.second);
  j["third"] = to_json(t.third);
  j["roots"] = rat_array(t.roots);
  j["root0"] = t.root0 ? to_json(*t.root0) : Json();
  j["n"] = t.multiple;
  return j;
}

Json to_json(const SurfacePoint& p) {
  Json j;
  j["x"] = to_json(p.x);
  j["y"] = to_json(p.y);
  j["z"] = to_json(p.z);
  j["w"] = to_json(p.w);
  return j;
}

Json to_json(const FourSquareHit& h) {
  Json j;
  j["point"] = to_json(h.point);
  j["c"] = to_json(h.c);
  j["x0"] = to_json(h.x0_sq);
  j["run"] = to_json(h.run);
  j["trivial"] = h.trivial;
  j["source"] = h.source;
  return j;
}

Json to_json(const PoonenCycle& c) {
  Json j;
  j["c"] = to_json(c.c);
  j["points"] = rat_array(c.points);
  j["parameter"] = to_json(c.parameter);
  return j;
}

Json to_json(const SquareCycleWitness& w) {
  Json j;
  j["map"] = to_json(w.map);
  j["squares"] = rat_array(w.squares);
  j["roots"] = rat_array(w.roots);
  j["params"] = rat_array(w.params);
  j["degenerate"] = w.degenerate;
  return j;
}

Json to_json(const CatalogRowReport& r) {
  Json j;
  j["index"] = r.index;
  j["map"] = to_json(r.map);
  j["roots"] = rat_array(r.roots);
  j["tau"] = to_json(r.printed_tau);
  j["recovered_tau"] = rat_array(r.recovered_tau);
  j["pass"] = r.pass;
  j["failures"] = r.failures;
  return j;
}

Json to_json(const CatalogReport& r) {
  Json j;
  Json rows = Json::array();
  for (const CatalogRowReport& row : r.rows) rows.push_back(to_json(row));
  j["rows"] = std::move(rows);
  j["all_pass"] = r.all_pass();
  return j;
}

Json to_json(const ZeroStartReport& r) {
  Json j;
  j["quartic"] = rat_array(r.quartic);
  j["quartic_discriminant"] = to_json(r.quartic_discriminant);
  j["image"] = to_json(r.image);
  j["annihilator"] = r.annihilator;
  j["infinite_order"] = r.infinite_order;
  return j;
}

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw ParseError("rational values must be \"num/den\" strings");
  return Rational::parse(j.get<std::string>());
}

QuadMap quadmap_from_json(const Json& j) {
  return QuadMap(rational_from_json(field(j, "A")), rational_from_json(field(j, "B")),
                 rational_from_json(field(j, "C")));
}

Orbit orbit_from_json(const Json& j) {
  Orbit o;
  const Json& iterates = field(j, "iterates");
  if (!iterates.is_array()) throw ParseError("field \"iterates\" must be an array");
  for (const Json& e : iterates) o.iterates.push_back(rational_from_json(e));
  o.tail_length = static_cast<unsigned>(integer(j, "tail"));
  o.cycle_length = static_cast<unsigned>(integer(j, "period"));
  o.truncated = boolean(j, "truncated");
  const Json& x0 = field(j, "x0");
  if (o.iterates.empty()) {
    if (!x0.is_null()) throw ParseError("x0 given but no iterates");
  } else if (rational_from_json(x0) != o.iterates.front()) {
    throw ParseError("x0 disagrees with the first iterate");
  }
  return o;
}

SquareRunReport square_run_from_json(const Json& j) {
  SquareRunReport r;
  r.run_length = static_cast<unsigned>(integer(j, "run_length"));
  r.roots = rat_vector(j, "roots");
  r.truncated = boolean(j, "truncated");
  return r;
}

ECPoint ec_point_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("expected a point object");
  if (j.contains("inf")) {
    if (!boolean(j, "inf")) throw ParseError("\"inf\" must be true when present");
    return ECPoint::inf();
  }
  return ECPoint::affine(rational_from_json(field(j, "x")), rational_from_json(field(j, "y")));
}

Family family_from_tag(const std::string& tag) {
  if (tag == "xc") return Family::Xc;
  if (tag == "xaxb") return Family::Xaxb;
  if (tag == "xaxma") return Family::XaxMinusA;
  throw ParseError("unknown family tag \"" + tag + "\"");
}

ThreeSquareWitness witness_from_json(const Json& j) {
  std::vector<Rational> roots = rat_vector(j, "roots");
  if (roots.size() != 3) throw ParseError("witness needs exactly three roots");
  return ThreeSquareWitness{family_from_tag(text(j, "family")),
                            rational_from_json(field(j, "parameter")),
                            static_cast<long>(integer(j, "n")),
                            quadmap_from_json(field(j, "map")),
                            rational_from_json(field(j, "x0")),
                            {roots[0], roots[1], roots[2]}};
}

OrbitTriple orbit_triple_from_json(const Json& j) {
  if (family_from_tag(text(j, "family")) != Family::XaxMinusA)
    throw ParseError("orbit triples belong to the xaxma family");
  std::vector<Rational> roots = rat_vector(j, "roots");
  if (roots.size() != 2) throw ParseError("orbit triple needs exactly two roots");
  const Json& root0 = field(j, "root0");
  return OrbitTriple{rational_from_json(field(j, "parameter")),
                     static_cast<long>(integer(j, "n")),
                     quadmap_from_json(field(j, "map")),
                     rational_from_json(field(j, "x0")),
                     rational_from_json(field(j, "second")),
                     rational_from_json(field(j, "third")),
                     {roots[0], roots[1]},
                     root0.is_null() ? std::nullopt
                                     : std::optional<Rational>(rational_from_json(root0))};
}

SurfacePoint surface_point_from_json(const Json& j) {
  return SurfacePoint{rational_from_json(field(j, "x")), rational_from_json(field(j, "y")),
                      rational_from_json(field(j, "z")), rational_from_json(field(j, "w"))};
}

FourSquareHit hit_from_json(const Json& j) {
  return FourSquareHit{surface_point_from_json(field(j, "point")),
                       rational_from_json(field(j, "c")),
                       rational_from_json(field(j, "x0")),
                       square_run_from_json(field(j, "run")),
                       boolean(j, "trivial"),
                       text(j, "source")};
}

PoonenCycle poonen_cycle_from_json(const Json& j) {
  return PoonenCycle{rational_from_json(field(j, "c")), rat_vector(j, "points"),
                     rational_from_json(field(j, "parameter"))};
}

SquareCycleWitness square_cycle_from_json(const Json& j) {
  return SquareCycleWitness{quadmap_from_json(field(j, "map")), rat_vector(j, "squares"),
                            rat_vector(j, "roots"), rat_vector(j, "params"),
                            boolean(j, "degenerate")};
}

}  // namespace squarerun
