#pragma once

#include "json.hpp"

#include "squarerun/cycles.hpp"
#include "squarerun/elliptic.hpp"
#include "squarerun/families.hpp"
#include "squarerun/orbit.hpp"
#include "squarerun/quadmap.hpp"
#include "squarerun/rational.hpp"
#include "squarerun/surface.hpp"

namespace squarerun {

// Preserves insertion order so serialize -> parse -> serialize is the
// identity on bytes.
using Json = nlohmann::ordered_json;

// Rationals serialize as canonical "num/den" strings ("9/64", "-29/16",
// integers as "4").
Json to_json(const Rational& r);
Json to_json(const QuadMap& f);
Json to_json(const Orbit& o);
Json to_json(const SquareRunReport& r);
Json to_json(const ECPoint& p);
Json to_json(const LongWeierstrass& e);
Json to_json(const ThreeSquareWitness& w);
Json to_json(const OrbitTriple& t);
Json to_json(const SurfacePoint& p);
Json to_json(const FourSquareHit& h);
Json to_json(const PoonenCycle& c);
Json to_json(const SquareCycleWitness& w);
Json to_json(const CatalogRowReport& r);
Json to_json(const CatalogReport& r);
Json to_json(const ZeroStartReport& r);

// Parsers throw ParseError on malformed or mistyped payloads.
Rational rational_from_json(const Json& j);
QuadMap quadmap_from_json(const Json& j);
Orbit orbit_from_json(const Json& j);
SquareRunReport square_run_from_json(const Json& j);
ECPoint ec_point_from_json(const Json& j);
ThreeSquareWitness witness_from_json(const Json& j);
OrbitTriple orbit_triple_from_json(const Json& j);
SurfacePoint surface_point_from_json(const Json& j);
FourSquareHit hit_from_json(const Json& j);
PoonenCycle poonen_cycle_from_json(const Json& j);
SquareCycleWitness square_cycle_from_json(const Json& j);

Family family_from_tag(const std::string& tag);

}  // namespace squarerun
