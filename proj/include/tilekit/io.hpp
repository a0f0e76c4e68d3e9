#pragma once

#include "tilekit/bolle.hpp"
#include "tilekit/families.hpp"
#include "tilekit/lattice.hpp"
#include "tilekit/polygon.hpp"

#include <json.hpp>

#include <string>

namespace tilekit {

using nlohmann::json;

// Rationals cross the boundary as lowest-terms strings, "p/q" with positive
// denominator, integers without the "/1".
json to_json(const Rational& r);
Rational rational_from_json(const json& j);

json to_json(const Vec2& v);
Vec2 vec2_from_json(const json& j);

// {"vertices": [["p/q","r/s"], ...]}
json to_json(const CSPolygon& p);
CSPolygon polygon_from_json(const json& j);

// {"basis": [["a","b"],["c","d"]]}
json to_json(const Lattice& lam);
Lattice lattice_from_json(const json& j);

json to_json(const TilingCertificate& cert);
json to_json(const BolleResult& res);
json to_json(const FreedomRegion& region);

json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const json& j);

}  // namespace tilekit
