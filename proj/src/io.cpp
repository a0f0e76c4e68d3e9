#include "tilekit/io.hpp"

#include "tilekit/errors.hpp"

#include <fstream>

namespace tilekit {

json to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const json& j) {
  if (!j.is_string())
    throw Error(ErrorKind::BadInput, "rational must be a string, got " + j.dump());
  return rat_from_string(j.get<std::string>());
}

json to_json(const Vec2& v) { return json::array({to_json(v.x()), to_json(v.y())}); }

Vec2 vec2_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2)
    throw Error(ErrorKind::BadInput, "point must be a 2-element array");
  return vec2(rational_from_json(j[0]), rational_from_json(j[1]));
}

json to_json(const CSPolygon& p) {
  json verts = json::array();
  for (const auto& v : p.vertices()) verts.push_back(to_json(v));
  return json{{"vertices", verts}};
}

CSPolygon polygon_from_json(const json& j) {
  if (!j.contains("vertices") || !j["vertices"].is_array())
    throw Error(ErrorKind::BadInput, "polygon JSON needs a \"vertices\" array");
  std::vector<Vec2> pts;
  for (const auto& v : j["vertices"]) pts.push_back(vec2_from_json(v));
  return polygon_from_points(std::move(pts));
}

json to_json(const Lattice& lam) {
  return json{{"basis", json::array({to_json(lam.b1()), to_json(lam.b2())})}};
}

Lattice lattice_from_json(const json& j) {
  if (!j.contains("basis") || !j["basis"].is_array() || j["basis"].size() != 2)
    throw Error(ErrorKind::BadInput, "lattice JSON needs a 2-element \"basis\"");
  return Lattice(vec2_from_json(j["basis"][0]), vec2_from_json(j["basis"][1]));
}

json to_json(const TilingCertificate& cert) {
  json edges = json::array();
  for (const auto& e : cert.per_edge) {
    json rec{{"edge", e.edge},
             {"midpoint", to_json(e.midpoint)},
             {"witness", to_json(e.witness)}};
    if (e.kind == EdgeEvidenceKind::MidpointInHalfLattice) {
      rec["evidence"] = "midpoint-in-half-lattice";
    } else {
      rec["evidence"] = "edge-is-lattice-vector";
      rec["edge_vector"] = to_json(e.edge_vector);
    }
    edges.push_back(rec);
  }
  json out{{"verdict", "pass"},
           {"k", cert.k.get_str()},
           {"polygon", to_json(cert.polygon)},
           {"lattice", to_json(cert.lattice)},
           {"edges", edges}};
  if (cert.oracle) {
    out["oracle"] = json{{"points_tested", cert.oracle->points_tested},
                         {"matching", cert.oracle->matching},
                         {"seed", cert.oracle->seed}};
  }
  return out;
}

json to_json(const BolleResult& res) {
  if (res.passed()) return to_json(*res.certificate);
  json fails = json::array();
  for (const auto& f : res.failures)
    fails.push_back(json{{"edge", f.edge}, {"reason", f.reason}});
  return json{{"verdict", "fail"},
              {"area", to_json(res.area)},
              {"det", to_json(res.det)},
              {"failures", fails}};
}

json to_json(const FreedomRegion& region) {
  json verts = json::array();
  for (const auto& v : region.vertices) verts.push_back(to_json(v));
  json planes = json::array();
  for (const auto& h : region.halfplanes)
    planes.push_back(json{{"normal", json::array({to_json(h.nx), to_json(h.ny)})},
                          {"bound", to_json(h.b)}});
  return json{{"anchor_edge", region.anchor_index},
              {"free_vertex_index", region.free_vertex_index},
              {"empty", region.empty},
              {"bounded", region.bounded},
              {"vertices", verts},
              {"halfplanes", planes}};
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::BadInput, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::BadInput, "malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

void save_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::BadInput, "cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace tilekit
