#pragma once

#include "tilekit/errors.hpp"
#include "tilekit/geometry.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace tilekit {

// Strictly convex, centrally symmetric 2m-gon with vertices in
// counterclockwise cyclic order; v[i+m] == -v[i] for all i.
class CSPolygon {
 public:
  // Certifies all invariants; input must already be in counterclockwise
  // cyclic order. Use polygon_from_points for unordered input.
  explicit CSPolygon(std::vector<Vec2> vertices);

  int m() const { return static_cast<int>(verts_.size() / 2); }
  int size() const { return static_cast<int>(verts_.size()); }
  const std::vector<Vec2>& vertices() const { return verts_; }
  const Vec2& vertex(int i) const { return verts_[mod(i)]; }
  // edge i runs from vertex i to vertex i+1
  Vec2 edge(int i) const { return verts_[mod(i + 1)] - verts_[mod(i)]; }
  Vec2 midpoint(int i) const {
    return (verts_[mod(i)] + verts_[mod(i + 1)]) / Rational(2);
  }

  Rational area() const;

  Vec2 bbox_min() const;
  Vec2 bbox_max() const;

  bool operator==(const CSPolygon& other) const;

 private:
  int mod(int i) const {
    int n = size();
    return ((i % n) + n) % n;
  }
  std::vector<Vec2> verts_;
};

// Sorts an unordered centrally symmetric point set into counterclockwise
// cyclic order (angular sort around the centroid, exact comparisons) and
// certifies the CSPolygon invariants. Rejects point sets whose convex hull
// omits any input point.
CSPolygon polygon_from_points(std::vector<Vec2> points);

Rational area(const CSPolygon& p);

struct Interior {};
struct Exterior {};
struct OnEdge {
  int edge;
  Rational parameter;  // in (0,1) along the edge
};
struct AtVertex {
  int vertex;
};
using PointLocation = std::variant<Interior, OnEdge, AtVertex, Exterior>;

PointLocation point_location(const CSPolygon& p, const Vec2& q);

inline bool is_interior(const PointLocation& l) {
  return std::holds_alternative<Interior>(l);
}
inline bool is_boundary(const PointLocation& l) {
  return std::holds_alternative<OnEdge>(l) || std::holds_alternative<AtVertex>(l);
}

// --- general simple polygons (Pick counting works on non-symmetric input) ---

enum class SimpleLocation { Inside, Boundary, Outside };

// Exact point classification against a simple polygon given by its vertex
// cycle (either orientation). Crossing-number parity with boundary handled
// separately.
SimpleLocation locate_in_simple_polygon(const std::vector<Vec2>& poly,
                                        const Vec2& q);

Rational shoelace_area(const std::vector<Vec2>& poly);

}  // namespace tilekit
