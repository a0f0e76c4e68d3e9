#include "tilekit/polygon.hpp"

#include <algorithm>

namespace tilekit {

namespace {

// angular half-plane for exact comparisons: 0 for angle in [0, pi), 1 below
int half_plane(const Vec2& v) {
  if (v.y() > 0) return 0;
  if (v.y() < 0) return 1;
  return v.x() > 0 ? 0 : 1;
}

// counterclockwise-from-positive-x angular order around the origin,
// ties broken by distance
bool angular_less(const Vec2& a, const Vec2& b) {
  int ha = half_plane(a), hb = half_plane(b);
  if (ha != hb) return ha < hb;
  Rational c = cross(a, b);
  if (c != 0) return c > 0;
  return dot(a, a) < dot(b, b);
}

}  // namespace

CSPolygon::CSPolygon(std::vector<Vec2> vertices) : verts_(std::move(vertices)) {
  int n = static_cast<int>(verts_.size());
  if (n < 4 || n % 2 != 0)
    throw Error(ErrorKind::TooFewPoints,
                "need an even number >= 4 of vertices, got " + std::to_string(n));
  int m = n / 2;
  for (int i = 0; i < m; ++i) {
    if (!vec_eq(verts_[i + m], Vec2(-verts_[i])))
      throw Error(ErrorKind::NotCentrallySymmetric,
                  "vertex " + std::to_string(i + m) + " is not the negation of vertex " +
                      std::to_string(i));
  }
  for (int i = 0; i < n; ++i) {
    Rational c = cross(edge(i), edge(i + 1));
    if (c == 0)
      throw Error(ErrorKind::NotStrictlyConvex,
                  "three consecutive vertices are collinear at index " + std::to_string(i));
    if (c < 0)
      throw Error(ErrorKind::NotStrictlyConvex,
                  "vertices are not in counterclockwise convex order at index " +
                      std::to_string(i));
  }
}

Rational CSPolygon::area() const {
  Rational twice(0);
  int n = size();
  for (int i = 0; i < n; ++i) twice += cross(verts_[i], verts_[mod(i + 1)]);
  return twice / 2;
}

Vec2 CSPolygon::bbox_min() const {
  Rational x = verts_[0].x(), y = verts_[0].y();
  for (const auto& v : verts_) {
    if (v.x() < x) x = v.x();
    if (v.y() < y) y = v.y();
  }
  return vec2(x, y);
}

Vec2 CSPolygon::bbox_max() const {
  Rational x = verts_[0].x(), y = verts_[0].y();
  for (const auto& v : verts_) {
    if (v.x() > x) x = v.x();
    if (v.y() > y) y = v.y();
  }
  return vec2(x, y);
}

bool CSPolygon::operator==(const CSPolygon& other) const {
  if (size() != other.size()) return false;
  for (int i = 0; i < size(); ++i)
    if (!vec_eq(verts_[i], other.verts_[i])) return false;
  return true;
}

CSPolygon polygon_from_points(std::vector<Vec2> points) {
  // exact dedup
  std::sort(points.begin(), points.end(), lex_less);
  points.erase(std::unique(points.begin(), points.end(),
                           [](const Vec2& a, const Vec2& b) { return vec_eq(a, b); }),
               points.end());
  int n = static_cast<int>(points.size());
  if (n < 4)
    throw Error(ErrorKind::TooFewPoints,
                "need at least 4 distinct points, got " + std::to_string(n));
  if (n % 2 != 0)
    throw Error(ErrorKind::NotCentrallySymmetric,
                "odd number of distinct points after dedup");

  Vec2 centroid = vec2(0, 0);
  for (const auto& p : points) centroid += p;
  centroid /= Rational(n);

  std::vector<Vec2> rel;
  rel.reserve(n);
  for (const auto& p : points) {
    Vec2 d = p - centroid;
    if (d.x() == 0 && d.y() == 0)
      throw Error(ErrorKind::NotStrictlyConvex, "a point coincides with the centroid");
    rel.push_back(d);
  }
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return angular_less(rel[a], rel[b]); });

  std::vector<Vec2> cyc;
  cyc.reserve(n);
  for (int i : order) cyc.push_back(points[i]);

  // rotate so the lexicographically smallest vertex leads; gives a canonical
  // representation independent of input order
  int start = 0;
  for (int i = 1; i < n; ++i)
    if (lex_less(cyc[i], cyc[start])) start = i;
  std::rotate(cyc.begin(), cyc.begin() + start, cyc.end());

  // CSPolygon's constructor certifies symmetry and strict convexity; a point
  // inside (or on an edge of) the hull of the others shows up as a
  // non-positive turn after the angular sort.
  return CSPolygon(std::move(cyc));
}

Rational area(const CSPolygon& p) { return p.area(); }

PointLocation point_location(const CSPolygon& p, const Vec2& q) {
  int n = p.size();
  int zero_at = -1;
  for (int i = 0; i < n; ++i) {
    Rational c = cross(p.edge(i), Vec2(q - p.vertex(i)));
    if (c < 0) return Exterior{};
    if (c == 0) {
      if (vec_eq(q, p.vertex(i))) return AtVertex{i};
      if (vec_eq(q, p.vertex(i + 1))) return AtVertex{(i + 1) % n};
      zero_at = i;
    }
  }
  if (zero_at < 0) return Interior{};
  // on the supporting line of edge zero_at and not outside: between endpoints
  Vec2 e = p.edge(zero_at);
  Vec2 d = q - p.vertex(zero_at);
  Rational t = dot(d, e) / dot(e, e);
  return OnEdge{zero_at, t};
}

Rational shoelace_area(const std::vector<Vec2>& poly) {
  Rational twice(0);
  int n = static_cast<int>(poly.size());
  for (int i = 0; i < n; ++i) twice += cross(poly[i], poly[(i + 1) % n]);
  return abs(twice) / 2;
}

SimpleLocation locate_in_simple_polygon(const std::vector<Vec2>& poly, const Vec2& q) {
  int n = static_cast<int>(poly.size());
  for (int i = 0; i < n; ++i) {
    const Vec2& a = poly[i];
    const Vec2& b = poly[(i + 1) % n];
    if (cross(Vec2(b - a), Vec2(q - a)) == 0) {
      if (std::min(a.x(), b.x()) <= q.x() && q.x() <= std::max(a.x(), b.x()) &&
          std::min(a.y(), b.y()) <= q.y() && q.y() <= std::max(a.y(), b.y()))
        return SimpleLocation::Boundary;
    }
  }
  // crossing-number parity on a ray to +x; vertex hits are counted once by
  // the half-open rule on y
  bool inside = false;
  for (int i = 0; i < n; ++i) {
    const Vec2& a = poly[i];
    const Vec2& b = poly[(i + 1) % n];
    bool a_above = a.y() > q.y(), b_above = b.y() > q.y();
    if (a_above == b_above) continue;
    // x-coordinate where the edge crosses the horizontal line through q
    Rational xc = a.x() + (b.x() - a.x()) * (q.y() - a.y()) / (b.y() - a.y());
    if (xc > q.x()) inside = !inside;
  }
  return inside ? SimpleLocation::Inside : SimpleLocation::Outside;
}

}  // namespace tilekit
