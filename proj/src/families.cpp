#include "tilekit/families.hpp"

#include "tilekit/errors.hpp"

#include <algorithm>

namespace tilekit {

namespace {

std::vector<Vec2> with_negatives(std::vector<Vec2> half) {
  size_t m = half.size();
  for (size_t i = 0; i < m; ++i) half.push_back(Vec2(-half[i]));
  return half;
}

}  // namespace

ParametricFamily::ParametricFamily(std::string name, std::string parameter_symbol,
                                   std::vector<Vec2> const_part,
                                   std::vector<Vec2> coeff, Rational lo,
                                   Rational hi, Integer intended_k,
                                   std::optional<Lattice> reference_lattice)
    : name_(std::move(name)),
      symbol_(std::move(parameter_symbol)),
      const_part_(std::move(const_part)),
      coeff_(std::move(coeff)),
      lo_(std::move(lo)),
      hi_(std::move(hi)),
      k_(std::move(intended_k)),
      lattice_(std::move(reference_lattice)) {
  if (const_part_.size() != coeff_.size())
    throw Error(ErrorKind::BadInput, "mismatched family coefficient lists");
}

std::vector<Vec2> ParametricFamily::vertices_at(const Rational& t) const {
  std::vector<Vec2> out;
  out.reserve(const_part_.size());
  for (size_t i = 0; i < const_part_.size(); ++i)
    out.push_back(Vec2(const_part_[i] + t * coeff_[i]));
  return out;
}

CSPolygon ParametricFamily::instantiate(const Rational& t) const {
  if (!(t > lo_ && t < hi_))
    throw Error(ErrorKind::ParameterOutOfRange,
                name_ + " needs " + symbol_ + " strictly inside (" + to_string(lo_) +
                    ", " + to_string(hi_) + "), got " + to_string(t));
  return polygon_from_points(vertices_at(t));
}

const ParametricFamily& octagon_family_def(OctagonVariant variant) {
  static const ParametricFamily corrected(
      "octagon6", "alpha",
      with_negatives({vec2(0, -2), vec2(1, -2), vec2(1, -1), vec2(1, 0)}),
      with_negatives({vec2(-1, 0), vec2(-1, 0), vec2(1, 0), vec2(-1, 0)}),
      Rational(0), rat(1, 6), 6, Lattice::integers());
  // vertex list exactly as printed; not a lattice tile, kept for the anomaly
  // report (area 6 - 4*alpha)
  static const ParametricFamily printed(
      "octagon6-printed", "alpha",
      with_negatives({vec2(-1, 2), vec2(0, -2), vec2(1, 0), vec2(1, -1)}),
      with_negatives({vec2(1, 0), vec2(1, 0), vec2(-1, 0), vec2(1, 0)}),
      Rational(0), rat(1, 6), 6, std::nullopt);
  static const ParametricFamily beta(
      "octagon5-beta", "beta",
      with_negatives({vec2(0, -2), vec2(1, -2), vec2(1, 0), vec2(0, 1)}),
      with_negatives({vec2(1, 0), vec2(1, 0), vec2(-1, 0), vec2(1, 0)}),
      rat(1, 4), rat(1, 3), 5, Lattice::integers());
  switch (variant) {
    case OctagonVariant::SixFoldCorrected: return corrected;
    case OctagonVariant::SixFoldAsPrinted: return printed;
    case OctagonVariant::FiveFoldBeta: return beta;
  }
  throw Error(ErrorKind::UnknownFamily, "unknown octagon variant");
}

CSPolygon octagon_family(OctagonVariant variant, const Rational& parameter) {
  return octagon_family_def(variant).instantiate(parameter);
}

Vec2 MidpointSpec::closure_sum() const {
  Vec2 s = vec2(0, 0);
  for (int i = 0; i < m(); ++i) {
    if (i % 2 == 0)
      s -= u[i];
    else
      s += u[i];
  }
  return s;
}

bool MidpointSpec::closed() const {
  Vec2 s = closure_sum();
  return s.x() == 0 && s.y() == 0;
}

MidpointSpec family_midpoints(DecagonFamily which) {
  if (which == DecagonFamily::A)
    return MidpointSpec{{vec2(Rational(-1), rat(1, 2)), vec2(rat(1, 2), Rational(1)),
                         vec2(rat(3, 2), Rational(1)), vec2(Rational(2), rat(1, 2)),
                         vec2(2, 0)}};
  return MidpointSpec{{vec2(rat(1, 2), Rational(-1)), vec2(rat(3, 2), rat(-1, 2)),
                       vec2(2, 0), vec2(rat(3, 2), rat(1, 2)),
                       vec2(rat(1, 2), Rational(1))}};
}

int family_anchor(DecagonFamily which) {
  // A: junction of the edges with midpoints u1, u2 (0-based edges 0, 1);
  // B: junction of the edges with midpoints u5, u6 (0-based edges 4, 5)
  return which == DecagonFamily::A ? 0 : 4;
}

namespace {

// vertices of the midpoint-propagated polygon as affine functions
// v_i = c[i] + sigma[i] * w of the free vertex w at index anchor+1
struct SymbolicVertices {
  std::vector<Vec2> c;
  std::vector<int> sigma;
};

SymbolicVertices propagate_symbolic(const MidpointSpec& spec, int anchor) {
  int m = spec.m();
  if (m % 2 == 0)
    throw Error(ErrorKind::BadInput,
                "midpoint propagation needs an odd half-cycle length");
  int n = 2 * m;
  SymbolicVertices sv;
  sv.c.assign(n, vec2(0, 0));
  sv.sigma.assign(n, 0);
  int start = ((anchor + 1) % n + n) % n;
  sv.c[start] = vec2(0, 0);
  sv.sigma[start] = 1;
  for (int step = 0; step < n - 1; ++step) {
    int i = (start + step) % n;
    int j = (i + 1) % n;
    sv.c[j] = Rational(2) * spec.midpoint(i) - sv.c[i];
    sv.sigma[j] = -sv.sigma[i];
  }
  // wrap-around consistency holds exactly when the alternating closure does
  int last = (start + n - 1) % n;
  Vec2 back = Rational(2) * spec.midpoint(last) - sv.c[last];
  if (!(back.x() == sv.c[start].x() && back.y() == sv.c[start].y()) ||
      sv.sigma[last] != -1) {
    Vec2 s = spec.closure_sum();
    throw Error(ErrorKind::ClosureViolated,
                "alternating midpoint sum is (" + to_string(s.x()) + "," +
                    to_string(s.y()) + "), expected (0,0)");
  }
  return sv;
}

}  // namespace

CSPolygon decagon_from_midpoints(const MidpointSpec& spec, const Vec2& free_vertex,
                                 int anchor_index) {
  if (!spec.closed()) {
    Vec2 s = spec.closure_sum();
    throw Error(ErrorKind::ClosureViolated,
                "alternating midpoint sum is (" + to_string(s.x()) + "," +
                    to_string(s.y()) + "), expected (0,0)");
  }
  SymbolicVertices sv = propagate_symbolic(spec, anchor_index);
  int n = 2 * spec.m();
  std::vector<Vec2> v(n);
  for (int i = 0; i < n; ++i)
    v[i] = sv.c[i] + Rational(sv.sigma[i]) * free_vertex;
  // strict convexity of the propagated cycle itself; a re-sorted hull would
  // not carry the prescribed midpoints
  int orient = 0;
  for (int i = 0; i < n; ++i) {
    Vec2 e1 = v[(i + 1) % n] - v[i];
    Vec2 e2 = v[(i + 2) % n] - v[(i + 1) % n];
    int s = sign(cross(e1, e2));
    if (s == 0)
      throw Error(ErrorKind::NotStrictlyConvex,
                  "free vertex sits on the boundary of the freedom region");
    if (orient == 0) orient = s;
    if (s != orient)
      throw Error(ErrorKind::NotStrictlyConvex,
                  "free vertex lies outside the freedom region");
  }
  return polygon_from_points(std::move(v));
}

bool FreedomRegion::contains(const Vec2& w) const {
  if (empty) return false;
  for (const auto& h : halfplanes)
    if (!(h.nx * w.x() + h.ny * w.y() < h.b)) return false;
  return true;
}

Vec2 FreedomRegion::interior_point() const {
  if (empty) throw Error(ErrorKind::BadInput, "empty freedom region");
  Vec2 s = vec2(0, 0);
  for (const auto& v : vertices) s += v;
  return Vec2(s / Rational(static_cast<long>(vertices.size())));
}

FreedomRegion freedom_region(const MidpointSpec& spec, int anchor_index) {
  if (!spec.closed()) {
    Vec2 s = spec.closure_sum();
    throw Error(ErrorKind::ClosureViolated,
                "alternating midpoint sum is (" + to_string(s.x()) + "," +
                    to_string(s.y()) + "), expected (0,0)");
  }
  SymbolicVertices sv = propagate_symbolic(spec, anchor_index);
  int n = 2 * spec.m();

  // edges E_i = A_i + s_i * w
  std::vector<Vec2> A(n);
  std::vector<int> s(n);
  for (int i = 0; i < n; ++i) {
    int j = (i + 1) % n;
    A[i] = sv.c[j] - sv.c[i];
    s[i] = sv.sigma[j] - sv.sigma[i];  // +-2
  }

  // the signed area is independent of w; its sign fixes the orientation
  Rational area2(0), ax(0), ay(0);
  for (int i = 0; i < n; ++i) {
    int j = (i + 1) % n;
    area2 += cross(sv.c[i], sv.c[j]);
    ax += Rational(sv.sigma[j]) * (-sv.c[i].y()) + Rational(sv.sigma[i]) * sv.c[j].y();
    ay += Rational(sv.sigma[j]) * sv.c[i].x() - Rational(sv.sigma[i]) * sv.c[j].x();
  }
  if (!(ax == 0 && ay == 0))
    throw Error(ErrorKind::ClosureViolated, "area depends on the free vertex");
  int orient = sign(area2);
  if (orient == 0) orient = 1;

  FreedomRegion region;
  region.anchor_index = anchor_index;
  region.free_vertex_index = ((anchor_index + 1) % n + n) % n;

  bool infeasible = false;
  for (int i = 0; i < n; ++i) {
    int j = (i + 1) % n;
    // cross(E_i, E_j) = const + cx*w.x + cy*w.y, required orient-positive
    Rational cst = cross(A[i], A[j]);
    Rational cx = Rational(-s[j]) * A[i].y() + Rational(s[i]) * A[j].y();
    Rational cy = Rational(s[j]) * A[i].x() + Rational(-s[i]) * A[j].x();
    Rational o(orient);
    // orient*(cst + cx x + cy y) > 0  <=>  (-o cx) x + (-o cy) y < o cst
    HalfPlane h{-o * cx, -o * cy, o * cst};
    if (h.nx == 0 && h.ny == 0) {
      if (!(h.b > 0)) infeasible = true;
      continue;
    }
    // normalize leading coefficient to +-1 for dedup
    Rational scale = h.nx != 0 ? abs(h.nx) : abs(h.ny);
    h.nx /= scale;
    h.ny /= scale;
    h.b /= scale;
    bool dup = false;
    for (const auto& g : region.halfplanes)
      if (g.nx == h.nx && g.ny == h.ny && g.b == h.b) dup = true;
    if (!dup) region.halfplanes.push_back(h);
  }
  if (infeasible) {
    region.empty = true;
    return region;
  }

  // boundedness: the normals must not fit in a closed half-plane
  {
    bool all_in_halfplane = false;
    for (const auto& h : region.halfplanes) {
      // direction d orthogonal to h's normal; check whether every normal has
      // nonnegative dot with some witness direction
      for (const Vec2& d :
           {vec2(-h.ny, h.nx), vec2(h.ny, -h.nx)}) {
        bool recession = true;
        for (const auto& g : region.halfplanes)
          if (g.nx * d.x() + g.ny * d.y() > 0) recession = false;
        if (recession) all_in_halfplane = true;
      }
    }
    if (all_in_halfplane) region.bounded = false;
  }

  // closure vertices: pairwise line intersections satisfying every closed
  // constraint
  std::vector<Vec2> cand;
  int hn = static_cast<int>(region.halfplanes.size());
  for (int i = 0; i < hn; ++i) {
    for (int j = i + 1; j < hn; ++j) {
      const auto& hi = region.halfplanes[i];
      const auto& hj = region.halfplanes[j];
      Rational d = hi.nx * hj.ny - hi.ny * hj.nx;
      if (d == 0) continue;
      Rational x = (hi.b * hj.ny - hi.ny * hj.b) / d;
      Rational y = (hi.nx * hj.b - hi.b * hj.nx) / d;
      Vec2 p = vec2(x, y);
      bool ok = true;
      for (const auto& g : region.halfplanes)
        if (g.nx * p.x() + g.ny * p.y() > g.b) ok = false;
      if (!ok) continue;
      bool dup = false;
      for (const auto& q : cand)
        if (vec_eq(p, q)) dup = true;
      if (!dup) cand.push_back(p);
    }
  }
  if (cand.size() < 3) {
    region.empty = true;
    return region;
  }
  Vec2 centroid = vec2(0, 0);
  for (const auto& p : cand) centroid += p;
  centroid /= Rational(static_cast<long>(cand.size()));
  for (const auto& h : region.halfplanes)
    if (!(h.nx * centroid.x() + h.ny * centroid.y() < h.b)) {
      region.empty = true;
      return region;
    }
  region.empty = false;

  // counterclockwise order around the centroid
  std::sort(cand.begin(), cand.end(), [&](const Vec2& a, const Vec2& b) {
    Vec2 da = a - centroid, db = b - centroid;
    auto half = [](const Vec2& v) {
      if (v.y() > 0) return 0;
      if (v.y() < 0) return 1;
      return v.x() > 0 ? 0 : 1;
    };
    int ha = half(da), hb = half(db);
    if (ha != hb) return ha < hb;
    Rational c = cross(da, db);
    if (c != 0) return c > 0;
    return dot(da, da) < dot(db, db);
  });
  region.vertices = std::move(cand);
  return region;
}

}  // namespace tilekit
