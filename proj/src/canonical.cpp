#include "tilekit/canonical.hpp"

#include "tilekit/errors.hpp"

#include <algorithm>
#include <sstream>

namespace tilekit {

namespace {

Integer infnorm_diameter(const std::vector<Vec2>& verts) {
  Rational m(0);
  for (const auto& v : verts) {
    Rational ax = abs(v.x()), ay = abs(v.y());
    if (ax > m) m = ax;
    if (ay > m) m = ay;
  }
  return ceil_int(m);
}

// -1 / 0 / +1 comparing (diameter, lexicographic vertex list)
int compare_candidates(const Integer& da, const std::vector<Vec2>& a,
                       const Integer& db, const std::vector<Vec2>& b) {
  if (da != db) return da < db ? -1 : 1;
  for (size_t i = 0; i < a.size(); ++i) {
    int c = cmp(a[i].x(), b[i].x());
    if (c != 0) return c;
    c = cmp(a[i].y(), b[i].y());
    if (c != 0) return c;
  }
  return 0;
}

Integer igcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// one minimization pass over unimodular maps with bounded entries
CSPolygon best_image(const CSPolygon& p, const Integer& bound) {
  CSPolygon best = p;
  Integer best_diam = infnorm_diameter(p.vertices());
  auto consider = [&](const Integer& a, const Integer& b, const Integer& c,
                      const Integer& d) {
    // prune on the image diameter before building the polygon
    Rational ra(a), rb(b), rc(c), rd(d);
    Rational m(0);
    for (const auto& v : p.vertices()) {
      Rational nx = abs(ra * v.x() + rb * v.y());
      Rational ny = abs(rc * v.x() + rd * v.y());
      if (nx > m) m = nx;
      if (ny > m) m = ny;
    }
    Integer diam = ceil_int(m);
    if (diam > best_diam) return;
    std::vector<Vec2> mapped;
    mapped.reserve(p.size());
    for (const auto& v : p.vertices())
      mapped.push_back(vec2(ra * v.x() + rb * v.y(), rc * v.x() + rd * v.y()));
    CSPolygon cand = polygon_from_points(std::move(mapped));
    if (compare_candidates(diam, cand.vertices(), best_diam, best.vertices()) < 0) {
      best_diam = diam;
      best = cand;
    }
  };

  for (Integer a = -bound; a <= bound; ++a) {
    for (Integer b = -bound; b <= bound; ++b) {
      if (a == 0 && b == 0) continue;
      if (igcd(abs(a), abs(b)) != 1) continue;
      // second rows with a*d - b*c = det come in a one-parameter family
      for (int detsign : {1, -1}) {
        Integer x, y, g;
        mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(),
                   b.get_mpz_t());
        // a*x + b*y = 1  ->  d0 = detsign*x, c0 = -detsign*y
        Integer d0 = detsign * x, c0 = -detsign * y;
        // general solution: (c, d) = (c0 + k*a, d0 + k*b)
        // scan k keeping |c| <= bound and |d| <= bound
        auto krange = [&](const Integer& base, const Integer& coef, Integer& klo,
                          Integer& khi, bool& any) {
          if (coef == 0) {
            any = abs(base) <= bound;
            return;
          }
          // |base + k*coef| <= bound
          Rational lo = (Rational(-bound) - Rational(base)) / Rational(coef);
          Rational hi = (Rational(bound) - Rational(base)) / Rational(coef);
          if (lo > hi) std::swap(lo, hi);
          klo = ceil_int(lo);
          khi = floor_int(hi);
          any = klo <= khi;
        };
        Integer klo1, khi1, klo2, khi2;
        bool any1 = true, any2 = true;
        bool free1 = (a == 0), free2 = (b == 0);
        krange(c0, a, klo1, khi1, any1);
        krange(d0, b, klo2, khi2, any2);
        if (!any1 || !any2) continue;
        Integer klo = free1 ? klo2 : (free2 ? klo1 : std::max(klo1, klo2));
        Integer khi = free1 ? khi2 : (free2 ? khi1 : std::min(khi1, khi2));
        if (free1 && free2) continue;  // cannot happen: a,b not both zero
        for (Integer k = klo; k <= khi; ++k) consider(a, b, c0 + k * a, d0 + k * b);
      }
    }
  }
  return best;
}

}  // namespace

Integer unimodular_entry_bound(const CSPolygon& p) {
  Integer d = infnorm_diameter(p.vertices());
  Rational ecc = Rational(d * d) / p.area();
  Integer e = ceil_int(ecc);
  if (e < 1) e = 1;
  return 4 * e;
}

CSPolygon canonical_form(const CSPolygon& p, const Integer& bound) {
  for (const auto& v : p.vertices())
    if (!is_integer(v.x()) || !is_integer(v.y()))
      throw Error(ErrorKind::VerticesNotOnLattice,
                  "canonical_form needs integer vertices");
  CSPolygon cur = p;
  // each pass strictly decreases (diameter, lex list); terminates
  for (int iter = 0; iter < 64; ++iter) {
    Integer b = bound > 0 ? bound : unimodular_entry_bound(cur);
    CSPolygon next = best_image(cur, b);
    if (next == cur) return cur;
    cur = next;
  }
  return cur;
}

std::string polygon_key(const CSPolygon& p) {
  std::ostringstream os;
  for (const auto& v : p.vertices()) os << v.x().get_str() << "," << v.y().get_str() << ";";
  return os.str();
}

}  // namespace tilekit
