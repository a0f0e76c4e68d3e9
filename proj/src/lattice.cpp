#include "tilekit/lattice.hpp"

#include <algorithm>

namespace tilekit {

namespace {

Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// g = gcd(a, b) together with x, y such that a*x + b*y = g
Integer extgcd(const Integer& a, const Integer& b, Integer& x, Integer& y) {
  Integer g;
  mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
  return g;
}

Integer denominator_lcm(const Mat2& m) {
  Integer d(1);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) d = lcm(d, m(i, j).get_den());
  return d;
}

struct IVec {
  Integer x, y;
};

// Hermite normal form basis (a,0),(c,d) with a,d > 0, 0 <= c < a of the
// lattice generated by integer vectors; nullopt when rank < 2.
std::optional<std::array<IVec, 2>> integer_hnf(std::vector<IVec> gens) {
  // combine y-components to their gcd
  IVec w{0, 0};
  for (const auto& v : gens) {
    if (v.y == 0) continue;
    if (w.y == 0) {
      w = v;
      continue;
    }
    Integer s, t;
    Integer g = extgcd(w.y, v.y, s, t);
    IVec nw{s * w.x + t * v.x, g};
    w = nw;
  }
  Integer a(0);
  for (const auto& v : gens) {
    Integer rem_x = v.x;
    if (w.y != 0) rem_x -= (v.y / w.y) * w.x;  // v.y divisible by gcd w.y
    a = gcd(a, rem_x);
  }
  if (a == 0 || w.y == 0) return std::nullopt;
  if (w.y < 0) {
    w.x = -w.x;
    w.y = -w.y;
  }
  Integer c;
  mpz_fdiv_r(c.get_mpz_t(), w.x.get_mpz_t(), a.get_mpz_t());
  return std::array<IVec, 2>{IVec{a, Integer(0)}, IVec{c, w.y}};
}

struct Progression {
  Rational base, step;  // {base + k*step : k in Z}, step > 0
};

std::optional<Rational> first_in_open_unit_interval(const Progression& p) {
  // smallest element > 0
  Rational k = (-p.base) / p.step;
  Integer kf = floor_int(k) + 1;
  Rational t = p.base + Rational(kf) * p.step;
  if (t <= 0) t += p.step;  // guard against exact landing on 0
  if (t < 1) return t;
  return std::nullopt;
}

std::optional<Progression> intersect(const Progression& p, const Progression& q) {
  Integer Q = lcm(lcm(p.base.get_den(), p.step.get_den()),
                  lcm(q.base.get_den(), q.step.get_den()));
  Integer R1((p.base * Rational(Q)).get_num());
  Integer H1((p.step * Rational(Q)).get_num());
  Integer R2((q.base * Rational(Q)).get_num());
  Integer H2((q.step * Rational(Q)).get_num());
  Integer N = R2 - R1;
  Integer x, y;
  Integer g = extgcd(H1, H2, x, y);
  if (N % g != 0) return std::nullopt;
  Integer k0 = x * (N / g);
  Rational step = p.step * Rational(H2 / g);
  Rational base = p.base + Rational(k0) * p.step;
  // reduce base modulo step for numeric hygiene
  base -= Rational(floor_int(base / step)) * step;
  return Progression{base, step};
}

}  // namespace

Lattice::Lattice(const Vec2& b1, const Vec2& b2) {
  basis_ << b1.x(), b2.x(), b1.y(), b2.y();
  Rational d = tilekit::det(basis_);
  if (d == 0) throw Error(ErrorKind::SingularMap, "lattice basis is singular");
  det_ = abs(d);
}

Lattice::Lattice(const Mat2& basis) : Lattice(Vec2(basis.col(0)), Vec2(basis.col(1))) {}

Lattice Lattice::integers() { return Lattice(vec2(1, 0), vec2(0, 1)); }

const Mat2& Lattice::inv() const {
  if (!inv_) inv_ = inverse(basis_);
  return *inv_;
}

Vec2 Lattice::coords(const Vec2& p) const { return inv() * p; }

bool Lattice::contains(const Vec2& p, bool half) const {
  Vec2 c = coords(p);
  if (half) c *= Rational(2);
  return is_integer(c.x()) && is_integer(c.y());
}

std::pair<Mat2, Integer> Lattice::canonical_basis() const {
  Integer d = denominator_lcm(basis_);
  std::vector<IVec> gens;
  for (int j = 0; j < 2; ++j) {
    Rational gx = basis_(0, j) * Rational(d), gy = basis_(1, j) * Rational(d);
    gens.push_back(IVec{gx.get_num(), gy.get_num()});
  }
  auto hnf = integer_hnf(std::move(gens));
  if (!hnf) throw Error(ErrorKind::SingularMap, "rank-deficient lattice basis");
  Mat2 m;
  m << Rational((*hnf)[0].x), Rational((*hnf)[1].x), Rational((*hnf)[0].y),
      Rational((*hnf)[1].y);
  return {m, d};
}

std::string Lattice::canonical_key() const {
  auto [m, d] = canonical_basis();
  return m(0, 0).get_str() + "," + m(1, 0).get_str() + "," + m(0, 1).get_str() +
         "," + m(1, 1).get_str() + "/" + d.get_str();
}

bool Lattice::operator==(const Lattice& other) const {
  return canonical_key() == other.canonical_key();
}

bool lattice_contains(const Lattice& lam, const Vec2& p, bool half) {
  return lam.contains(p, half);
}

std::optional<Lattice> lattice_from_generators(const std::vector<Vec2>& gens) {
  if (gens.empty()) return std::nullopt;
  Integer d(1);
  for (const auto& g : gens) {
    d = lcm(d, g.x().get_den());
    d = lcm(d, g.y().get_den());
  }
  std::vector<IVec> igens;
  for (const auto& g : gens) {
    Rational gx = g.x() * Rational(d), gy = g.y() * Rational(d);
    igens.push_back(IVec{gx.get_num(), gy.get_num()});
  }
  auto hnf = integer_hnf(std::move(igens));
  if (!hnf) return std::nullopt;
  Rational rd(d);
  return Lattice(vec2(Rational((*hnf)[0].x) / rd, Rational((*hnf)[0].y) / rd),
                 vec2(Rational((*hnf)[1].x) / rd, Rational((*hnf)[1].y) / rd));
}

std::vector<Lattice> superlattices(const Lattice& base, const Integer& n) {
  if (n <= 0) throw Error(ErrorKind::BadInput, "superlattice index must be positive");
  std::vector<Lattice> out;
  Vec2 s1 = base.b1() / Rational(n), s2 = base.b2() / Rational(n);
  for (Integer a = 1; a <= n; ++a) {
    if (n % a != 0) continue;
    Integer dd = n / a;
    for (Integer c = 0; c < a; ++c) {
      Vec2 u = Rational(a) * s1;
      Vec2 v = Rational(c) * s1 + Rational(dd) * s2;
      out.emplace_back(u, v);
    }
  }
  return out;
}

std::optional<Vec2> half_lattice_point_on_open_segment(const Lattice& lam,
                                                       const Vec2& a,
                                                       const Vec2& b) {
  Vec2 c = lam.coords(a) * Rational(2);
  Vec2 e = lam.coords(Vec2(b - a)) * Rational(2);
  std::optional<Progression> sol;
  for (int j = 0; j < 2; ++j) {
    if (e(j) == 0) {
      if (!is_integer(c(j))) return std::nullopt;
      continue;
    }
    Progression pj{-c(j) / e(j), Rational(1) / abs(e(j))};
    if (!sol) {
      sol = pj;
    } else {
      sol = intersect(*sol, pj);
      if (!sol) return std::nullopt;
    }
  }
  if (!sol) return std::nullopt;  // degenerate segment; callers prevent this
  auto t = first_in_open_unit_interval(*sol);
  if (!t) return std::nullopt;
  return Vec2(a + *t * (b - a));
}

std::vector<Vec2> lattice_points_in_box(const Lattice& lam, const Vec2& lo,
                                        const Vec2& hi) {
  // map the box corners to coordinate space; scan its integer bounding box
  Vec2 corners[4] = {vec2(lo.x(), lo.y()), vec2(hi.x(), lo.y()),
                     vec2(lo.x(), hi.y()), vec2(hi.x(), hi.y())};
  Rational cmin[2], cmax[2];
  for (int k = 0; k < 4; ++k) {
    Vec2 cc = lam.coords(corners[k]);
    for (int j = 0; j < 2; ++j) {
      if (k == 0 || cc(j) < cmin[j]) cmin[j] = cc(j);
      if (k == 0 || cc(j) > cmax[j]) cmax[j] = cc(j);
    }
  }
  std::vector<Vec2> out;
  for (Integer i = ceil_int(cmin[0]); i <= floor_int(cmax[0]); ++i) {
    for (Integer j = ceil_int(cmin[1]); j <= floor_int(cmax[1]); ++j) {
      Vec2 p = lam.from_coords(vec2(Rational(i), Rational(j)));
      if (p.x() >= lo.x() && p.x() <= hi.x() && p.y() >= lo.y() && p.y() <= hi.y())
        out.push_back(p);
    }
  }
  return out;
}

PickCount pick_count(const std::vector<Vec2>& polygon, const Lattice& lam) {
  std::vector<Vec2> coords;
  coords.reserve(polygon.size());
  for (const auto& v : polygon) {
    Vec2 c = lam.coords(v);
    if (!is_integer(c.x()) || !is_integer(c.y()))
      throw Error(ErrorKind::VerticesNotOnLattice,
                  "vertex (" + to_string(v.x()) + "," + to_string(v.y()) +
                      ") is not a lattice point");
    coords.push_back(c);
  }
  Rational xmin = coords[0].x(), xmax = coords[0].x();
  Rational ymin = coords[0].y(), ymax = coords[0].y();
  for (const auto& c : coords) {
    xmin = std::min(xmin, c.x(), [](const Rational& a, const Rational& b) { return a < b; });
    xmax = std::max(xmax, c.x(), [](const Rational& a, const Rational& b) { return a < b; });
    ymin = std::min(ymin, c.y(), [](const Rational& a, const Rational& b) { return a < b; });
    ymax = std::max(ymax, c.y(), [](const Rational& a, const Rational& b) { return a < b; });
  }
  PickCount res{0, 0, shoelace_area(polygon)};
  for (Integer i(xmin.get_num()); i <= Integer(xmax.get_num()); ++i) {
    for (Integer j(ymin.get_num()); j <= Integer(ymax.get_num()); ++j) {
      switch (locate_in_simple_polygon(coords, vec2(Rational(i), Rational(j)))) {
        case SimpleLocation::Inside: ++res.interior_points; break;
        case SimpleLocation::Boundary: ++res.boundary_points; break;
        case SimpleLocation::Outside: break;
      }
    }
  }
  return res;
}

}  // namespace tilekit
