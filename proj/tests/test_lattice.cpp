#include "tilekit/lattice.hpp"

#include "oracle_helpers.hpp"
#include "tilekit/errors.hpp"
#include "tilekit/polygon.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace tilekit;

TEST_CASE("membership: integer lattice and half lattice") {
  Lattice z = Lattice::integers();
  CHECK(z.contains(vec2(3, -4)));
  CHECK(!z.contains(vec2(rat(1, 2), Rational(1))));
  CHECK(z.contains(vec2(rat(1, 2), Rational(-2)), /*half=*/true));
  // the failing Theorem-1 midpoint: (1/2 - alpha, 1) at alpha = 1/10
  CHECK(!z.contains(vec2(rat(1, 2) - rat(1, 10), Rational(1)), /*half=*/true));
}

TEST_CASE("membership under a non-integer basis") {
  Lattice lam(vec2(1, 0), vec2(rat(1, 2), rat(1, 2)));
  CHECK(lam.contains(vec2(rat(5, 2), rat(3, 2))));
  CHECK(!lam.contains(vec2(rat(5, 2), Rational(1))));
  CHECK(lam.det() == rat(1, 2));
}

TEST_CASE("canonical key identifies equal lattices across bases") {
  Lattice a(vec2(1, 0), vec2(0, 1));
  Lattice b(vec2(3, 1), vec2(2, 1));  // also Z^2
  CHECK(a.canonical_key() == b.canonical_key());
  CHECK(a == b);
  Lattice c(vec2(2, 0), vec2(1, 1));
  CHECK(a.canonical_key() != c.canonical_key());

  Lattice d(vec2(rat(1, 2), Rational(0)), vec2(rat(3, 2), Rational(1)));
  Lattice e(vec2(rat(1, 2), Rational(0)), vec2(rat(1, 2), Rational(1)));
  CHECK(d == e);
}

TEST_CASE("lattice_from_generators spans and ranks") {
  auto lam = lattice_from_generators({vec2(2, 0), vec2(0, 3), vec2(1, 1)});
  REQUIRE(lam.has_value());
  CHECK(lam->contains(vec2(2, 0)));
  CHECK(lam->contains(vec2(0, 3)));
  CHECK(lam->contains(vec2(1, 1)));
  CHECK(lam->det() == 1);
  CHECK(!lattice_from_generators({vec2(2, 0), vec2(-3, 0)}).has_value());
  CHECK(!lattice_from_generators({vec2(0, 0)}).has_value());

  auto half = lattice_from_generators({vec2(rat(1, 2), Rational(0)), vec2(0, 1)});
  REQUIRE(half.has_value());
  CHECK(half->contains(vec2(rat(1, 2), Rational(0))));
  CHECK(half->det() == rat(1, 2));
}

TEST_CASE("generated lattice is the smallest containing the generators") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> c(-6, 6);
  for (int trial = 0; trial < 50; ++trial) {
    Vec2 g1 = vec2(rat(c(rng), 2), rat(c(rng), 2));
    Vec2 g2 = vec2(rat(c(rng), 2), rat(c(rng), 2));
    auto lam = lattice_from_generators({g1, g2});
    if (!lam) continue;
    // every integer combination is a member
    for (long a = -2; a <= 2; ++a)
      for (long b = -2; b <= 2; ++b)
        CHECK(lam->contains(Vec2(Rational(a) * g1 + Rational(b) * g2)));
    // determinant matches the generator parallelogram (two generators only)
    CHECK(lam->det() == abs(cross(g1, g2)));
  }
}

TEST_CASE("superlattice enumeration: count, containment, index") {
  Lattice z = Lattice::integers();
  for (long n : {1L, 2L, 3L, 4L, 6L, 12L}) {
    auto sup = superlattices(z, n);
    long sigma = 0;
    for (long d = 1; d <= n; ++d)
      if (n % d == 0) sigma += d;
    CHECK(static_cast<long>(sup.size()) == sigma);
    std::set<std::string> keys;
    for (const auto& s : sup) {
      keys.insert(s.canonical_key());
      CHECK(s.det() * Rational(n) == z.det());
      CHECK(s.contains(vec2(1, 0)));
      CHECK(s.contains(vec2(0, 1)));
    }
    CHECK(keys.size() == sup.size());
  }
}

TEST_CASE("half-lattice point on open segment agrees with brute force") {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<long> c(-8, 8);
  std::uniform_int_distribution<long> den(1, 4);
  int solved = 0;
  for (int trial = 0; trial < 200; ++trial) {
    Vec2 b1 = vec2(rat(c(rng), den(rng)), rat(c(rng), den(rng)));
    Vec2 b2 = vec2(rat(c(rng), den(rng)), rat(c(rng), den(rng)));
    if (cross(b1, b2) == 0) continue;
    Lattice lam(b1, b2);
    Vec2 a = vec2(rat(c(rng), den(rng)), rat(c(rng), den(rng)));
    Vec2 b = vec2(rat(c(rng), den(rng)), rat(c(rng), den(rng)));
    if (vec_eq(a, b)) continue;
    auto fast = half_lattice_point_on_open_segment(lam, a, b);
    auto brute = oracle::half_point_on_segment_brute(lam, a, b);
    CHECK(fast.has_value() == brute.has_value());
    if (fast) {
      ++solved;
      // witness is a half-lattice point strictly inside the segment
      CHECK(lam.contains(*fast, /*half=*/true));
      Vec2 d = b - a, e = *fast - a;
      CHECK(cross(d, e) == 0);
      Rational t = dot(e, d) / dot(d, d);
      CHECK(t > 0);
      CHECK(t < 1);
    }
  }
  CHECK(solved > 10);  // the comparison exercised both outcomes
}

TEST_CASE("pick_count on the standard triangle") {
  Lattice z = Lattice::integers();
  PickCount pc = pick_count({vec2(0, 0), vec2(1, 0), vec2(0, 1)}, z);
  CHECK(pc.interior_points == 0);
  CHECK(pc.boundary_points == 3);
  CHECK(pc.area == rat(1, 2));
}

TEST_CASE("pick_count on the six-fold Q10 decagon") {
  std::vector<Vec2> half = {vec2(0, 1), vec2(5, 2), vec2(7, 2), vec2(6, 1),
                            vec2(4, 0)};
  std::vector<Vec2> pts = half;
  for (const auto& v : half) pts.push_back(Vec2(-v));
  CSPolygon p = polygon_from_points(pts);
  CHECK(p.area() == 22);
  PickCount pc = pick_count(p.vertices(), Lattice::integers());
  CHECK(pc.area == 22);
  // Pick identity
  CHECK(Rational(pc.interior_points) + Rational(pc.boundary_points) / 2 - 1 ==
        pc.area);
}

TEST_CASE("pick identity and even boundary count on random CS lattice polygons") {
  std::mt19937_64 rng(31);
  Lattice z = Lattice::integers();
  for (int trial = 0; trial < 100; ++trial) {
    auto hull = oracle::random_cs_lattice_polygon(rng, 3);
    CSPolygon p = polygon_from_points(hull);
    PickCount pc = pick_count(p.vertices(), z);
    CHECK(pc.boundary_points % 2 == Integer(0));
    CHECK(Rational(pc.interior_points) + Rational(pc.boundary_points) / 2 - 1 ==
          pc.area);
    CHECK(pc.area == p.area());
  }
}

TEST_CASE("pick identity normalizes by the lattice determinant") {
  Lattice lam(vec2(2, 0), vec2(1, 3));  // det 6
  // parallelogram spanned by the basis
  std::vector<Vec2> para = {vec2(0, 0), vec2(2, 0), vec2(3, 3), vec2(1, 3)};
  PickCount pc = pick_count(para, lam);
  CHECK(pc.area == 6);
  CHECK(Rational(pc.interior_points) + Rational(pc.boundary_points) / 2 - 1 ==
        pc.area / lam.det());
  CHECK_THROWS_AS(pick_count({vec2(0, 0), vec2(1, 0), vec2(0, 1)}, lam), Error);
}

TEST_CASE("lattice_points_in_box is exhaustive for the integer lattice") {
  Lattice z = Lattice::integers();
  auto pts = lattice_points_in_box(z, vec2(rat(-3, 2), Rational(0)), vec2(2, 2));
  // x in {-1,0,1,2}, y in {0,1,2}
  CHECK(pts.size() == 12);
}
