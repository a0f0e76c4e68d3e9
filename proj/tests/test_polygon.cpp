#include "tilekit/polygon.hpp"

#include "oracle_helpers.hpp"
#include "tilekit/errors.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace tilekit;

namespace {

std::vector<Vec2> unit_square_points() {
  return {vec2(rat(1, 2), rat(1, 2)), vec2(rat(-1, 2), rat(1, 2)),
          vec2(rat(-1, 2), rat(-1, 2)), vec2(rat(1, 2), rat(-1, 2))};
}

// Theorem-1 octagon exactly as printed, half cycle + negatives
std::vector<Vec2> printed_octagon_points(const Rational& a) {
  std::vector<Vec2> half = {vec2(a - 1, Rational(2)), vec2(a, Rational(-2)),
                            vec2(1 - a, Rational(0)), vec2(1 + a, Rational(-1))};
  std::vector<Vec2> pts = half;
  for (const auto& v : half) pts.push_back(Vec2(-v));
  return pts;
}

}  // namespace

TEST_CASE("unit square is accepted with m=2 and area 1") {
  CSPolygon p = polygon_from_points(unit_square_points());
  CHECK(p.m() == 2);
  CHECK(p.area() == 1);
}

TEST_CASE("printed octagon is accepted; cyclic order differs from label order") {
  Rational a = rat(1, 10);
  auto labels = printed_octagon_points(a);
  CSPolygon p = polygon_from_points(labels);
  CHECK(p.m() == 4);

  // agreement with an independent hull oracle
  auto hull = oracle::convex_hull(labels);
  REQUIRE(hull.size() == 8);
  // same cyclic set
  for (const auto& h : hull) {
    bool found = false;
    for (const auto& v : p.vertices())
      if (vec_eq(h, v)) found = true;
    CHECK(found);
  }
  // the printed labels v1 and v2 are not adjacent on the hull
  int i1 = -1, i2 = -1;
  for (int i = 0; i < p.size(); ++i) {
    if (vec_eq(p.vertex(i), labels[0])) i1 = i;
    if (vec_eq(p.vertex(i), labels[1])) i2 = i;
  }
  REQUIRE(i1 >= 0);
  REQUIRE(i2 >= 0);
  int d = std::abs(i1 - i2);
  d = std::min(d, 8 - d);
  CHECK(d != 1);
}

TEST_CASE("degenerate inputs are rejected") {
  CHECK_THROWS_AS(polygon_from_points({vec2(0, 0), vec2(1, 0), vec2(-1, 0),
                                       vec2(0, 1), vec2(0, -1)}),
                  Error);
  // not closed under negation
  CHECK_THROWS_AS(polygon_from_points({vec2(1, 0), vec2(0, 1), vec2(-1, 0),
                                       vec2(0, -2)}),
                  Error);
  // collinear point on the hull boundary
  CHECK_THROWS_AS(polygon_from_points({vec2(1, 1), vec2(-1, 1), vec2(-1, -1),
                                       vec2(1, -1), vec2(0, 1), vec2(0, -1)}),
                  Error);
  // interior point
  CHECK_THROWS_AS(polygon_from_points({vec2(2, 2), vec2(-2, 2), vec2(-2, -2),
                                       vec2(2, -2), vec2(1, 0), vec2(-1, 0)}),
                  Error);
  CHECK_THROWS_AS(polygon_from_points({vec2(1, 0), vec2(-1, 0)}), Error);
}

TEST_CASE("polygon_from_points is permutation invariant") {
  std::mt19937_64 rng(11);
  auto pts = printed_octagon_points(rat(1, 12));
  CSPolygon ref = polygon_from_points(pts);
  for (int i = 0; i < 20; ++i) {
    std::shuffle(pts.begin(), pts.end(), rng);
    CHECK(polygon_from_points(pts) == ref);
  }
}

TEST_CASE("areas: unit square, beta octagon, printed octagon") {
  CHECK(polygon_from_points(unit_square_points()).area() == 1);

  // five-fold beta octagon at beta = 3/10
  Rational b = rat(3, 10);
  std::vector<Vec2> half = {vec2(b, Rational(-2)), vec2(1 + b, Rational(-2)),
                            vec2(1 - b, Rational(0)), vec2(b, Rational(1))};
  std::vector<Vec2> pts = half;
  for (const auto& v : half) pts.push_back(Vec2(-v));
  CHECK(polygon_from_points(pts).area() == 5);

  // printed Theorem-1 octagon has area 6 - 4*alpha
  for (long num : {1L, 2L, 3L}) {
    Rational a = rat(num, 20);
    CSPolygon p = polygon_from_points(printed_octagon_points(a));
    CHECK(p.area() == Rational(6) - 4 * a);
  }
  CHECK(polygon_from_points(printed_octagon_points(rat(1, 10))).area() ==
        rat(28, 5));
}

TEST_CASE("edge vectors of any polygon sum to zero exactly") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 25; ++trial) {
    auto hull = oracle::random_cs_lattice_polygon(rng, 3 + trial % 3);
    CSPolygon p = polygon_from_points(hull);
    Vec2 s = vec2(0, 0);
    for (int i = 0; i < p.size(); ++i) s += p.edge(i);
    CHECK(s.x() == 0);
    CHECK(s.y() == 0);
  }
}

TEST_CASE("point location on the unit square") {
  CSPolygon p = polygon_from_points(unit_square_points());
  CHECK(std::holds_alternative<Interior>(point_location(p, vec2(0, 0))));
  CHECK(std::holds_alternative<OnEdge>(point_location(p, vec2(rat(1, 2), Rational(0)))));
  CHECK(std::holds_alternative<AtVertex>(
      point_location(p, vec2(rat(1, 2), rat(1, 2)))));
  CHECK(std::holds_alternative<Exterior>(point_location(p, vec2(1, 0))));
  CHECK(std::holds_alternative<Exterior>(
      point_location(p, vec2(rat(1, 2), Rational(2)))));
  auto loc = point_location(p, vec2(rat(1, 2), rat(1, 4)));
  auto* oe = std::get_if<OnEdge>(&loc);
  REQUIRE(oe != nullptr);
  CHECK(oe->parameter > 0);
  CHECK(oe->parameter < 1);
}

TEST_CASE("shoelace area equals twice the half-cycle cross sum") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    auto hull = oracle::random_cs_lattice_polygon(rng, 3 + trial % 3);
    CSPolygon p = polygon_from_points(hull);
    int m = p.m();
    Rational half_sum(0);
    for (int i = 0; i < m; ++i) half_sum += cross(p.vertex(i), p.vertex(i + 1));
    CHECK(p.area() == half_sum);
  }
}
