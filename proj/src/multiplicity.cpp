#include "tilekit/multiplicity.hpp"

#include "tilekit/errors.hpp"

#include <cmath>

namespace tilekit {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::vector<Vec2> candidate_translates(const CSPolygon& p, const Lattice& lam,
                                       const Vec2& q) {
  Vec2 lo = q - p.bbox_max();
  Vec2 hi = q - p.bbox_min();
  return lattice_points_in_box(lam, lo, hi);
}

double inner_angle_at(const CSPolygon& p, int vertex) {
  Vec2 a = p.vertex(vertex - 1) - p.vertex(vertex);
  Vec2 b = p.vertex(vertex + 1) - p.vertex(vertex);
  double ax = to_double(a.x()), ay = to_double(a.y());
  double bx = to_double(b.x()), by = to_double(b.y());
  double crossd = std::abs(ax * by - ay * bx);
  double dotd = ax * bx + ay * by;
  return std::atan2(crossd, dotd);
}

}  // namespace

std::pair<long, long> covering_multiplicity_at(const CSPolygon& p,
                                               const Lattice& lam,
                                               const Vec2& q) {
  long interior = 0, boundary = 0;
  for (const auto& t : candidate_translates(p, lam, q)) {
    PointLocation loc = point_location(p, Vec2(q - t));
    if (is_interior(loc))
      ++interior;
    else if (is_boundary(loc))
      ++boundary;
  }
  return {interior, boundary};
}

Vec2 sample_generic_point(const CSPolygon& p, const Lattice& lam,
                          std::mt19937_64& rng) {
  const long den = 1L << 31;
  std::uniform_int_distribution<long> dist(0, den - 1);
  for (;;) {
    Rational x = rat(dist(rng), den);
    Rational y = rat(dist(rng), den);
    Vec2 q = lam.from_coords(vec2(x, y));
    auto [ic, bc] = covering_multiplicity_at(p, lam, q);
    (void)ic;
    if (bc == 0) return q;
  }
}

TilingCertificate verify_kfold(const CSPolygon& p, const Lattice& lam,
                               const Integer& k, long samples,
                               unsigned long seed) {
  if (k < 1) throw Error(ErrorKind::BadInput, "k must be >= 1");
  BolleResult res = bolle_check(p, lam);
  if (!res.passed()) {
    std::string what = "Bolle criterion fails:";
    for (const auto& f : res.failures)
      what += " [edge " + std::to_string(f.edge) + "] " + f.reason;
    throw Error(ErrorKind::BolleFailed, what);
  }
  TilingCertificate cert = *res.certificate;
  if (cert.k != k)
    throw Error(ErrorKind::BolleFailed,
                "multiplicity mismatch: area/det = " + cert.k.get_str() +
                    ", expected k = " + k.get_str());
  std::mt19937_64 rng(seed);
  OracleSummary oracle;
  oracle.seed = seed;
  for (long i = 0; i < samples; ++i) {
    Vec2 q = sample_generic_point(p, lam, rng);
    auto [ic, bc] = covering_multiplicity_at(p, lam, q);
    ++oracle.points_tested;
    if (ic != k)
      throw Error(ErrorKind::MultiplicityMismatch,
                  "oracle found multiplicity " + std::to_string(ic) +
                      " != k = " + k.get_str() + " at (" + to_string(q.x()) +
                      "," + to_string(q.y()) + ")");
    ++oracle.matching;
    (void)bc;
  }
  cert.oracle = oracle;
  return cert;
}

MultiplicityDecomposition multiplicity_decomposition_at(const CSPolygon& p,
                                                        const Lattice& lam,
                                                        const Vec2& q) {
  BolleResult res = bolle_check(p, lam);
  if (!res.passed())
    throw Error(ErrorKind::NotCertified,
                "decomposition needs a certified tiling pair");
  Integer k = res.certificate->k;

  MultiplicityDecomposition dec;
  dec.at = q;
  dec.interior_count = 0;
  double angle_sum = 0.0;
  for (const auto& t : candidate_translates(p, lam, q)) {
    PointLocation loc = point_location(p, Vec2(q - t));
    if (is_interior(loc)) {
      ++dec.interior_count;
    } else if (auto* e = std::get_if<OnEdge>(&loc)) {
      dec.boundary_translates.push_back({t, false, e->edge, kPi});
      angle_sum += kPi;
    } else if (auto* v = std::get_if<AtVertex>(&loc)) {
      double ang = inner_angle_at(p, v->vertex);
      dec.boundary_translates.push_back({t, true, v->vertex, ang});
      angle_sum += ang;
    }
  }
  dec.turning = angle_sum / (2.0 * kPi);
  dec.turning_exact = Rational(k) - Rational(dec.interior_count);

  double twice = 2.0 * dec.turning;
  if (std::abs(twice - std::round(twice)) > 1e-9)
    throw Error(ErrorKind::MultiplicityMismatch,
                "angle sum is not on the half-integer grid: phi = " +
                    std::to_string(dec.turning));
  if (std::abs(dec.turning - to_double(dec.turning_exact)) > 1e-9)
    throw Error(ErrorKind::MultiplicityMismatch,
                "angle sum disagrees with k - psi: phi = " +
                    std::to_string(dec.turning) + ", k - psi = " +
                    to_string(dec.turning_exact));

  // the identity is re-checked at a perturbed generic point nearby
  std::mt19937_64 rng(0x5eedULL);
  const long den = 1L << 31;
  std::uniform_int_distribution<long> dist(1, (1L << 16) - 1);
  for (;;) {
    Vec2 d = lam.from_coords(vec2(rat(dist(rng), den), rat(dist(rng), den)));
    Vec2 qq = q + d;
    auto [ic, bc] = covering_multiplicity_at(p, lam, qq);
    if (bc != 0) continue;
    if (ic != k)
      throw Error(ErrorKind::MultiplicityMismatch,
                  "perturbed generic point has multiplicity " + std::to_string(ic));
    break;
  }
  return dec;
}

}  // namespace tilekit
