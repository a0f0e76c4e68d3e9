#include "tilekit/bolle.hpp"

#include "tilekit/errors.hpp"

namespace tilekit {

BolleResult bolle_check(const CSPolygon& p, const Lattice& lam) {
  BolleResult res;
  res.area = p.area();
  res.det = lam.det();

  std::vector<EdgeEvidence> evidence;
  int n = p.size();
  for (int i = 0; i < n; ++i) {
    Vec2 u = p.midpoint(i);
    Vec2 e = p.edge(i);
    if (lam.contains(u, /*half=*/true)) {
      evidence.push_back(
          {i, EdgeEvidenceKind::MidpointInHalfLattice, u, e, u});
      continue;
    }
    // midpoint misses (1/2)Lambda: the edge must be a lattice vector and its
    // relative interior must still meet the half-lattice
    bool is_vec = lam.contains(e);
    auto witness =
        half_lattice_point_on_open_segment(lam, p.vertex(i), p.vertex(i + 1));
    if (is_vec && witness) {
      evidence.push_back({i, EdgeEvidenceKind::EdgeIsLatticeVector, u, e, *witness});
      continue;
    }
    std::string reason = "midpoint (" + to_string(u.x()) + "," + to_string(u.y()) +
                         ") not in half-lattice";
    if (!witness) reason += "; no half-lattice point in the relative interior";
    if (!is_vec)
      reason += "; edge vector (" + to_string(e.x()) + "," + to_string(e.y()) +
                ") not a lattice vector";
    res.failures.push_back({i, reason});
  }
  if (!res.failures.empty()) return res;

  Rational k = res.area / res.det;
  if (!is_integer(k) || k <= 0)
    throw Error(ErrorKind::NonIntegerMultiplicity,
                "Bolle conditions hold but area/det = " + to_string(k) +
                    " is not a positive integer");
  // symmetric edges must carry symmetric evidence
  int m = p.m();
  for (int i = 0; i < m; ++i) {
    if (evidence[i].kind != evidence[i + m].kind)
      throw Error(ErrorKind::NonIntegerMultiplicity,
                  "asymmetric evidence on edge pair " + std::to_string(i));
  }
  res.certificate = TilingCertificate{p, lam, Integer(k.get_num()), evidence, std::nullopt};
  return res;
}

}  // namespace tilekit
