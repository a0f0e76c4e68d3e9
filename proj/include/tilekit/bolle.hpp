#pragma once

#include "tilekit/lattice.hpp"
#include "tilekit/polygon.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tilekit {

enum class EdgeEvidenceKind { MidpointInHalfLattice, EdgeIsLatticeVector };

struct EdgeEvidence {
  int edge;
  EdgeEvidenceKind kind;
  Vec2 midpoint;
  Vec2 edge_vector;
  Vec2 witness;  // half-lattice point in the edge's relative interior
};

struct EdgeFailure {
  int edge;
  std::string reason;
};

struct OracleSummary {
  long points_tested = 0;
  long matching = 0;
  unsigned long seed = 0;
};

struct TilingCertificate {
  CSPolygon polygon;
  Lattice lattice;
  Integer k;
  std::vector<EdgeEvidence> per_edge;
  std::optional<OracleSummary> oracle;
};

struct BolleResult {
  std::optional<TilingCertificate> certificate;
  std::vector<EdgeFailure> failures;
  Rational area;
  Rational det;
  bool passed() const { return certificate.has_value(); }
};

// Bolle's criterion: central symmetry (by type), a half-lattice point in
// every edge's relative interior, and every edge whose midpoint misses the
// half-lattice is a lattice vector. On pass, k = area/det is certified a
// positive integer.
BolleResult bolle_check(const CSPolygon& p, const Lattice& lam);

}  // namespace tilekit
