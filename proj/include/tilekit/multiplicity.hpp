#pragma once

#include "tilekit/bolle.hpp"

#include <random>
#include <utility>
#include <vector>

namespace tilekit {

// Translates t in Lambda with p in int(P)+t, and separately p in bd(P)+t,
// by exact enumeration over the bounding box of p - P.
std::pair<long, long> covering_multiplicity_at(const CSPolygon& p,
                                               const Lattice& lam,
                                               const Vec2& q);

// Bolle check plus an oracle cross-check: `samples` generic points in a
// fundamental parallelogram must each lie in exactly k translate interiors.
// Throws BolleFailed / MultiplicityMismatch.
TilingCertificate verify_kfold(const CSPolygon& p, const Lattice& lam,
                               const Integer& k, long samples = 1000,
                               unsigned long seed = 20240601UL);

struct BoundaryIncidence {
  Vec2 translate;
  bool at_vertex;
  int index;            // vertex or edge index in the translate
  double inner_angle;   // pi for edge-interior incidence
};

struct MultiplicityDecomposition {
  Vec2 at;
  long interior_count;                         // exact psi
  std::vector<BoundaryIncidence> boundary_translates;
  double turning;                              // float phi = sum(angles)/2pi
  Rational turning_exact;                      // k - psi
};

// Decomposes the covering multiplicity at a point of a certified tiling into
// interior translates (exact) and the boundary angle sum (float, asserted to
// sit on the half-integer grid within 1e-9 and to match k - psi).
MultiplicityDecomposition multiplicity_decomposition_at(const CSPolygon& p,
                                                        const Lattice& lam,
                                                        const Vec2& q);

// Generic rational point in the fundamental parallelogram: coordinates are
// random 31-bit numerators over denominator 2^31; resampled until no
// translate boundary passes through it.
Vec2 sample_generic_point(const CSPolygon& p, const Lattice& lam,
                          std::mt19937_64& rng);

}  // namespace tilekit
