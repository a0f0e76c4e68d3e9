#pragma once

#include "tilekit/errors.hpp"
#include "tilekit/geometry.hpp"
#include "tilekit/polygon.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tilekit {

// Rank-2 lattice given by a rational basis (columns of `basis`).
class Lattice {
 public:
  Lattice(const Vec2& b1, const Vec2& b2);
  explicit Lattice(const Mat2& basis);

  static Lattice integers();

  const Mat2& basis() const { return basis_; }
  Vec2 b1() const { return basis_.col(0); }
  Vec2 b2() const { return basis_.col(1); }
  // absolute determinant (fundamental-domain area), > 0
  const Rational& det() const { return det_; }

  // coordinates of p in this basis (exact 2x2 solve)
  Vec2 coords(const Vec2& p) const;
  Vec2 from_coords(const Vec2& c) const { return basis_ * c; }

  // membership in the lattice, or in (1/2)Lambda when half is set
  bool contains(const Vec2& p, bool half = false) const;

  // minimal D > 0 with D*Lambda inside Z^2, and the Hermite normal form of
  // D*Lambda; (hnf, D) identifies the lattice uniquely
  std::pair<Mat2, Integer> canonical_basis() const;
  std::string canonical_key() const;
  bool operator==(const Lattice& other) const;

 private:
  Mat2 basis_;
  Rational det_;
  mutable std::optional<Mat2> inv_;  // cached inverse of basis_
  const Mat2& inv() const;
};

bool lattice_contains(const Lattice& lam, const Vec2& p, bool half = false);

// Lattice generated by a set of rational vectors; nullopt when the span has
// rank < 2.
std::optional<Lattice> lattice_from_generators(const std::vector<Vec2>& gens);

// All superlattices of `base` of index n (there are sigma(n) of them),
// enumerated by triangular bases (a,0),(c,d) with a*d = n, 0 <= c < a over
// the (1/n)-scaled base basis.
std::vector<Lattice> superlattices(const Lattice& base, const Integer& n);

// Some point of (1/2)Lambda in the open segment (a,b), if any: solves the
// 1-parameter rational congruence along the segment exactly.
std::optional<Vec2> half_lattice_point_on_open_segment(const Lattice& lam,
                                                       const Vec2& a,
                                                       const Vec2& b);

// All lattice points in the axis-aligned box [lo, hi] (exact; box corners
// are mapped to coordinate space and the integer region is scanned).
std::vector<Vec2> lattice_points_in_box(const Lattice& lam, const Vec2& lo,
                                        const Vec2& hi);

struct PickCount {
  Integer interior_points;
  Integer boundary_points;
  Rational area;  // Euclidean shoelace area
};

// Exact interior/boundary lattice-point counts by enumeration over the
// bounding box. Vertices must lie in the lattice. Pick's identity reads
// area/det = I + B/2 - 1.
PickCount pick_count(const std::vector<Vec2>& polygon, const Lattice& lam);

}  // namespace tilekit
