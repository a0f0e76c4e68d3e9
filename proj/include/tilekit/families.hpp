#pragma once

#include "tilekit/lattice.hpp"
#include "tilekit/polygon.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tilekit {

// One-parameter polygon family: vertex i is const_part[i] + t*coeff[i] for a
// rational parameter t in the open feasibility interval.
class ParametricFamily {
 public:
  ParametricFamily(std::string name, std::string parameter_symbol,
                   std::vector<Vec2> const_part, std::vector<Vec2> coeff,
                   Rational lo, Rational hi, Integer intended_k,
                   std::optional<Lattice> reference_lattice);

  const std::string& name() const { return name_; }
  const std::string& parameter_symbol() const { return symbol_; }
  const Rational& lower() const { return lo_; }
  const Rational& upper() const { return hi_; }
  const Integer& intended_k() const { return k_; }
  const std::optional<Lattice>& reference_lattice() const { return lattice_; }
  int vertex_count() const { return static_cast<int>(const_part_.size()); }
  const std::vector<Vec2>& const_part() const { return const_part_; }
  const std::vector<Vec2>& coeff() const { return coeff_; }

  // raw vertex list at t, no feasibility check
  std::vector<Vec2> vertices_at(const Rational& t) const;
  // certified polygon; throws ParameterOutOfRange outside the open interval
  // (endpoints degenerate)
  CSPolygon instantiate(const Rational& t) const;

 private:
  std::string name_, symbol_;
  std::vector<Vec2> const_part_, coeff_;
  Rational lo_, hi_;
  Integer k_;
  std::optional<Lattice> lattice_;
};

enum class OctagonVariant { SixFoldCorrected, SixFoldAsPrinted, FiveFoldBeta };

const ParametricFamily& octagon_family_def(OctagonVariant variant);
CSPolygon octagon_family(OctagonVariant variant, const Rational& parameter);

// Half-cycle edge midpoints u_0..u_{m-1}; the other m follow by negation.
struct MidpointSpec {
  std::vector<Vec2> u;
  int m() const { return static_cast<int>(u.size()); }
  Vec2 midpoint(int i) const {
    int mm = m();
    int j = ((i % (2 * mm)) + 2 * mm) % (2 * mm);
    return j < mm ? u[j] : Vec2(-u[j - mm]);
  }
  // alternating closure sum; must vanish for odd m
  Vec2 closure_sum() const;
  bool closed() const;
};

enum class DecagonFamily { A, B };

MidpointSpec family_midpoints(DecagonFamily which);

// Edge-pair junction carrying the free vertex in the paper's description:
// vertex a+1 is shared by edges a and a+1.
int family_anchor(DecagonFamily which);

// Free vertex placed at the junction of edges anchor and anchor+1, the rest
// propagated by v_{i+1} = 2 u_i - v_i. Exact closure is verified, then
// strict convexity of the propagated cycle.
CSPolygon decagon_from_midpoints(const MidpointSpec& spec, const Vec2& free_vertex,
                                 int anchor_index);

struct HalfPlane {
  // strict constraint nx*x + ny*y < b
  Rational nx, ny, b;
};

// Open convex polygon of admissible free-vertex positions.
struct FreedomRegion {
  int anchor_index = 0;
  int free_vertex_index = 0;
  std::vector<HalfPlane> halfplanes;
  std::vector<Vec2> vertices;  // of the closure, counterclockwise
  bool bounded = true;
  bool empty = true;

  bool contains(const Vec2& w) const;  // strict (open region)
  Vec2 interior_point() const;         // vertex centroid; valid when nonempty
};

// Exact intersection of the strict-convexity half-planes; each constraint is
// affine in the free vertex (the quadratic terms cancel).
FreedomRegion freedom_region(const MidpointSpec& spec, int anchor_index);

}  // namespace tilekit
