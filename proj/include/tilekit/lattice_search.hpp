#pragma once

#include "tilekit/bolle.hpp"

namespace tilekit {

struct LatticeSearchResult {
  std::vector<Lattice> lattices;          // certifying lattices, deduplicated
  int rank_deficient_subsets = 0;         // skipped generator subsets
  int subsets_tried = 0;
  bool complete() const { return rank_deficient_subsets == 0; }
};

// Complete search for lattices certifying P as a k-fold tile. For each of
// the 2^m subsets of symmetry-distinct edges, the lattice generated by
// {2u_i : chosen} + {e_i : rest} must be contained in any certifying lattice
// with that evidence pattern; its index-n superlattices (n from the det/area
// balance) are enumerated and Bolle-checked. Empty means no Bolle-compatible
// lattice exists, modulo any rank-deficient subsets (possible only for
// parallelograms, where a diagonal equals a doubled midpoint).
LatticeSearchResult find_tiling_lattice(const CSPolygon& p, const Integer& k);

}  // namespace tilekit
