#pragma once

#include "tilekit/polygon.hpp"

namespace tilekit {

// Entry bound for the unimodular search: 4 * max(1, ceil(diam^2 / area)),
// an eccentricity proxy that grows with shear so stretched polygons can
// always be mapped back.
Integer unimodular_entry_bound(const CSPolygon& p);

// Canonical representative of an integer-vertex polygon under the unimodular
// group (reflections included): the minimum of (inf-norm diameter,
// lexicographic vertex list) over images U*P with |U entries| <= bound,
// iterated to a fixed point. Equal canonical forms imply unimodular
// equivalence; distinct forms imply inequivalence within the searched bound.
// bound == 0 selects unimodular_entry_bound(p).
CSPolygon canonical_form(const CSPolygon& p, const Integer& bound = 0);

std::string polygon_key(const CSPolygon& p);

}  // namespace tilekit
