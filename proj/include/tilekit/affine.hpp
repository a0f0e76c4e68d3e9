#pragma once

#include "tilekit/errors.hpp"
#include "tilekit/geometry.hpp"
#include "tilekit/lattice.hpp"
#include "tilekit/polygon.hpp"

namespace tilekit {

// Nonsingular affine map p -> linear*p + translation.
class AffineMap {
 public:
  AffineMap(const Mat2& linear, const Vec2& translation);
  static AffineMap identity();
  static AffineMap linear_map(const Mat2& m) { return AffineMap(m, vec2(0, 0)); }

  const Mat2& linear() const { return linear_; }
  const Vec2& translation() const { return translation_; }
  Rational determinant() const { return det(linear_); }

  bool is_linear() const { return translation_.x() == 0 && translation_.y() == 0; }
  // integer matrix with determinant +-1
  bool is_unimodular() const;

  Vec2 apply(const Vec2& p) const { return linear_ * p + translation_; }
  AffineMap compose(const AffineMap& inner) const;  // this after inner
  AffineMap inverse() const;

 private:
  Mat2 linear_;
  Vec2 translation_;
};

// Image polygon; requires a linear map so the result stays centered at the
// origin. Area scales by |det|.
CSPolygon apply_affine(const CSPolygon& p, const AffineMap& t);

// Lattices map by the linear part.
Lattice apply_affine(const Lattice& lam, const AffineMap& t);

}  // namespace tilekit
