#include "tilekit/affine.hpp"

namespace tilekit {

AffineMap::AffineMap(const Mat2& linear, const Vec2& translation)
    : linear_(linear), translation_(translation) {
  if (det(linear_) == 0)
    throw Error(ErrorKind::SingularMap, "affine map with singular linear part");
}

AffineMap AffineMap::identity() {
  Mat2 m;
  m << Rational(1), Rational(0), Rational(0), Rational(1);
  return AffineMap(m, vec2(0, 0));
}

bool AffineMap::is_unimodular() const {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (!is_integer(linear_(i, j))) return false;
  Rational d = det(linear_);
  return d == 1 || d == -1;
}

AffineMap AffineMap::compose(const AffineMap& inner) const {
  return AffineMap(Mat2(linear_ * inner.linear_),
                   Vec2(linear_ * inner.translation_ + translation_));
}

AffineMap AffineMap::inverse() const {
  Mat2 inv = tilekit::inverse(linear_);
  return AffineMap(inv, Vec2(-(inv * translation_)));
}

CSPolygon apply_affine(const CSPolygon& p, const AffineMap& t) {
  if (!t.is_linear())
    throw Error(ErrorKind::NotCentered,
                "affine image of a centered polygon needs a linear map");
  std::vector<Vec2> pts;
  pts.reserve(p.size());
  for (const auto& v : p.vertices()) pts.push_back(t.apply(v));
  return polygon_from_points(std::move(pts));
}

Lattice apply_affine(const Lattice& lam, const AffineMap& t) {
  return Lattice(Mat2(t.linear() * lam.basis()));
}

}  // namespace tilekit
