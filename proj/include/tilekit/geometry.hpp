#pragma once

#include "tilekit/rational.hpp"

#include <Eigen/Dense>

namespace tilekit {

using Vec2 = Eigen::Matrix<Rational, 2, 1>;
using Mat2 = Eigen::Matrix<Rational, 2, 2>;

inline Vec2 vec2(const Rational& x, const Rational& y) {
  Vec2 v;
  v << x, y;
  return v;
}

inline Vec2 vec2(long x, long y) { return vec2(Rational(x), Rational(y)); }

template <typename DA, typename DB>
Rational cross(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  return a(0) * b(1) - a(1) * b(0);
}

template <typename DA, typename DB>
Rational dot(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  return a(0) * b(0) + a(1) * b(1);
}

// sign of the turn a->b->c; > 0 is a left (counterclockwise) turn
inline int orientation(const Vec2& a, const Vec2& b, const Vec2& c) {
  return sign(cross(Vec2(b - a), Vec2(c - a)));
}

inline bool lex_less(const Vec2& a, const Vec2& b) {
  int c = cmp(a.x(), b.x());
  if (c != 0) return c < 0;
  return a.y() < b.y();
}

inline bool vec_eq(const Vec2& a, const Vec2& b) {
  return a.x() == b.x() && a.y() == b.y();
}

inline Rational det(const Mat2& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

// exact inverse via the adjugate; throws on singular input
inline Mat2 inverse(const Mat2& m) {
  Rational d = det(m);
  if (d == 0) throw std::invalid_argument("singular 2x2 matrix");
  Mat2 inv;
  inv << m(1, 1) / d, -m(0, 1) / d, -m(1, 0) / d, m(0, 0) / d;
  return inv;
}

}  // namespace tilekit
