#ifndef DINING_GEOMETRY_HPP
#define DINING_GEOMETRY_HPP

#include <Eigen/Core>

namespace dining {

/// Planar point in meters. Origin is the bottom-left room corner, y grows upward.
template <typename Scalar>
using Point2 = Eigen::Matrix<Scalar, 2, 1>;

using Point = Point2<double>;

/// Direction a seated person faces. Always one of (+-1,0), (0,+-1) here.
using UnitVec = Eigen::Vector2d;

/// Absolute tolerance on cross products and coordinate comparisons.
inline constexpr double kGeomEps = 1e-9;

template <typename Scalar>
struct SegmentT {
  Point2<Scalar> a;
  Point2<Scalar> b;
};

template <typename Scalar>
struct RectT {
  Point2<Scalar> min;
  Point2<Scalar> max;

  bool valid() const { return min.x() < max.x() && min.y() < max.y(); }
  Point2<Scalar> center() const { return (min + max) / Scalar(2); }
};

using Segment = SegmentT<double>;
using Rect = RectT<double>;

template <typename Scalar>
Scalar distance(const Point2<Scalar>& p, const Point2<Scalar>& q) {
  return (p - q).norm();
}

/// z-component of (b - a) x (c - a).
template <typename Scalar>
Scalar cross(const Point2<Scalar>& a, const Point2<Scalar>& b,
             const Point2<Scalar>& c) {
  const Point2<Scalar> u = b - a;
  const Point2<Scalar> v = c - a;
  return u.x() * v.y() - u.y() * v.x();
}

bool segments_intersect(const Segment& s, const Segment& t);

/// True iff some point of `s` lies strictly inside `r`.
bool segment_intersects_rect_interior(const Segment& s, const Rect& r);

/// Closed rectangles share at least one interior point.
bool rect_interiors_overlap(const Rect& r, const Rect& q);

bool is_axis_aligned_unit(const UnitVec& v);

}  // namespace dining

#endif  // DINING_GEOMETRY_HPP
