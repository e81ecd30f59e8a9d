#include "dining/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace dining {
namespace {

int orientation(const Point& a, const Point& b, const Point& c) {
  const double v = cross(a, b, c);
  if (v > kGeomEps) return 1;
  if (v < -kGeomEps) return -1;
  return 0;
}

// c is collinear with a-b; is it within the closed bounding box of a-b?
bool on_segment(const Point& a, const Point& b, const Point& c) {
  return c.x() <= std::max(a.x(), b.x()) + kGeomEps &&
         c.x() >= std::min(a.x(), b.x()) - kGeomEps &&
         c.y() <= std::max(a.y(), b.y()) + kGeomEps &&
         c.y() >= std::min(a.y(), b.y()) - kGeomEps;
}

}  // namespace

bool segments_intersect(const Segment& s, const Segment& t) {
  const int o1 = orientation(s.a, s.b, t.a);
  const int o2 = orientation(s.a, s.b, t.b);
  const int o3 = orientation(t.a, t.b, s.a);
  const int o4 = orientation(t.a, t.b, s.b);

  if (o1 * o2 < 0 && o3 * o4 < 0) return true;

  if (o1 == 0 && on_segment(s.a, s.b, t.a)) return true;
  if (o2 == 0 && on_segment(s.a, s.b, t.b)) return true;
  if (o3 == 0 && on_segment(t.a, t.b, s.a)) return true;
  if (o4 == 0 && on_segment(t.a, t.b, s.b)) return true;
  return false;
}

bool segment_intersects_rect_interior(const Segment& s, const Rect& r) {
  // Clip the parametric segment a + t(b - a), t in [0, 1], against the open
  // slab of each axis.
  double lo = 0.0;
  double hi = 1.0;
  const Point d = s.b - s.a;
  for (int axis = 0; axis < 2; ++axis) {
    const double p = s.a[axis];
    const double lower = r.min[axis];
    const double upper = r.max[axis];
    if (std::abs(d[axis]) < kGeomEps) {
      if (p <= lower + kGeomEps || p >= upper - kGeomEps) return false;
      continue;
    }
    double t0 = (lower - p) / d[axis];
    double t1 = (upper - p) / d[axis];
    if (t0 > t1) std::swap(t0, t1);
    lo = std::max(lo, t0);
    hi = std::min(hi, t1);
  }
  // Require a positive-length overlap so that touching a corner does not count.
  return hi - lo > kGeomEps;
}

bool rect_interiors_overlap(const Rect& r, const Rect& q) {
  return r.min.x() < q.max.x() - kGeomEps && q.min.x() < r.max.x() - kGeomEps &&
         r.min.y() < q.max.y() - kGeomEps && q.min.y() < r.max.y() - kGeomEps;
}

bool is_axis_aligned_unit(const UnitVec& v) {
  const bool horizontal =
      std::abs(std::abs(v.x()) - 1.0) < kGeomEps && std::abs(v.y()) < kGeomEps;
  const bool vertical =
      std::abs(std::abs(v.y()) - 1.0) < kGeomEps && std::abs(v.x()) < kGeomEps;
  return horizontal || vertical;
}

}  // namespace dining
