#include "doctest.h"
#include "dining/geometry.hpp"

#include <random>

using namespace dining;

namespace {

Segment seg(double x1, double y1, double x2, double y2) { return {Point(x1, y1), Point(x2, y2)}; }
Rect rect(double x1, double y1, double x2, double y2) { return {Point(x1, y1), Point(x2, y2)}; }

}  // namespace

TEST_CASE("distance") {
  CHECK(distance(Point(0, 0), Point(0.7, 0)) == doctest::Approx(0.7));
  CHECK(distance(Point(0, 0), Point(0, 0)) == 0.0);
  CHECK(distance(Point(0, 0), Point(2.1, 2.8)) == doctest::Approx(3.5));
}

TEST_CASE("segments_intersect") {
  CHECK(segments_intersect(seg(0, 0, 2, 2), seg(0, 2, 2, 0)));
  CHECK_FALSE(segments_intersect(seg(0, 0, 1, 0), seg(0, 1, 1, 1)));
  CHECK(segments_intersect(seg(0, 0, 1, 1), seg(1, 1, 2, 0)));

  SUBCASE("T junction counts as touching") {
    CHECK(segments_intersect(seg(0, 0, 2, 0), seg(1, 0, 1, 1)));
  }
  SUBCASE("collinear") {
    CHECK(segments_intersect(seg(0, 0, 2, 0), seg(1, 0, 3, 0)));
    CHECK_FALSE(segments_intersect(seg(0, 0, 1, 0), seg(1.5, 0, 3, 0)));
  }
  SUBCASE("near miss") {
    CHECK_FALSE(segments_intersect(seg(0, 0, 1, 0), seg(1.01, -1, 1.01, 1)));
  }
}

TEST_CASE("segment_intersects_rect_interior") {
  const Rect block = rect(0, 0, 0.7, 0.7);
  CHECK(segment_intersects_rect_interior(seg(0.35, -1, 0.35, 2), block));
  CHECK_FALSE(segment_intersects_rect_interior(seg(0.7, 0, 0.7, 0.7), block));
  CHECK_FALSE(segment_intersects_rect_interior(seg(10, 10, 11, 11), block));

  SUBCASE("corner touch only") {
    CHECK_FALSE(segment_intersects_rect_interior(seg(0.7, 0.7, 1.4, 1.4), block));
  }
  SUBCASE("fully inside") {
    CHECK(segment_intersects_rect_interior(seg(0.2, 0.2, 0.3, 0.3), block));
  }
  SUBCASE("ends on the boundary from outside") {
    CHECK_FALSE(segment_intersects_rect_interior(seg(0.35, -1, 0.35, 0), block));
    CHECK(segment_intersects_rect_interior(seg(0.35, -1, 0.35, 0.1), block));
  }
}

TEST_CASE("axis-aligned unit vectors") {
  CHECK(is_axis_aligned_unit(UnitVec(0, -1)));
  CHECK(is_axis_aligned_unit(UnitVec(1, 0)));
  CHECK_FALSE(is_axis_aligned_unit(UnitVec(0.6, 0.8)));
}

TEST_CASE("predicate properties on random inputs") {
  std::mt19937_64 rng(2024);
  // Half the draws land on the 0.35 m lattice to exercise touching cases.
  std::uniform_real_distribution<double> coord(-1.0, 3.0);
  std::uniform_int_distribution<int> lattice(-3, 9);
  auto draw = [&](int i) {
    return i % 2 ? Point(coord(rng), coord(rng)) : Point(0.35 * lattice(rng), 0.35 * lattice(rng));
  };

  for (int i = 0; i < 4000; ++i) {
    const Point p = draw(i), q = draw(i + 1), r = draw(i);
    CHECK(distance(p, q) == doctest::Approx(distance(q, p)));
    CHECK(distance(p, r) <= distance(p, q) + distance(q, r) + 1e-12);

    Segment s{p, q};
    if (s.a == s.b) continue;
    Segment t{draw(i), draw(i + 1)};
    if (t.a == t.b) continue;
    CHECK(segments_intersect(s, t) == segments_intersect(t, s));

    const Point c1 = draw(i), c2 = draw(i + 1);
    Rect box{c1.cwiseMin(c2), c1.cwiseMax(c2)};
    if (!box.valid()) continue;
    const bool hit = segment_intersects_rect_interior(s, box);

    // Monte-Carlo oracle: any sampled point strictly inside forces a hit.
    bool sampled_inside = false;
    for (int k = 0; k <= 400 && !sampled_inside; ++k) {
      const Point m = s.a + (s.b - s.a) * (k / 400.0);
      sampled_inside = m.x() > box.min.x() + 1e-7 && m.x() < box.max.x() - 1e-7 &&
                       m.y() > box.min.y() + 1e-7 && m.y() < box.max.y() - 1e-7;
    }
    if (sampled_inside) CHECK(hit);

    if (hit) {
      const Segment d1{box.min, box.max};
      const Segment d2{Point(box.min.x(), box.max.y()), Point(box.max.x(), box.min.y())};
      auto strictly_inside = [&](const Point& m) {
        return m.x() > box.min.x() && m.x() < box.max.x() && m.y() > box.min.y() &&
               m.y() < box.max.y();
      };
      CHECK((segments_intersect(s, d1) || segments_intersect(s, d2) || strictly_inside(s.a) ||
             strictly_inside(s.b)));
    }
  }
}
