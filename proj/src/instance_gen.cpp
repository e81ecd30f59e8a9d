#include "dining/instance_gen.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "dining/rng.hpp"

namespace dining {
namespace {

Point snapped(double x, double y) { return Point(quantize_coordinate(x), quantize_coordinate(y)); }

bool is_horizontal(const Segment& s) { return std::abs(s.a.y() - s.b.y()) < kGeomEps; }

// Same orientation, overlapping projections on the shared axis, and closer
// than `gap` across it.
bool too_close(const Segment& s, const Segment& t, double gap) {
  const bool hs = is_horizontal(s);
  if (hs != is_horizontal(t)) return false;
  const int along = hs ? 0 : 1;
  const int across = 1 - along;
  const double s_lo = std::min(s.a[along], s.b[along]);
  const double s_hi = std::max(s.a[along], s.b[along]);
  const double t_lo = std::min(t.a[along], t.b[along]);
  const double t_hi = std::max(t.a[along], t.b[along]);
  if (std::max(s_lo, t_lo) > std::min(s_hi, t_hi) + kGeomEps) return false;
  return std::abs(s.a[across] - t.a[across]) < gap - kGeomEps;
}

}  // namespace

Room generate_nowalls(int n, double block_size) {
  if (n < 2) throw std::invalid_argument("room side must be at least 2");
  return Room(n, n, block_size);
}

Room generate_random_walls(const WallSpec& spec) {
  if (spec.n < 1 || spec.length_blocks < 1 || spec.walls < 0)
    throw std::invalid_argument("invalid wall specification");
  const double l = spec.block_size;
  const double len = l * spec.length_blocks;
  const double side = spec.n * l;
  // Direction for theta = 0, pi/2, pi, 3pi/2, exact.
  constexpr std::array<std::array<int, 2>, 4> kDirs = {{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}};

  Rng rng(spec.seed);
  std::vector<Segment> walls;
  int rejections = 0;
  while (static_cast<int>(walls.size()) < spec.walls) {
    if (rejections >= spec.max_consecutive_rejections)
      throw GenerationError("gave up placing walls after " + std::to_string(rejections) +
                            " consecutive rejections");
    const auto row = static_cast<int>(uniform_below(rng, spec.n)) + 1;
    const auto col = static_cast<int>(uniform_below(rng, spec.n)) + 1;
    const auto which = uniform_below(rng, 4);
    const auto dir = kDirs[uniform_below(rng, 4)];

    // Midpoints of the bottom, top, left and right sides of the block.
    double x1 = (col - 0.5) * l, y1 = (row - 0.5) * l;
    switch (which) {
      case 0: y1 = (row - 1) * l; break;
      case 1: y1 = row * l; break;
      case 2: x1 = (col - 1) * l; break;
      default: x1 = col * l; break;
    }
    const Segment wall{snapped(x1, y1), snapped(x1 + len * dir[0], y1 + len * dir[1])};
    const bool inside = wall.b.x() >= -kGeomEps && wall.b.x() <= side + kGeomEps &&
                        wall.b.y() >= -kGeomEps && wall.b.y() <= side + kGeomEps;
    const bool spaced = std::none_of(walls.begin(), walls.end(), [&](const Segment& w) {
      return too_close(w, wall, spec.min_parallel_gap);
    });
    if (!inside || !spaced) {
      ++rejections;
      continue;
    }
    rejections = 0;
    walls.push_back(wall);
  }
  return Room(spec.n, spec.n, l, {}, {}, std::move(walls));
}

Room generate_uniform_walls(const UniformWallSpec& spec) {
  if (spec.n < 1 || spec.length_blocks < 1 || !(spec.column_pitch > 0) || spec.gap < 0)
    throw std::invalid_argument("invalid uniform wall specification");
  const double l = spec.block_size;
  const double len = l * spec.length_blocks;
  const double side = spec.n * l;
  const double limit = side - spec.margin + kGeomEps;

  std::vector<Segment> walls;
  for (int k = 1;; ++k) {
    const double x = spec.margin + k * spec.column_pitch;
    if (x > limit) break;
    for (int m = 0;; ++m) {
      const double y = spec.margin + m * (len + spec.gap);
      if (y + len > limit) break;
      walls.push_back({snapped(x, y), snapped(x, y + len)});
    }
  }
  return Room(spec.n, spec.n, l, {}, {}, std::move(walls));
}

Room generate_uniform_walls(int n, int length_blocks) {
  UniformWallSpec spec;
  spec.n = n;
  spec.length_blocks = length_blocks;
  return generate_uniform_walls(spec);
}

std::string nowalls_name(int n) {
  return std::to_string(n) + "_" + std::to_string(n) + "_nowalls";
}

std::string random_walls_name(const WallSpec& spec, int id) {
  return std::to_string(spec.n) + "_" + std::to_string(spec.n) + "_" +
         std::to_string(spec.length_blocks) + "_" + std::to_string(spec.walls) + "_" +
         std::to_string(id);
}

std::string uniform_walls_name(int n, int length_blocks) {
  return std::to_string(n) + "_" + std::to_string(n) + "_uni_" + std::to_string(length_blocks);
}

}  // namespace dining
