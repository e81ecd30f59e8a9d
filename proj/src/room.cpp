#include "dining/room.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace dining {
namespace {

bool inside_bounds(const Point& p, const Rect& box) {
  return p.x() >= box.min.x() - kGeomEps && p.x() <= box.max.x() + kGeomEps &&
         p.y() >= box.min.y() - kGeomEps && p.y() <= box.max.y() + kGeomEps;
}

bool same_point(const Point& p, const Point& q) {
  return p.x() == q.x() && p.y() == q.y();
}

std::string format_coord(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace

Room::Room(int rows, int cols, double block_size, std::set<BlockCoord> missing,
           std::vector<Rect> soft_obstacles, std::vector<Segment> walls)
    : rows_(rows),
      cols_(cols),
      block_size_(block_size),
      missing_(std::move(missing)),
      soft_(std::move(soft_obstacles)),
      walls_(std::move(walls)) {
  if (rows_ < 1 || cols_ < 1) throw std::invalid_argument("room needs at least one row and column");
  if (!(block_size_ > 0) || !std::isfinite(block_size_))
    throw std::invalid_argument("block size must be positive");
  for (const auto& b : missing_)
    if (!in_range(b)) throw std::invalid_argument("missing block out of range");
  const Rect box = bounds();
  for (const auto& r : soft_) {
    if (!r.valid()) throw std::invalid_argument("soft obstacle rectangle is degenerate");
    if (!inside_bounds(r.min, box) || !inside_bounds(r.max, box))
      throw std::invalid_argument("rectangle exceeds room bounds");
  }
  for (const auto& w : walls_) {
    if (same_point(w.a, w.b)) throw std::invalid_argument("wall endpoints coincide");
    if (!inside_bounds(w.a, box) || !inside_bounds(w.b, box))
      throw std::invalid_argument("wall exceeds room bounds");
  }
}

bool Room::is_free(const BlockCoord& b) const {
  if (!has_block(b)) return false;
  const Rect cell = block_rect(b);
  for (const auto& r : soft_)
    if (rect_interiors_overlap(cell, r)) return false;
  for (const auto& w : walls_)
    if (segment_intersects_rect_interior(w, cell)) return false;
  return true;
}

Rect Room::block_rect(const BlockCoord& b) const {
  if (!has_block(b)) throw std::out_of_range("invalid block");
  const double l = block_size_;
  return {Point((b.col - 1) * l, (b.row - 1) * l), Point(b.col * l, b.row * l)};
}

Point Room::block_center(const BlockCoord& b) const { return block_rect(b).center(); }

bool operator==(const Room& a, const Room& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.block_size_ != b.block_size_ ||
      a.missing_ != b.missing_ || a.soft_.size() != b.soft_.size() ||
      a.walls_.size() != b.walls_.size())
    return false;
  for (std::size_t i = 0; i < a.soft_.size(); ++i)
    if (!same_point(a.soft_[i].min, b.soft_[i].min) || !same_point(a.soft_[i].max, b.soft_[i].max))
      return false;
  for (std::size_t i = 0; i < a.walls_.size(); ++i)
    if (!same_point(a.walls_[i].a, b.walls_[i].a) || !same_point(a.walls_[i].b, b.walls_[i].b))
      return false;
  return true;
}

Room parse_room(std::istream& in) {
  bool have_header = false;
  int rows = 0, cols = 0;
  double block = 0;
  std::set<BlockCoord> missing;
  std::vector<Rect> soft;
  std::vector<Segment> walls;

  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;

    auto expect_end = [&] {
      std::string extra;
      if (ls >> extra) throw ParseError(lineno, "trailing token '" + extra + "'");
    };

    if (key == "room") {
      if (have_header) throw ParseError(lineno, "duplicate room header");
      if (!(ls >> rows >> cols >> block)) throw ParseError(lineno, "malformed room header");
      expect_end();
      if (rows < 1 || cols < 1 || !(block > 0))
        throw ParseError(lineno, "room dimensions must be positive");
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError(lineno, "expected 'room' header first");

    if (key == "missing") {
      BlockCoord b;
      if (!(ls >> b.row >> b.col)) throw ParseError(lineno, "malformed missing line");
      expect_end();
      if (b.row < 1 || b.row > rows || b.col < 1 || b.col > cols)
        throw ParseError(lineno, "missing block out of range");
      missing.insert(b);
    } else if (key == "soft" || key == "wall") {
      double x1, y1, x2, y2;
      if (!(ls >> x1 >> y1 >> x2 >> y2)) throw ParseError(lineno, "malformed " + key + " line");
      expect_end();
      const Rect box{Point(0, 0), Point(cols * block, rows * block)};
      const Point p(x1, y1), q(x2, y2);
      if (key == "soft") {
        Rect r{Point(std::min(x1, x2), std::min(y1, y2)), Point(std::max(x1, x2), std::max(y1, y2))};
        if (!r.valid()) throw ParseError(lineno, "degenerate rectangle");
        if (!inside_bounds(r.min, box) || !inside_bounds(r.max, box))
          throw ParseError(lineno, "rectangle exceeds room bounds");
        soft.push_back(r);
      } else {
        if (same_point(p, q)) throw ParseError(lineno, "wall endpoints coincide");
        if (!inside_bounds(p, box) || !inside_bounds(q, box))
          throw ParseError(lineno, "wall exceeds room bounds");
        walls.push_back({p, q});
      }
    } else {
      throw ParseError(lineno, "unknown directive '" + key + "'");
    }
  }
  if (!have_header) throw ParseError(lineno, "missing 'room' header");
  return Room(rows, cols, block, std::move(missing), std::move(soft), std::move(walls));
}

Room parse_room_string(const std::string& text) {
  std::istringstream in(text);
  return parse_room(in);
}

Room load_room(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open room file '" + path + "'");
  return parse_room(in);
}

void serialize_room(const Room& room, std::ostream& out) {
  out << "room " << room.rows() << ' ' << room.cols() << ' ' << format_coord(room.block_size())
      << '\n';
  for (const auto& b : room.missing()) out << "missing " << b.row << ' ' << b.col << '\n';
  for (const auto& r : room.soft_obstacles())
    out << "soft " << format_coord(r.min.x()) << ' ' << format_coord(r.min.y()) << ' '
        << format_coord(r.max.x()) << ' ' << format_coord(r.max.y()) << '\n';
  for (const auto& w : room.walls())
    out << "wall " << format_coord(w.a.x()) << ' ' << format_coord(w.a.y()) << ' '
        << format_coord(w.b.x()) << ' ' << format_coord(w.b.y()) << '\n';
}

std::string serialize_room_string(const Room& room) {
  std::ostringstream out;
  serialize_room(room, out);
  return out.str();
}

double quantize_coordinate(double value) { return std::round(value * 1e6) / 1e6; }

}  // namespace dining
