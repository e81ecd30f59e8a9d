#include "dining/render.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>

namespace dining {
namespace {

class Canvas {
 public:
  Canvas(const Room& room, const SvgStyle& style)
      : scale_(style.pixels_per_block / room.block_size()),
        margin_(style.margin_px),
        height_m_(room.height()) {}

  double x(double meters) const { return margin_ + meters * scale_; }
  // SVG y grows downward; room y grows upward.
  double y(double meters) const { return margin_ + (height_m_ - meters) * scale_; }
  double len(double meters) const { return meters * scale_; }

 private:
  double scale_;
  double margin_;
  double height_m_;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

void rect(std::ostream& out, const Canvas& c, const Rect& r, const char* cls, const char* extra) {
  out << "<rect class=\"" << cls << "\" x=\"" << num(c.x(r.min.x())) << "\" y=\""
      << num(c.y(r.max.y())) << "\" width=\"" << num(c.len(r.max.x() - r.min.x()))
      << "\" height=\"" << num(c.len(r.max.y() - r.min.y())) << "\" " << extra << "/>\n";
}

// Arrow glyph: a triangle at the person's edge point, pointing along the sense.
void chair(std::ostream& out, const Canvas& c, const Chair& ch, double block) {
  const Point tip = ch.anchor;
  const Point back = ch.anchor - ch.sense * (block * 0.35);
  const Point side(-ch.sense.y(), ch.sense.x());
  const Point l = back + side * (block * 0.2);
  const Point r = back - side * (block * 0.2);
  out << "<polygon class=\"chair\" points=\"" << num(c.x(tip.x())) << ',' << num(c.y(tip.y()))
      << ' ' << num(c.x(l.x())) << ',' << num(c.y(l.y())) << ' ' << num(c.x(r.x())) << ','
      << num(c.y(r.y())) << "\" fill=\"#1f4e9c\"/>\n";
}

}  // namespace

void render_svg(const Room& room, std::span<const SittingConfiguration> configs,
                std::span<const int> selected, std::ostream& out, const SvgStyle& style) {
  for (int id : selected)
    if (id < 0 || id >= static_cast<int>(configs.size()))
      throw std::out_of_range("layout references unknown configuration " + std::to_string(id));

  const Canvas c(room, style);
  const double l = room.block_size();
  const double w = 2 * style.margin_px + c.len(room.width());
  const double h = 2 * style.margin_px + c.len(room.height());

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(w) << "\" height=\""
      << num(h) << "\" viewBox=\"0 0 " << num(w) << ' ' << num(h) << "\">\n"
      << "<rect class=\"background\" x=\"0\" y=\"0\" width=\"" << num(w) << "\" height=\""
      << num(h) << "\" fill=\"white\"/>\n";

  out << "<g class=\"grid\" stroke=\"#cccccc\" stroke-width=\"1\" fill=\"none\">\n";
  for (int r = 1; r <= room.rows(); ++r)
    for (int col = 1; col <= room.cols(); ++col)
      if (room.has_block({r, col})) rect(out, c, room.block_rect({r, col}), "block", "");
  out << "</g>\n";

  for (const auto& b : room.missing()) {
    const double l0 = (b.col - 1) * l, b0 = (b.row - 1) * l;
    rect(out, c, {Point(l0, b0), Point(l0 + l, b0 + l)}, "missing", "fill=\"#444444\"");
  }
  for (const auto& s : room.soft_obstacles()) rect(out, c, s, "soft", "fill=\"#999999\"");

  for (int id : selected) {
    const auto& cfg = configs[id];
    Point lo = room.block_rect(cfg.table_blocks.front()).min;
    Point hi = room.block_rect(cfg.table_blocks.back()).max;
    const Point inset = Point::Constant(l * 0.08);
    rect(out, c, {lo + inset, hi - inset}, "table", "fill=\"#d62728\"");
    for (const auto& ch : cfg.chairs) chair(out, c, ch, l);
  }

  for (const auto& wall : room.walls())
    out << "<line class=\"wall\" x1=\"" << num(c.x(wall.a.x())) << "\" y1=\"" << num(c.y(wall.a.y()))
        << "\" x2=\"" << num(c.x(wall.b.x())) << "\" y2=\"" << num(c.y(wall.b.y()))
        << "\" stroke=\"#000000\" stroke-width=\"3\" stroke-dasharray=\"6,4\"/>\n";

  out << "<rect class=\"outline\" x=\"" << num(c.x(0)) << "\" y=\"" << num(c.y(room.height()))
      << "\" width=\"" << num(c.len(room.width())) << "\" height=\"" << num(c.len(room.height()))
      << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"2\"/>\n";
  out << "</svg>\n";
}

}  // namespace dining
