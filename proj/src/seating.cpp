#include "dining/seating.hpp"

#include <array>
#include <stdexcept>

namespace dining {
namespace {

constexpr std::array kKindOrder = {TableKind::SquareVertical, TableKind::SquareHorizontal,
                                   TableKind::RectHorizontal, TableKind::RectVertical};

struct ChairSpec {
  int drow;
  int dcol;
  int sense_x;
  int sense_y;
};

Point block_center(BlockCoord b, double l) { return Point((b.col - 0.5) * l, (b.row - 0.5) * l); }

}  // namespace

std::string_view to_string(TableKind kind) {
  switch (kind) {
    case TableKind::SquareVertical: return "SquareVertical";
    case TableKind::SquareHorizontal: return "SquareHorizontal";
    case TableKind::RectHorizontal: return "RectHorizontal";
    case TableKind::RectVertical: return "RectVertical";
  }
  return "?";
}

TableKind parse_table_kind(std::string_view name) {
  for (auto k : kKindOrder)
    if (to_string(k) == name) return k;
  throw std::invalid_argument("unknown table kind '" + std::string(name) + "'");
}

SittingConfiguration make_configuration(TableKind kind, BlockCoord at, double block_size) {
  const int i = at.row;
  const int j = at.col;
  SittingConfiguration c;
  c.kind = kind;
  std::vector<ChairSpec> specs;
  switch (kind) {
    case TableKind::SquareVertical:
      c.table_blocks = {{i, j}};
      specs = {{-1, 0, 0, 1}, {1, 0, 0, -1}};
      break;
    case TableKind::SquareHorizontal:
      c.table_blocks = {{i, j}};
      specs = {{0, -1, 1, 0}, {0, 1, -1, 0}};
      break;
    case TableKind::RectHorizontal:
      c.table_blocks = {{i, j}, {i, j + 1}};
      specs = {{-1, 0, 0, 1}, {-1, 1, 0, 1}, {1, 0, 0, -1}, {1, 1, 0, -1}};
      break;
    case TableKind::RectVertical:
      c.table_blocks = {{i, j}, {i + 1, j}};
      specs = {{0, -1, 1, 0}, {1, -1, 1, 0}, {0, 1, -1, 0}, {1, 1, -1, 0}};
      break;
  }
  c.footprint = c.table_blocks;
  for (const auto& s : specs) {
    const BlockCoord b{i + s.drow, j + s.dcol};
    const UnitVec sense(s.sense_x, s.sense_y);
    c.chairs.push_back({b, block_center(b, block_size) + sense * (block_size / 2), sense});
    c.footprint.push_back(b);
  }
  c.seats = static_cast<int>(c.chairs.size());
  c.center = Point::Zero();
  for (const auto& b : c.table_blocks) c.center += block_center(b, block_size);
  c.center /= static_cast<double>(c.table_blocks.size());
  return c;
}

std::vector<SittingConfiguration> enumerate_configurations(const Room& room) {
  std::vector<char> free(static_cast<std::size_t>(room.rows() * room.cols()));
  for (int r = 1; r <= room.rows(); ++r)
    for (int c = 1; c <= room.cols(); ++c)
      free[(r - 1) * room.cols() + (c - 1)] = room.is_free({r, c});
  auto ok = [&](const BlockCoord& b) {
    return room.in_range(b) && free[(b.row - 1) * room.cols() + (b.col - 1)];
  };

  std::vector<SittingConfiguration> out;
  for (int i = 1; i <= room.rows(); ++i) {
    for (int j = 1; j <= room.cols(); ++j) {
      for (auto kind : kKindOrder) {
        auto c = make_configuration(kind, {i, j}, room.block_size());
        bool valid = true;
        for (const auto& b : c.footprint) valid = valid && ok(b);
        if (!valid) continue;
        c.id = static_cast<int>(out.size());
        out.push_back(std::move(c));
      }
    }
  }
  return out;
}

}  // namespace dining
