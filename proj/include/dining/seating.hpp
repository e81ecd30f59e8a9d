#ifndef DINING_SEATING_HPP
#define DINING_SEATING_HPP

#include <string>
#include <string_view>
#include <vector>

#include "dining/geometry.hpp"
#include "dining/room.hpp"

namespace dining {

enum class TableKind { SquareVertical, SquareHorizontal, RectHorizontal, RectVertical };

std::string_view to_string(TableKind kind);
/// Throws std::invalid_argument on an unknown name.
TableKind parse_table_kind(std::string_view name);

/// A seat. The person sits on the edge the chair block shares with the table
/// and faces the table along `sense`.
struct Chair {
  BlockCoord block;
  Point anchor;
  UnitVec sense;
};

struct SittingConfiguration {
  int id = 0;
  TableKind kind = TableKind::SquareVertical;
  std::vector<BlockCoord> table_blocks;
  std::vector<Chair> chairs;
  int seats = 0;
  /// Table blocks followed by chair blocks.
  std::vector<BlockCoord> footprint;
  /// Centroid of the table blocks.
  Point center;

  /// Grid position reported in layouts: the first (lowest/leftmost) table block.
  const BlockCoord& origin() const { return table_blocks.front(); }
};

/// Builds the configuration of `kind` anchored at table block `at`, without
/// checking it against any room.
SittingConfiguration make_configuration(TableKind kind, BlockCoord at, double block_size);

/// Every valid placement, in row-major block order and, per block, kinds in
/// the order SquareVertical, SquareHorizontal, RectHorizontal, RectVertical.
/// A placement is valid when each footprint block exists and is free of
/// obstacles. Ids are the positions in the returned vector.
std::vector<SittingConfiguration> enumerate_configurations(const Room& room);

}  // namespace dining

#endif  // DINING_SEATING_HPP
