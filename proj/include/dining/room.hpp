#ifndef DINING_ROOM_HPP
#define DINING_ROOM_HPP

#include <compare>
#include <iosfwd>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "dining/geometry.hpp"

namespace dining {

/// 1-based grid coordinate; row 1 is the bottom row, col 1 the leftmost column.
struct BlockCoord {
  int row = 1;
  int col = 1;

  friend auto operator<=>(const BlockCoord&, const BlockCoord&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// A discretized dining room. Immutable once constructed; the constructor
/// validates every invariant and throws std::invalid_argument otherwise.
class Room {
 public:
  static constexpr double kDefaultBlockSize = 0.70;

  Room(int rows, int cols, double block_size = kDefaultBlockSize,
       std::set<BlockCoord> missing = {}, std::vector<Rect> soft_obstacles = {},
       std::vector<Segment> walls = {});

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  double block_size() const { return block_size_; }
  const std::set<BlockCoord>& missing() const { return missing_; }
  const std::vector<Rect>& soft_obstacles() const { return soft_; }
  const std::vector<Segment>& walls() const { return walls_; }

  double width() const { return cols_ * block_size_; }
  double height() const { return rows_ * block_size_; }
  Rect bounds() const { return {Point(0, 0), Point(width(), height())}; }

  bool in_range(const BlockCoord& b) const {
    return b.row >= 1 && b.row <= rows_ && b.col >= 1 && b.col <= cols_;
  }
  /// In range and not missing.
  bool has_block(const BlockCoord& b) const {
    return in_range(b) && !missing_.contains(b);
  }
  /// In range, not missing, and no soft obstacle or wall reaches its interior.
  bool is_free(const BlockCoord& b) const;

  /// Throws std::out_of_range("invalid block") for absent blocks.
  Rect block_rect(const BlockCoord& b) const;
  Point block_center(const BlockCoord& b) const;

  friend bool operator==(const Room&, const Room&);

 private:
  int rows_;
  int cols_;
  double block_size_;
  std::set<BlockCoord> missing_;
  std::vector<Rect> soft_;
  std::vector<Segment> walls_;
};

bool operator==(const Room& a, const Room& b);

Room parse_room(std::istream& in);
Room parse_room_string(const std::string& text);
Room load_room(const std::string& path);

void serialize_room(const Room& room, std::ostream& out);
std::string serialize_room_string(const Room& room);

/// Rounds to the 6-decimal grid used by the room file format, so values
/// survive a serialize/parse round trip bit-exactly.
double quantize_coordinate(double value);

}  // namespace dining

#endif  // DINING_ROOM_HPP
