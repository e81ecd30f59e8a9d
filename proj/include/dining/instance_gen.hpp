#ifndef DINING_INSTANCE_GEN_HPP
#define DINING_INSTANCE_GEN_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include "dining/room.hpp"

namespace dining {

class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Random wall family: an n x n room with `walls` walls of length
/// `block_size * length_blocks`.
struct WallSpec {
  int n = 15;
  int length_blocks = 1;
  int walls = 5;
  std::uint64_t seed = 0;
  double block_size = Room::kDefaultBlockSize;
  /// Minimum gap between parallel walls whose projections overlap.
  double min_parallel_gap = 1.4;
  int max_consecutive_rejections = 10000;
};

/// Column-wise vertical walls. Defaults give the 15-wall layout on 15x15.
struct UniformWallSpec {
  int n = 15;
  int length_blocks = 4;
  double block_size = Room::kDefaultBlockSize;
  /// Distance kept between wall ends/columns and the room boundary.
  double margin = 0.35;
  /// Horizontal distance between consecutive wall columns.
  double column_pitch = 1.75;
  /// Vertical free space between consecutive walls of a column.
  double gap = 0.7;
};

Room generate_nowalls(int n, double block_size = Room::kDefaultBlockSize);

/// Throws GenerationError after `max_consecutive_rejections` failed draws.
Room generate_random_walls(const WallSpec& spec);

Room generate_uniform_walls(const UniformWallSpec& spec);
Room generate_uniform_walls(int n, int length_blocks);

std::string nowalls_name(int n);
/// `n_n_t_w_id`
std::string random_walls_name(const WallSpec& spec, int id);
/// `n_n_uni_t`
std::string uniform_walls_name(int n, int length_blocks);

}  // namespace dining

#endif  // DINING_INSTANCE_GEN_HPP
