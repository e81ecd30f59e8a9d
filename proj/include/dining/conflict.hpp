#ifndef DINING_CONFLICT_HPP
#define DINING_CONFLICT_HPP

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dining/room.hpp"
#include "dining/seating.hpp"

namespace dining {

/// Which distancing exemptions apply. The four named variants are the
/// boolean combinations of the two flags.
struct Settings {
  bool use_walls = false;
  bool use_sitting_sense = false;
  double min_distance = 2.0;

  static Settings baseline() { return {false, false}; }
  static Settings plexiglass() { return {true, false}; }
  static Settings sitting_sense() { return {false, true}; }
  static Settings plexiglass_sitting_sense() { return {true, true}; }
};

/// Accepts "baseline", "plexiglass", "sittingsense", "plexiglass+sittingsense".
Settings parse_settings(std::string_view name);
std::string settings_name(const Settings& s);

using Edge = std::pair<int, int>;

/// Undirected vertex-weighted graph. Vertices are 0-based internally; the
/// text exports use 1-based ids.
class ConflictGraph {
 public:
  ConflictGraph() = default;
  /// Edges may come in any order and orientation; self-loops and duplicates
  /// throw std::invalid_argument.
  ConflictGraph(std::vector<int> weights, std::vector<Edge> edges);

  int vertex_count() const { return static_cast<int>(weights_.size()); }
  std::size_t edge_count() const { return edges_.size(); }
  int weight(int v) const { return weights_[v]; }
  const std::vector<int>& weights() const { return weights_; }
  /// Sorted, each with first < second.
  const std::vector<Edge>& edges() const { return edges_; }
  /// Sorted neighbor list.
  std::span<const int> neighbors(int v) const { return adjacency_[v]; }
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
  bool adjacent(int u, int v) const;

  /// True iff no two vertices of `set` share an edge.
  bool is_independent(std::span<const int> set) const;
  long total_weight(std::span<const int> set) const;

 private:
  std::vector<int> weights_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
};

/// Antiparallel senses, each person's back toward the other.
bool back_to_back(const Chair& u, const Chair& v);

bool separated_by_wall(const Chair& u, const Chair& v, std::span<const Segment> walls);

bool footprints_overlap(const SittingConfiguration& a, const SittingConfiguration& b);

bool compatible(const SittingConfiguration& a, const SittingConfiguration& b, const Room& room,
                const Settings& s);

/// One vertex per configuration (weight = seats), one edge per incompatible
/// pair. Pair evaluation is split across `threads` workers (0 = hardware
/// concurrency); the edge list is identical for any thread count.
ConflictGraph build_conflict_graph(const Room& room, std::span<const SittingConfiguration> configs,
                                   const Settings& s, unsigned threads = 0);

/// `p edge V E`, then `n u w` per vertex, then `e u v` per edge (1-based).
void write_graph(const ConflictGraph& g, std::ostream& out);
ConflictGraph read_graph(std::istream& in);

}  // namespace dining

#endif  // DINING_CONFLICT_HPP
