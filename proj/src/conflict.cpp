#include "dining/conflict.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace dining {

Settings parse_settings(std::string_view name) {
  if (name == "baseline") return Settings::baseline();
  if (name == "plexiglass") return Settings::plexiglass();
  if (name == "sittingsense") return Settings::sitting_sense();
  if (name == "plexiglass+sittingsense") return Settings::plexiglass_sitting_sense();
  throw std::invalid_argument("unknown setting '" + std::string(name) + "'");
}

std::string settings_name(const Settings& s) {
  if (s.use_walls && s.use_sitting_sense) return "plexiglass+sittingsense";
  if (s.use_walls) return "plexiglass";
  if (s.use_sitting_sense) return "sittingsense";
  return "baseline";
}

ConflictGraph::ConflictGraph(std::vector<int> weights, std::vector<Edge> edges)
    : weights_(std::move(weights)), edges_(std::move(edges)), adjacency_(weights_.size()) {
  const int n = vertex_count();
  for (auto& e : edges_) {
    if (e.first > e.second) std::swap(e.first, e.second);
    if (e.first < 0 || e.second >= n) throw std::invalid_argument("edge endpoint out of range");
    if (e.first == e.second) throw std::invalid_argument("self-loop");
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw std::invalid_argument("duplicate edge");
  for (const auto& [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& a : adjacency_) std::sort(a.begin(), a.end());
}

bool ConflictGraph::adjacent(int u, int v) const {
  const auto& a = adjacency_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

bool ConflictGraph::is_independent(std::span<const int> set) const {
  std::vector<char> in(weights_.size(), 0);
  for (int v : set) {
    if (v < 0 || v >= vertex_count() || in[v]) return false;
    in[v] = 1;
  }
  for (int v : set)
    for (int w : adjacency_[v])
      if (in[w]) return false;
  return true;
}

long ConflictGraph::total_weight(std::span<const int> set) const {
  long sum = 0;
  for (int v : set) sum += weights_[v];
  return sum;
}

bool back_to_back(const Chair& u, const Chair& v) {
  if (std::abs(u.sense.dot(v.sense) + 1.0) > kGeomEps) return false;
  return u.sense.dot(v.anchor - u.anchor) < -kGeomEps;
}

bool separated_by_wall(const Chair& u, const Chair& v, std::span<const Segment> walls) {
  const Segment link{u.anchor, v.anchor};
  return std::any_of(walls.begin(), walls.end(),
                     [&](const Segment& w) { return segments_intersect(link, w); });
}

bool footprints_overlap(const SittingConfiguration& a, const SittingConfiguration& b) {
  for (const auto& p : a.footprint)
    for (const auto& q : b.footprint)
      if (p == q) return true;
  return false;
}

namespace {

bool chairs_compatible(const SittingConfiguration& a, const SittingConfiguration& b,
                       const Room& room, const Settings& s) {
  for (const auto& u : a.chairs) {
    for (const auto& v : b.chairs) {
      if (distance(u.anchor, v.anchor) > s.min_distance) continue;
      if (s.use_sitting_sense && back_to_back(u, v)) continue;
      if (s.use_walls && separated_by_wall(u, v, room.walls())) continue;
      return false;
    }
  }
  return true;
}

// Bounding boxes used to skip far-apart pairs without touching chairs.
struct Extent {
  int row_lo, row_hi, col_lo, col_hi;
  double x_lo, x_hi, y_lo, y_hi;
};

Extent extent_of(const SittingConfiguration& c) {
  Extent e{c.footprint[0].row, c.footprint[0].row, c.footprint[0].col, c.footprint[0].col,
           c.chairs[0].anchor.x(), c.chairs[0].anchor.x(), c.chairs[0].anchor.y(),
           c.chairs[0].anchor.y()};
  for (const auto& b : c.footprint) {
    e.row_lo = std::min(e.row_lo, b.row);
    e.row_hi = std::max(e.row_hi, b.row);
    e.col_lo = std::min(e.col_lo, b.col);
    e.col_hi = std::max(e.col_hi, b.col);
  }
  for (const auto& ch : c.chairs) {
    e.x_lo = std::min(e.x_lo, ch.anchor.x());
    e.x_hi = std::max(e.x_hi, ch.anchor.x());
    e.y_lo = std::min(e.y_lo, ch.anchor.y());
    e.y_hi = std::max(e.y_hi, ch.anchor.y());
  }
  return e;
}

bool trivially_compatible(const Extent& a, const Extent& b, double min_distance) {
  const bool blocks_disjoint = a.row_hi < b.row_lo || b.row_hi < a.row_lo ||
                               a.col_hi < b.col_lo || b.col_hi < a.col_lo;
  if (!blocks_disjoint) return false;
  const double gap_x = std::max({0.0, b.x_lo - a.x_hi, a.x_lo - b.x_hi});
  const double gap_y = std::max({0.0, b.y_lo - a.y_hi, a.y_lo - b.y_hi});
  return gap_x > min_distance || gap_y > min_distance;
}

}  // namespace

bool compatible(const SittingConfiguration& a, const SittingConfiguration& b, const Room& room,
                const Settings& s) {
  if (footprints_overlap(a, b)) return false;
  return chairs_compatible(a, b, room, s);
}

ConflictGraph build_conflict_graph(const Room& room, std::span<const SittingConfiguration> configs,
                                   const Settings& s, unsigned threads) {
  const int n = static_cast<int>(configs.size());
  std::vector<Extent> extents;
  extents.reserve(configs.size());
  for (const auto& c : configs) extents.push_back(extent_of(c));

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, std::max(1, n));

  // Interleaved row assignment balances the triangular workload; each worker
  // keeps its own edge list and the merge sorts them.
  std::vector<std::vector<Edge>> parts(threads);
  auto work = [&](unsigned t) {
    auto& out = parts[t];
    for (int u = static_cast<int>(t); u < n; u += static_cast<int>(threads)) {
      for (int v = u + 1; v < n; ++v) {
        if (trivially_compatible(extents[u], extents[v], s.min_distance)) continue;
        if (!compatible(configs[u], configs[v], room, s)) out.emplace_back(u, v);
      }
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }

  std::vector<Edge> edges;
  for (auto& p : parts) edges.insert(edges.end(), p.begin(), p.end());
  std::vector<int> weights;
  weights.reserve(configs.size());
  for (const auto& c : configs) weights.push_back(c.seats);
  return ConflictGraph(std::move(weights), std::move(edges));
}

void write_graph(const ConflictGraph& g, std::ostream& out) {
  out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (int v = 0; v < g.vertex_count(); ++v) out << "n " << v + 1 << ' ' << g.weight(v) << '\n';
  for (const auto& [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

ConflictGraph read_graph(std::istream& in) {
  std::string line;
  int n = -1;
  std::vector<int> weights;
  std::vector<Edge> edges;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    char tag = 0;
    if (!(ls >> tag) || tag == 'c') continue;
    if (tag == 'p') {
      std::string fmt;
      std::size_t m = 0;
      if (!(ls >> fmt >> n >> m) || n < 0) throw ParseError(lineno, "malformed problem line");
      weights.assign(static_cast<std::size_t>(n), 1);
      edges.reserve(m);
    } else if (n < 0) {
      throw ParseError(lineno, "expected problem line first");
    } else if (tag == 'n') {
      int v = 0, w = 0;
      if (!(ls >> v >> w) || v < 1 || v > n) throw ParseError(lineno, "malformed weight line");
      weights[v - 1] = w;
    } else if (tag == 'e') {
      int u = 0, v = 0;
      if (!(ls >> u >> v) || u < 1 || v < 1 || u > n || v > n)
        throw ParseError(lineno, "malformed edge line");
      edges.emplace_back(u - 1, v - 1);
    } else {
      throw ParseError(lineno, "unknown line tag");
    }
  }
  if (n < 0) throw ParseError(lineno, "missing problem line");
  return ConflictGraph(std::move(weights), std::move(edges));
}

}  // namespace dining
