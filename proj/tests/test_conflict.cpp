#include "doctest.h"
#include "dining/conflict.hpp"
#include "dining/instance_gen.hpp"
#include "dining/seating.hpp"

#include <algorithm>
#include <array>
#include <sstream>

using namespace dining;

namespace {

Chair chair(double x, double y, double sx, double sy) { return {{1, 1}, Point(x, y), UnitVec(sx, sy)}; }

const SittingConfiguration& find(const std::vector<SittingConfiguration>& cs, TableKind k, BlockCoord at) {
  auto it = std::find_if(cs.begin(), cs.end(), [&](const auto& c) { return c.kind == k && c.origin() == at; });
  REQUIRE(it != cs.end());
  return *it;
}

// Independent evaluator in half-block integer units on open rooms. Chairs sit
// on table edges, so every anchor is an integer point of the half-block grid.
struct OracleChair {
  int x, y, sx, sy;
};
struct OracleConfig {
  std::vector<std::pair<int, int>> blocks;  // (row, col)
  std::vector<OracleChair> chairs;
};

std::vector<OracleConfig> oracle_configs(int n) {
  std::vector<OracleConfig> out;
  auto add = [&](std::vector<std::pair<int, int>> tables, std::vector<std::array<int, 4>> seats) {
    OracleConfig c;
    c.blocks = tables;
    for (auto [r, col, sx, sy] : seats) {
      c.blocks.push_back({r, col});
      // Block (r, col) has center (2col-1, 2r-1); the anchor is one half step along the sense.
      c.chairs.push_back({2 * col - 1 + sx, 2 * r - 1 + sy, sx, sy});
    }
    for (auto [r, col] : c.blocks)
      if (r < 1 || r > n || col < 1 || col > n) return;
    out.push_back(c);
  };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      add({{i, j}}, {{i - 1, j, 0, 1}, {i + 1, j, 0, -1}});
      add({{i, j}}, {{i, j - 1, 1, 0}, {i, j + 1, -1, 0}});
      add({{i, j}, {i, j + 1}}, {{i - 1, j, 0, 1}, {i - 1, j + 1, 0, 1}, {i + 1, j, 0, -1}, {i + 1, j + 1, 0, -1}});
      add({{i, j}, {i + 1, j}}, {{i, j - 1, 1, 0}, {i + 1, j - 1, 1, 0}, {i, j + 1, -1, 0}, {i + 1, j + 1, -1, 0}});
    }
  return out;
}

long oracle_edges(int n, bool sitting_sense) {
  const auto cs = oracle_configs(n);
  long edges = 0;
  for (std::size_t a = 0; a < cs.size(); ++a)
    for (std::size_t b = a + 1; b < cs.size(); ++b) {
      bool bad = false;
      for (auto p : cs[a].blocks)
        for (auto q : cs[b].blocks) bad = bad || p == q;
      for (const auto& u : cs[a].chairs)
        for (const auto& v : cs[b].chairs) {
          const int dx = v.x - u.x, dy = v.y - u.y;
          // 2 m is 5.714 half-blocks of 0.35 m: far iff dx^2 + dy^2 >= 33.
          if (dx * dx + dy * dy >= 33) continue;
          const bool b2b = u.sx == -v.sx && u.sy == -v.sy && u.sx * dx + u.sy * dy < 0;
          if (!(sitting_sense && b2b)) bad = true;
        }
      edges += bad;
    }
  return edges;
}

long edges_of(int n, const Settings& s) {
  const Room room(n, n);
  const auto cs = enumerate_configurations(room);
  return static_cast<long>(build_conflict_graph(room, cs, s).edge_count());
}

}  // namespace

TEST_CASE("back_to_back") {
  CHECK(back_to_back(chair(0.35, 1.75, 0, -1), chair(0.35, 2.45, 0, 1)));
  CHECK_FALSE(back_to_back(chair(0.35, 1.75, 0, -1), chair(0.35, 2.45, 0, -1)));
  CHECK_FALSE(back_to_back(chair(0.35, 1.75, 0, 1), chair(0.35, 2.45, 0, -1)));
  CHECK_FALSE(back_to_back(chair(0.35, 1.75, 1, 0), chair(0.35, 2.45, -1, 0)));
}

TEST_CASE("separated_by_wall") {
  const Chair u = chair(0.35, 0.35, 1, 0), v = chair(1.75, 0.35, -1, 0);
  const std::vector<Segment> crossing = {{Point(1.05, 0.0), Point(1.05, 0.7)}};
  const std::vector<Segment> elsewhere = {{Point(1.05, 1.4), Point(1.05, 2.1)}};
  CHECK(separated_by_wall(u, v, crossing));
  CHECK_FALSE(separated_by_wall(u, v, {}));
  CHECK_FALSE(separated_by_wall(u, v, elsewhere));
}

TEST_CASE("compatible") {
  SUBCASE("back-to-back tables in one column") {
    const Room room(7, 7);
    const auto cs = enumerate_configurations(room);
    const auto& a = find(cs, TableKind::SquareVertical, {2, 3});
    const auto& b = find(cs, TableKind::SquareVertical, {5, 3});
    CHECK(compatible(a, b, room, Settings::sitting_sense()));
    CHECK_FALSE(compatible(a, b, room, Settings::baseline()));
    CHECK(compatible(a, b, room, Settings::sitting_sense()) == compatible(b, a, room, Settings::sitting_sense()));
  }
  SUBCASE("shared chair block") {
    const Room room(5, 5);
    const auto cs = enumerate_configurations(room);
    const auto& a = find(cs, TableKind::SquareVertical, {2, 2});
    const auto& b = find(cs, TableKind::SquareVertical, {4, 2});
    CHECK(footprints_overlap(a, b));
    for (auto s : {Settings::baseline(), Settings::plexiglass(), Settings::sitting_sense(),
                   Settings::plexiglass_sitting_sense()})
      CHECK_FALSE(compatible(a, b, room, s));
  }
  SUBCASE("far apart in one row") {
    const Room room(3, 8);
    const auto cs = enumerate_configurations(room);
    const auto& a = find(cs, TableKind::SquareHorizontal, {2, 2});
    const auto& b = find(cs, TableKind::SquareHorizontal, {2, 7});
    for (auto s : {Settings::baseline(), Settings::plexiglass(), Settings::sitting_sense(),
                   Settings::plexiglass_sitting_sense()})
      CHECK(compatible(a, b, room, s));
  }
  SUBCASE("a wall between close chairs") {
    const Room room(3, 5, 0.7, {}, {}, {{Point(1.75, 0.0), Point(1.75, 2.1)}});
    const auto cs = enumerate_configurations(room);
    const auto& a = find(cs, TableKind::SquareVertical, {2, 2});
    const auto& b = find(cs, TableKind::SquareVertical, {2, 4});
    CHECK(compatible(a, b, room, Settings::plexiglass()));
    CHECK_FALSE(compatible(a, b, room, Settings::baseline()));
  }
}

TEST_CASE("settings names") {
  for (std::string name : {"baseline", "plexiglass", "sittingsense", "plexiglass+sittingsense"})
    CHECK(settings_name(parse_settings(name)) == name);
  CHECK_THROWS_AS(parse_settings("plexi"), std::invalid_argument);
}

TEST_CASE("edge counts against the half-block evaluator") {
  CHECK(oracle_edges(3, false) == 45);
  CHECK(oracle_edges(3, true) == 45);
  CHECK(edges_of(3, Settings::baseline()) == 45);
  CHECK(edges_of(3, Settings::sitting_sense()) == 45);

  CHECK(oracle_edges(4, false) == 370);
  CHECK(edges_of(4, Settings::baseline()) == 370);
  CHECK(edges_of(4, Settings::sitting_sense()) == 370);

  CHECK(oracle_configs(6).size() == 88);
  CHECK(edges_of(6, Settings::baseline()) == 3084);
  CHECK(edges_of(6, Settings::sitting_sense()) == 2894);
  CHECK(oracle_edges(6, false) == 3084);
  CHECK(oracle_edges(6, true) == 2894);
}

TEST_CASE("published edge counts") {
  CHECK(edges_of(5, Settings::baseline()) == 1313);
  CHECK(edges_of(5, Settings::sitting_sense()) == 1313);
  CHECK(edges_of(10, Settings::baseline()) == 17028);
  CHECK(edges_of(10, Settings::sitting_sense()) == 15118);
  CHECK(edges_of(15, Settings::baseline()) == 49893);
  CHECK(edges_of(15, Settings::sitting_sense()) == 43673);
}

TEST_CASE("exemptions only remove edges") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    WallSpec spec;
    spec.n = 10;
    spec.length_blocks = 1 + static_cast<int>(seed % 4);
    spec.walls = 5;
    spec.seed = seed;
    const Room room = generate_random_walls(spec);
    const auto cs = enumerate_configurations(room);
    const auto base = build_conflict_graph(room, cs, Settings::baseline()).edges();
    for (auto s : {Settings::plexiglass(), Settings::sitting_sense(), Settings::plexiglass_sitting_sense()}) {
      const auto sub = build_conflict_graph(room, cs, s).edges();
      CHECK(std::includes(base.begin(), base.end(), sub.begin(), sub.end()));
    }
    const auto both = build_conflict_graph(room, cs, Settings::plexiglass_sitting_sense()).edges();
    const auto ss = build_conflict_graph(room, cs, Settings::sitting_sense()).edges();
    CHECK(std::includes(ss.begin(), ss.end(), both.begin(), both.end()));
  }
}

TEST_CASE("graph structure") {
  const Room room(6, 6, 0.7, {}, {}, {{Point(2.1, 0.35), Point(2.1, 2.45)}});
  const auto cs = enumerate_configurations(room);
  const auto g = build_conflict_graph(room, cs, Settings::plexiglass_sitting_sense(), 1);

  SUBCASE("symmetric, no self-loops, weights are seats") {
    for (int v = 0; v < g.vertex_count(); ++v) {
      CHECK(g.weight(v) == cs[v].seats);
      for (int u : g.neighbors(v)) {
        CHECK(u != v);
        CHECK(g.adjacent(u, v));
      }
    }
    for (auto [u, v] : g.edges()) CHECK(u < v);
  }
  SUBCASE("agrees with the pairwise predicate") {
    for (int a = 0; a < g.vertex_count(); ++a)
      for (int b = a + 1; b < g.vertex_count(); ++b)
        CHECK(g.adjacent(a, b) == !compatible(cs[a], cs[b], room, Settings::plexiglass_sitting_sense()));
  }
  SUBCASE("thread count does not change the edge list") {
    for (unsigned t : {2u, 3u, 8u})
      CHECK(build_conflict_graph(room, cs, Settings::plexiglass_sitting_sense(), t).edges() == g.edges());
  }
  SUBCASE("text export round trip") {
    std::ostringstream out;
    write_graph(g, out);
    std::istringstream in(out.str());
    const auto back = read_graph(in);
    CHECK(back.weights() == g.weights());
    CHECK(back.edges() == g.edges());
    std::ostringstream again;
    write_graph(back, again);
    CHECK(again.str() == out.str());
  }
}

TEST_CASE("ConflictGraph rejects malformed input") {
  CHECK_THROWS_AS(ConflictGraph({2, 2}, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(ConflictGraph({2, 2}, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(ConflictGraph({2, 2}, {{0, 2}}), std::invalid_argument);
  const ConflictGraph g({2, 4, 2}, {{2, 1}});
  CHECK(g.edges() == std::vector<Edge>{{1, 2}});
  const std::vector<int> ok = {0, 1}, bad = {1, 2};
  CHECK(g.is_independent(ok));
  CHECK_FALSE(g.is_independent(bad));
  CHECK(g.total_weight(ok) == 6);
  std::istringstream junk("p edge 2 1\nn 1 2\nn 2 2\ne 1 3\n");
  CHECK_THROWS(read_graph(junk));
}
