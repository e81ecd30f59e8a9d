#include "dining/heuristics.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "dining/rng.hpp"

namespace dining {
namespace {

void check_aligned(std::span<const SittingConfiguration> configs, const ConflictGraph& g) {
  if (static_cast<int>(configs.size()) != g.vertex_count())
    throw std::invalid_argument("configurations and graph are not index-aligned");
}

// Squared distance from the origin to the center of the configuration's
// anchor block, in half-block units. Exact in integers, so equal distances
// tie exactly.
long corner_key(const SittingConfiguration& c) {
  const long x2 = 2L * c.origin().col - 1;
  const long y2 = 2L * c.origin().row - 1;
  return x2 * x2 + y2 * y2;
}

}  // namespace

Layout greedy_pass(const ConflictGraph& g, std::span<const int> order) {
  Layout out;
  std::vector<char> blocked(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int v : order) {
    if (blocked[v]) continue;
    out.selected.push_back(v);
    out.value += g.weight(v);
    blocked[v] = 1;
    for (int w : g.neighbors(v)) blocked[w] = 1;
  }
  return out;
}

std::vector<int> close_corner_order(std::span<const SittingConfiguration> configs) {
  std::vector<long> key(configs.size());
  for (std::size_t i = 0; i < configs.size(); ++i) key[i] = corner_key(configs[i]);
  std::vector<int> order(configs.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return std::tuple(key[a], -configs[a].seats, configs[a].id) <
           std::tuple(key[b], -configs[b].seats, configs[b].id);
  });
  return order;
}

Layout close_corner(std::span<const SittingConfiguration> configs, const ConflictGraph& g) {
  check_aligned(configs, g);
  const auto order = close_corner_order(configs);
  return greedy_pass(g, order);
}

std::vector<int> random_order(int n, std::uint64_t seed) {
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  Rng rng(seed);
  for (int i = n - 1; i > 0; --i) {
    const auto j = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(i) + 1));
    std::swap(order[i], order[j]);
  }
  return order;
}

Layout random_construct(std::span<const SittingConfiguration> configs, const ConflictGraph& g,
                        std::uint64_t seed) {
  check_aligned(configs, g);
  const auto order = random_order(g.vertex_count(), seed);
  return greedy_pass(g, order);
}

double random_average(std::span<const SittingConfiguration> configs, const ConflictGraph& g,
                      std::uint64_t base_seed, int runs) {
  if (runs < 1) throw std::invalid_argument("runs must be at least 1");
  double sum = 0;
  for (int r = 0; r < runs; ++r)
    sum += static_cast<double>(random_construct(configs, g, base_seed + r).value);
  return sum / runs;
}

}  // namespace dining
