#ifndef DINING_HEURISTICS_HPP
#define DINING_HEURISTICS_HPP

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "dining/conflict.hpp"
#include "dining/seating.hpp"

namespace dining {

/// A feasible set of configurations, in the order they were placed.
struct Layout {
  std::vector<int> selected;
  long value = 0;
};

/// Generator behind random_construct; written into experiment output.
inline constexpr std::string_view kRandomAlgorithm = "mt19937_64/fisher-yates";

/// Single greedy pass over `order`, adding every vertex with no edge to the
/// vertices added so far.
Layout greedy_pass(const ConflictGraph& g, std::span<const int> order);

/// Configurations sorted by the distance from the origin corner to the center
/// of each table's anchor block, then more seats first, then lower id.
std::vector<int> close_corner_order(std::span<const SittingConfiguration> configs);

Layout close_corner(std::span<const SittingConfiguration> configs, const ConflictGraph& g);

/// Uniform permutation drawn from mt19937_64(seed) by Fisher-Yates with
/// unbiased bounded draws; the same seed gives the same layout everywhere.
std::vector<int> random_order(int n, std::uint64_t seed);

Layout random_construct(std::span<const SittingConfiguration> configs, const ConflictGraph& g,
                        std::uint64_t seed);

/// Mean value over seeds base_seed .. base_seed + runs - 1.
double random_average(std::span<const SittingConfiguration> configs, const ConflictGraph& g,
                      std::uint64_t base_seed, int runs = 5);

}  // namespace dining

#endif  // DINING_HEURISTICS_HPP
