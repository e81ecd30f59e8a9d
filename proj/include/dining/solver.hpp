#ifndef DINING_SOLVER_HPP
#define DINING_SOLVER_HPP

#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "dining/conflict.hpp"

namespace dining {

enum class SolveStatus { Optimal, TimeLimit };

std::string_view to_string(SolveStatus s);

struct SolveOptions {
  /// Feasible starting solution; replaced as soon as the search beats it.
  std::vector<int> initial;
  /// Progress lines `time_s incumbent bound gap` go to `log` when set.
  bool verbose = false;
  std::ostream* log = nullptr;
};

struct SolveResult {
  std::vector<int> selected;
  long primal = 0;
  double dual = 0;
  double gap = 0;
  SolveStatus status = SolveStatus::Optimal;
  double elapsed = 0;
  long nodes = 0;
};

/// (dual - primal) / primal. Throws std::domain_error when primal is zero.
double optimality_gap(double primal, double dual);

/// Greedy weighted clique cover of `subset`: vertices are taken in order of
/// descending weight, then descending degree, then id; each opens a clique
/// that is grown greedily in the same order. Returns the sum over cliques of
/// the heaviest member, an upper bound on the maximum-weight independent set
/// inside `subset`.
long clique_cover_bound(const ConflictGraph& g, std::span<const int> subset);

/// Maximum-weight independent set by Russian-doll branch and bound.
///
/// Vertices are swept from the highest id down; for each suffix
/// {v, v+1, ...} the optimum c(v) is found by a depth-first include/exclude
/// search whose nodes are pruned when current + c(first candidate) or
/// current + clique cover of the candidates cannot beat the suffix record.
/// Configuration ids follow the row-major scan of the room, so suffixes are
/// contiguous regions and c() behaves like a sweep-line table.
///
/// On timeout the result carries the best layout known (the initial solution
/// or the last completed suffix optimum) and the bound
/// min(cover(V), c(i+1) + cover(v_0..v_i)).
SolveResult solve_exact(const ConflictGraph& g, double time_limit_s, const SolveOptions& options = {});

/// CPLEX LP text of max sum w_u z_u s.t. z_u + z_v <= 1 per edge, z binary.
/// Variables are named z1..zV.
void export_lp(const ConflictGraph& g, std::ostream& out);

}  // namespace dining

#endif  // DINING_SOLVER_HPP
