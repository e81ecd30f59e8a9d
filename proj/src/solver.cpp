#include "dining/solver.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace dining {
namespace {

using Word = std::uint64_t;
using Clock = std::chrono::steady_clock;

class BitMatrix {
 public:
  BitMatrix(int n, int words) : words_(words), bits_(static_cast<std::size_t>(n) * words, 0) {}
  Word* row(int v) { return bits_.data() + static_cast<std::size_t>(v) * words_; }
  const Word* row(int v) const { return bits_.data() + static_cast<std::size_t>(v) * words_; }
  void set(int v, int u) { row(v)[u >> 6] |= Word{1} << (u & 63); }

 private:
  int words_;
  std::vector<Word> bits_;
};

// Static clique-cover order: heavier first, then higher degree, then id.
std::vector<int> cover_order(const ConflictGraph& g) {
  std::vector<int> order(static_cast<std::size_t>(g.vertex_count()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (g.weight(a) != g.weight(b)) return g.weight(a) > g.weight(b);
    return g.degree(a) > g.degree(b);
  });
  return order;
}

// Clique cover over bitsets whose bit positions already follow cover_order.
class CoverBound {
 public:
  explicit CoverBound(const ConflictGraph& g)
      : n_(g.vertex_count()),
        words_((n_ + 63) / 64),
        order_(cover_order(g)),
        rank_(static_cast<std::size_t>(n_)),
        adj_(n_, words_),
        weight_(static_cast<std::size_t>(n_)),
        free_(static_cast<std::size_t>(words_)),
        clique_(static_cast<std::size_t>(words_)) {
    for (int r = 0; r < n_; ++r) rank_[order_[r]] = r;
    for (int r = 0; r < n_; ++r) {
      weight_[r] = g.weight(order_[r]);
      for (int u : g.neighbors(order_[r])) adj_.set(r, rank_[u]);
    }
  }

  template <typename Range>
  long bound(const Range& vertices) {
    std::fill(free_.begin(), free_.end(), 0);
    for (int v : vertices) {
      const int r = rank_[v];
      free_[r >> 6] |= Word{1} << (r & 63);
    }
    long total = 0;
    for (int i = 0; i < words_;) {
      if (!free_[i]) {
        ++i;
        continue;
      }
      const int v = i * 64 + std::countr_zero(free_[i]);
      total += weight_[v];
      free_[i] &= free_[i] - 1;
      const Word* nv = adj_.row(v);
      for (int k = i; k < words_; ++k) clique_[k] = free_[k] & nv[k];
      for (int k = i; k < words_;) {
        if (!clique_[k]) {
          ++k;
          continue;
        }
        const int u = k * 64 + std::countr_zero(clique_[k]);
        free_[u >> 6] &= ~(Word{1} << (u & 63));
        const Word* nu = adj_.row(u);
        for (int q = k; q < words_; ++q) clique_[q] &= nu[q];
      }
    }
    return total;
  }

 private:
  int n_;
  int words_;
  std::vector<int> order_;
  std::vector<int> rank_;
  BitMatrix adj_;
  std::vector<long> weight_;
  std::vector<Word> free_;
  std::vector<Word> clique_;
};

class RussianDoll {
 public:
  RussianDoll(const ConflictGraph& g, double time_limit_s, const SolveOptions& opt)
      : g_(g),
        n_(g.vertex_count()),
        words_((n_ + 63) / 64),
        later_(n_, words_),
        suffix_best_(static_cast<std::size_t>(n_) + 1, 0),
        cover_(g),
        opt_(opt),
        levels_(static_cast<std::size_t>(n_) + 1, std::vector<Word>(static_cast<std::size_t>(words_))),
        start_(Clock::now()),
        deadline_(start_ + std::chrono::duration_cast<Clock::duration>(
                               std::chrono::duration<double>(time_limit_s))) {
    // later_[v] = non-neighbors of v with a larger id.
    for (int v = 0; v < n_; ++v) {
      Word* row = later_.row(v);
      for (int u = v + 1; u < n_; ++u) row[u >> 6] |= Word{1} << (u & 63);
      for (int u : g.neighbors(v))
        if (u > v) row[u >> 6] &= ~(Word{1} << (u & 63));
    }
  }

  SolveResult run() {
    SolveResult res;
    std::vector<int> all(static_cast<std::size_t>(n_));
    std::iota(all.begin(), all.end(), 0);
    const long root_bound = cover_.bound(all);

    res.selected = opt_.initial;
    res.primal = g_.total_weight(res.selected);
    std::vector<int> suffix_set;  // a set achieving suffix_best_[current]
    int completed_from = n_;      // suffix_best_ exact for all v >= this

    for (int v = n_ - 1; v >= 0 && !aborted_; --v) {
      record_ = suffix_best_[v + 1];
      target_ = record_ + g_.weight(v);
      improved_ = false;
      done_ = false;
      path_.assign(1, v);

      std::vector<Word>& cand = level(0);
      std::copy_n(later_.row(v), words_, cand.begin());
      search(0, g_.weight(v));
      if (aborted_) break;

      suffix_best_[v] = record_;
      if (improved_) suffix_set = record_set_;
      completed_from = v;
      if (record_ > res.primal) {
        res.primal = record_;
        res.selected = suffix_set;
      }
      log_progress(res.primal, static_cast<double>(dual_bound(completed_from, root_bound)));
    }

    res.nodes = nodes_;
    res.elapsed = std::chrono::duration<double>(Clock::now() - start_).count();
    if (completed_from == 0 || n_ == 0) {
      res.status = SolveStatus::Optimal;
      res.dual = static_cast<double>(res.primal);
    } else {
      res.status = SolveStatus::TimeLimit;
      res.dual = static_cast<double>(std::max(res.primal, dual_bound(completed_from, root_bound)));
    }
    res.gap = res.primal > 0 ? optimality_gap(static_cast<double>(res.primal), res.dual)
              : res.dual > 0 ? std::numeric_limits<double>::infinity()
                             : 0.0;
    std::sort(res.selected.begin(), res.selected.end());
    return res;
  }

 private:
  // Valid upper bound once every suffix starting at `from` is solved.
  long dual_bound(int from, long root_bound) {
    if (from >= n_) return root_bound;
    std::vector<int> prefix(static_cast<std::size_t>(from));
    std::iota(prefix.begin(), prefix.end(), 0);
    return std::min(root_bound, suffix_best_[from] + cover_.bound(prefix));
  }

  // Depth never exceeds the vertex count, so every level is preallocated and
  // references stay valid across recursion.
  std::vector<Word>& level(int depth) { return levels_[depth]; }

  bool out_of_time() {
    if ((++nodes_ & 1023) == 0 && Clock::now() >= deadline_) aborted_ = true;
    return aborted_;
  }

  void search(int depth, long current) {
    if (out_of_time()) return;
    std::vector<Word>& cand = level(depth);

    int first = -1;
    for (int i = 0; i < words_; ++i)
      if (cand[i]) {
        first = i * 64 + std::countr_zero(cand[i]);
        break;
      }
    if (first < 0) {
      if (current > record_) {
        record_ = current;
        record_set_ = path_;
        improved_ = true;
        if (record_ >= target_) done_ = true;
      }
      return;
    }
    if (current + suffix_best_[first] <= record_) return;
    if (depth == 0 && current + cover_.bound(members(cand)) <= record_) return;

    for (int i = first >> 6; i < words_; ++i) {
      while (cand[i]) {
        const int u = i * 64 + std::countr_zero(cand[i]);
        if (current + suffix_best_[u] <= record_) return;
        cand[i] &= cand[i] - 1;
        std::vector<Word>& next = level(depth + 1);
        const Word* row = later_.row(u);
        for (int k = 0; k < words_; ++k) next[k] = cand[k] & row[k];
        path_.push_back(u);
        search(depth + 1, current + g_.weight(u));
        path_.pop_back();
        if (done_ || aborted_) return;
      }
    }
  }

  std::vector<int> members(const std::vector<Word>& bits) const {
    std::vector<int> out;
    for (int i = 0; i < words_; ++i)
      for (Word w = bits[i]; w; w &= w - 1) out.push_back(i * 64 + std::countr_zero(w));
    return out;
  }

  void log_progress(long primal, double bound) {
    if (!opt_.verbose || opt_.log == nullptr) return;
    const double t = std::chrono::duration<double>(Clock::now() - start_).count();
    if (t - last_log_ < 1.0 && bound > primal) return;
    last_log_ = t;
    char buf[128];
    std::snprintf(buf, sizeof buf, "%.3f %ld %.2f %.4f\n", t, primal, bound,
                  primal > 0 ? (bound - primal) / primal : 0.0);
    *opt_.log << buf;
  }

  const ConflictGraph& g_;
  int n_;
  int words_;
  BitMatrix later_;
  std::vector<long> suffix_best_;
  CoverBound cover_;
  const SolveOptions& opt_;
  std::vector<std::vector<Word>> levels_;
  Clock::time_point start_;
  Clock::time_point deadline_;

  std::vector<int> path_;
  std::vector<int> record_set_;
  long record_ = 0;
  long target_ = 0;
  bool improved_ = false;
  bool done_ = false;
  bool aborted_ = false;
  long nodes_ = 0;
  double last_log_ = -1.0;
};

}  // namespace

std::string_view to_string(SolveStatus s) {
  return s == SolveStatus::Optimal ? "Optimal" : "TimeLimit";
}

double optimality_gap(double primal, double dual) {
  if (primal == 0) throw std::domain_error("optimality gap undefined for zero primal bound");
  return (dual - primal) / primal;
}

long clique_cover_bound(const ConflictGraph& g, std::span<const int> subset) {
  CoverBound cover(g);
  return cover.bound(subset);
}

SolveResult solve_exact(const ConflictGraph& g, double time_limit_s, const SolveOptions& options) {
  if (!(time_limit_s > 0)) throw std::invalid_argument("time limit must be positive");
  for (int w : g.weights())
    if (w <= 0) throw std::invalid_argument("vertex weights must be positive");
  if (!g.is_independent(options.initial))
    throw std::invalid_argument("initial solution is not an independent set");
  RussianDoll search(g, time_limit_s, options);
  return search.run();
}

void export_lp(const ConflictGraph& g, std::ostream& out) {
  out << "\\ Maximum-occupancy set packing model\n";
  out << "Maximize\n obj:";
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (v > 0 && v % 8 == 0) out << "\n     ";
    out << (v == 0 ? " " : " + ") << g.weight(v) << " z" << v + 1;
  }
  out << "\nSubject To\n";
  std::size_t k = 0;
  for (const auto& [u, v] : g.edges())
    out << " c" << ++k << ": z" << u + 1 << " + z" << v + 1 << " <= 1\n";
  out << "Binary\n";
  for (int v = 0; v < g.vertex_count(); ++v) out << " z" << v + 1 << '\n';
  out << "End\n";
}

}  // namespace dining
