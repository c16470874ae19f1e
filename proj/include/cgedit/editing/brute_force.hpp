#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "cgedit/editing/edit_result.hpp"
#include "cgedit/errors.hpp"
#include "cgedit/graph.hpp"

namespace cgedit {

struct BruteForceLimits {
  int single_optimum = 8;  // max n for brute_force_optimal_edit
  int all_optima = 6;      // max n for brute_force_all_optimal_edits
};

namespace detail {

// Adjacency rows as bit masks; independent of the VertexSet machinery on purpose.
struct SmallGraph {
  int n = 0;
  std::array<std::uint32_t, 16> rows{};

  explicit SmallGraph(const Graph& g) : n(g.order()) {
    for (auto [u, v] : g.edges()) flip(u, v);
  }
  void flip(int u, int v) {
    rows[static_cast<std::size_t>(u)] ^= 1U << v;
    rows[static_cast<std::size_t>(v)] ^= 1U << u;
  }
};

inline bool small_is_cograph(const SmallGraph& g, std::uint32_t s) {
  if (std::popcount(s) <= 3) return true;
  for (bool co : {false, true}) {
    std::uint32_t comp = s & (~s + 1);
    std::uint32_t frontier = comp;
    while (frontier != 0) {
      std::uint32_t reach = 0;
      for (std::uint32_t f = frontier; f != 0; f &= f - 1) {
        auto row = g.rows[static_cast<std::size_t>(std::countr_zero(f))];
        reach |= co ? ~row : row;
      }
      frontier = reach & s & ~comp;
      comp |= frontier;
    }
    if (comp != s) return small_is_cograph(g, comp) && small_is_cograph(g, s & ~comp);
  }
  return false;
}

class SubsetSearch {
 public:
  SubsetSearch(const Graph& g, bool collect_all) : g_(g), all_(collect_all) {
    for (int u = 0; u < g.order(); ++u)
      for (int v = u + 1; v < g.order(); ++v) pairs_.emplace_back(u, v);
    full_ = g.order() >= 32 ? ~0U : (1U << g.order()) - 1;
  }

  // Iterative deepening on the number of flipped pairs.
  std::vector<EditSet> run() {
    for (std::size_t k = 0; k <= pairs_.size(); ++k) {
      chosen_.clear();
      dfs(0, k);
      if (!found_.empty()) return std::move(found_);
    }
    return {};
  }

 private:
  bool dfs(std::size_t start, std::size_t budget) {
    if (budget == 0) {
      if (!small_is_cograph(g_, full_)) return false;
      std::vector<VertexPair> ps;
      for (auto i : chosen_) ps.push_back(pairs_[i]);
      found_.emplace_back(std::move(ps));
      return !all_;
    }
    for (std::size_t i = start; i + budget <= pairs_.size(); ++i) {
      g_.flip(pairs_[i].first, pairs_[i].second);
      chosen_.push_back(i);
      bool stop = dfs(i + 1, budget - 1);
      chosen_.pop_back();
      g_.flip(pairs_[i].first, pairs_[i].second);
      if (stop) return true;
    }
    return false;
  }

  SmallGraph g_;
  bool all_;
  std::uint32_t full_ = 0;
  std::vector<VertexPair> pairs_;
  std::vector<std::size_t> chosen_;
  std::vector<EditSet> found_;
};

}  // namespace detail

// Minimum-cardinality cograph edit set by exhaustive search over pair subsets of growing size.
// Among equal-size optima the lexicographically first pair subset is returned.
inline EditResult brute_force_optimal_edit(const Graph& g, BruteForceLimits limits = {}) {
  if (g.order() > limits.single_optimum || g.order() > 16)
    throw search_limit_exceeded("brute force: n=" + std::to_string(g.order()) + " exceeds bound " +
                                std::to_string(limits.single_optimum));
  auto found = detail::SubsetSearch(g, false).run();
  return make_result(g, std::move(found.front()), Method::bruteforce);
}

// Every optimal cograph edit set, in lexicographic order of pair subsets.
inline std::vector<EditSet> brute_force_all_optimal_edits(const Graph& g, BruteForceLimits limits = {}) {
  if (g.order() > limits.all_optima || g.order() > 16)
    throw search_limit_exceeded("brute force (all optima): n=" + std::to_string(g.order()) + " exceeds bound " +
                                std::to_string(limits.all_optima));
  return detail::SubsetSearch(g, true).run();
}

}  // namespace cgedit
