#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "cgedit/errors.hpp"
#include "cgedit/graph.hpp"

namespace cgedit {

// Symmetric positive flip costs for the pairs of a small graph.
class PairWeights {
 public:
  explicit PairWeights(int n, std::int64_t initial = 1)
      : n_(n), w_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), initial) {}

  int order() const noexcept { return n_; }
  std::int64_t operator()(int u, int v) const { return w_[idx(u, v)]; }
  void set(int u, int v, std::int64_t w) {
    if (w <= 0) throw std::invalid_argument("pair weights must be positive");
    w_[idx(u, v)] = w;
    w_[idx(v, u)] = w;
  }

 private:
  std::size_t idx(int u, int v) const {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
  }
  int n_;
  std::vector<std::int64_t> w_;
};

struct QuotientEdit {
  EditSet flips;
  std::int64_t weight = 0;
};

struct QuotientSearchLimits {
  int max_order = 24;
  std::uint64_t max_nodes = 200'000'000;
};

namespace detail {

// Branch and bound over pair flips. Every solution must flip a not-yet-decided pair of any
// remaining P4; branching fixes the earlier pairs of the P4 as unflipped, so each flip set is
// explored once. The bound packs pair-disjoint P4s and charges each its cheapest free pair.
class WeightedP4Search {
 public:
  WeightedP4Search(const Graph& q, const PairWeights& w, QuotientSearchLimits limits)
      : n_(q.order()), w_(w), limits_(limits) {
    for (auto [u, v] : q.edges()) {
      adj_[static_cast<std::size_t>(u)] |= bit(v);
      adj_[static_cast<std::size_t>(v)] |= bit(u);
    }
  }

  QuotientEdit run() {
    dfs(0);
    std::vector<VertexPair> flips;
    for (auto [u, v] : best_flips_) flips.emplace_back(u, v);
    return {EditSet(std::move(flips)), best_};
  }

 private:
  using Quad = std::array<int, 4>;
  static std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

  bool is_fixed(int u, int v) const { return (fixed_[static_cast<std::size_t>(u)] >> v) & 1U; }
  void set_fixed(int u, int v, bool on) {
    if (on) {
      fixed_[static_cast<std::size_t>(u)] |= bit(v);
      fixed_[static_cast<std::size_t>(v)] |= bit(u);
    } else {
      fixed_[static_cast<std::size_t>(u)] &= ~bit(v);
      fixed_[static_cast<std::size_t>(v)] &= ~bit(u);
    }
  }
  void flip(int u, int v) {
    adj_[static_cast<std::size_t>(u)] ^= bit(v);
    adj_[static_cast<std::size_t>(v)] ^= bit(u);
  }

  static std::array<std::pair<int, int>, 6> pairs_of(const Quad& p) {
    return {{{p[0], p[1]}, {p[1], p[2]}, {p[2], p[3]}, {p[0], p[2]}, {p[1], p[3]}, {p[0], p[3]}}};
  }

  template <class F>
  void for_each_p4(F&& f) const {
    for (int b = 0; b < n_; ++b) {
      std::uint64_t cs = adj_[static_cast<std::size_t>(b)] & ~((bit(b) << 1) - 1);
      for (; cs != 0; cs &= cs - 1) {
        int c = std::countr_zero(cs);
        std::uint64_t as = adj_[static_cast<std::size_t>(b)] & ~adj_[static_cast<std::size_t>(c)] & ~bit(c);
        std::uint64_t ds = adj_[static_cast<std::size_t>(c)] & ~adj_[static_cast<std::size_t>(b)] & ~bit(b);
        for (; as != 0; as &= as - 1) {
          int a = std::countr_zero(as);
          for (std::uint64_t d = ds & ~adj_[static_cast<std::size_t>(a)]; d != 0; d &= d - 1)
            if (!f(Quad{a, b, c, std::countr_zero(d)})) return;
        }
      }
    }
  }

  void dfs(std::int64_t cost) {
    if (++nodes_ > limits_.max_nodes)
      throw search_limit_exceeded("weighted quotient search exceeded " + std::to_string(limits_.max_nodes) + " nodes");
    if (cost >= best_) return;

    // Choose the P4 with the fewest free pairs and build a pair-disjoint packing for the bound.
    bool any = false;
    bool dead = false;
    Quad branch{};
    int branch_free = 7;
    std::int64_t bound = 0;
    std::array<std::uint64_t, 64> used{};
    for_each_p4([&](const Quad& p) {
      any = true;
      int free = 0;
      std::int64_t cheapest = std::numeric_limits<std::int64_t>::max();
      bool disjoint = true;
      for (auto [u, v] : pairs_of(p)) {
        if (is_fixed(u, v)) continue;
        ++free;
        cheapest = std::min(cheapest, w_(u, v));
        if ((used[static_cast<std::size_t>(u)] >> v) & 1U) disjoint = false;
      }
      if (free == 0) {
        dead = true;
        return false;
      }
      if (free < branch_free) {
        branch_free = free;
        branch = p;
      }
      if (disjoint) {
        bound += cheapest;
        for (auto [u, v] : pairs_of(p))
          if (!is_fixed(u, v)) {
            used[static_cast<std::size_t>(u)] |= bit(v);
            used[static_cast<std::size_t>(v)] |= bit(u);
          }
      }
      return true;
    });
    if (dead) return;
    if (!any) {
      best_ = cost;
      best_flips_ = flips_;
      return;
    }
    if (cost + bound >= best_) return;

    std::vector<std::pair<int, int>> cand;
    for (auto [u, v] : pairs_of(branch))
      if (!is_fixed(u, v)) cand.emplace_back(u, v);
    std::stable_sort(cand.begin(), cand.end(), [&](auto x, auto y) { return w_(x.first, x.second) < w_(y.first, y.second); });
    for (auto [u, v] : cand) {
      set_fixed(u, v, true);
      flip(u, v);
      flips_.emplace_back(u, v);
      dfs(cost + w_(u, v));
      flips_.pop_back();
      flip(u, v);
      // stays fixed (unflipped) for the remaining branches
    }
    for (auto [u, v] : cand) set_fixed(u, v, false);
  }

  int n_;
  const PairWeights& w_;
  QuotientSearchLimits limits_;
  std::array<std::uint64_t, 64> adj_{};
  std::array<std::uint64_t, 64> fixed_{};
  std::vector<std::pair<int, int>> flips_;
  std::vector<std::pair<int, int>> best_flips_;
  std::int64_t best_ = std::numeric_limits<std::int64_t>::max();
  std::uint64_t nodes_ = 0;
};

}  // namespace detail

// Minimum-weight set of pair flips turning q into a cograph.
inline QuotientEdit weighted_quotient_cograph_edit(const Graph& q, const PairWeights& w,
                                                   QuotientSearchLimits limits = {}) {
  if (w.order() != q.order()) throw std::invalid_argument("weight table does not match quotient order");
  if (q.order() > limits.max_order || q.order() > 64)
    throw search_limit_exceeded("weighted quotient search: order " + std::to_string(q.order()) + " exceeds bound " +
                                std::to_string(limits.max_order));
  return detail::WeightedP4Search(q, w, limits).run();
}

}  // namespace cgedit
