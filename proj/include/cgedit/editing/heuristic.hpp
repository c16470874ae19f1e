#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <tuple>
#include <vector>

#include "cgedit/editing/edit_result.hpp"
#include "cgedit/modules.hpp"
#include "cgedit/rng.hpp"

namespace cgedit {

// How ties in the greedy pair selection are broken. Deterministic picks the lexicographically
// smallest (min vertex of M_i, min vertex of M_j); seeded picks uniformly among tied pairs.
struct TieBreak {
  std::optional<std::uint64_t> seed;

  static TieBreak deterministic() { return {}; }
  static TieBreak seeded(std::uint64_t s) { return {s}; }
};

// Read-only view of the merge state of one prime node, handed to observers after the
// initialization and after every merge. Positions index the current blocks.
class HeuristicState {
 public:
  const VertexSet& prime_node() const noexcept { return node_; }
  std::size_t block_count() const noexcept { return active_.size(); }
  const VertexSet& block(std::size_t p) const { return blocks_[active_.at(p)]; }
  std::int64_t a(std::size_t p, std::size_t q) const { return A(active_.at(p), active_.at(q)); }
  bool b(std::size_t p, std::size_t q, std::size_t r) const {
    return B(active_.at(p), active_.at(q), active_.at(r));
  }
  // Adjacency in the partially edited graph G*.
  bool adjacent(int x, int y) const {
    return g_->adjacent(x, y) != (*flips_)[static_cast<std::size_t>(x)].contains(y);
  }
  std::size_t merges_done() const noexcept { return merges_; }

 protected:
  HeuristicState(const Graph& g, std::vector<VertexSet>& flips, VertexSet node, std::vector<VertexSet> blocks)
      : g_(&g), flips_(&flips), node_(std::move(node)), blocks_(std::move(blocks)), n_(blocks_.size()) {
    for (std::size_t s = 0; s < n_; ++s) {
      size_.push_back(blocks_[s].size());
      active_.push_back(s);
    }
    q_.assign(n_ * n_, 0);
    a_.assign(n_ * n_, 0);
    for (std::size_t s = 0; s < n_; ++s)
      for (std::size_t t = 0; t < n_; ++t)
        if (s != t) q_[s * n_ + t] = g.adjacent(blocks_[s].min(), blocks_[t].min()) ? 1 : 0;
  }

  std::int64_t A(std::size_t s, std::size_t t) const { return a_[s * n_ + t]; }
  void set_A(std::size_t s, std::size_t t, std::int64_t v) { a_[s * n_ + t] = a_[t * n_ + s] = v; }
  bool Q(std::size_t s, std::size_t t) const { return q_[s * n_ + t] != 0; }
  bool B(std::size_t i, std::size_t j, std::size_t k) const { return Q(i, k) != Q(j, k); }

  void toggle_biclique(const VertexSet& x, const VertexSet& y) {
    x.for_each([&](int v) { (*flips_)[static_cast<std::size_t>(v)] ^= y; });
    y.for_each([&](int v) { (*flips_)[static_cast<std::size_t>(v)] ^= x; });
  }

  const Graph* g_;
  std::vector<VertexSet>* flips_;
  VertexSet node_;
  std::vector<VertexSet> blocks_;
  std::size_t n_;
  std::vector<std::int64_t> size_;
  std::vector<std::size_t> active_;  // live slots
  std::vector<std::uint8_t> q_;      // block adjacency in G*
  std::vector<std::int64_t> a_;
  std::size_t merges_ = 0;
};

using HeuristicObserver = std::function<void(const HeuristicState&)>;

namespace detail {

enum class Selection { greedy, greedy_random_ties, weighted };

class PrimeMerger : public HeuristicState {
 public:
  PrimeMerger(const Graph& g, std::vector<VertexSet>& flips, VertexSet node, std::vector<VertexSet> blocks)
      : HeuristicState(g, flips, std::move(node), std::move(blocks)) {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j)
        for (std::size_t k = j + 1; k < n_; ++k) {
          set_A(i, j, A(i, j) + size_[k] * B(i, j, k));
          set_A(i, k, A(i, k) + size_[j] * B(i, k, j));
          set_A(j, k, A(j, k) + size_[i] * B(j, k, i));
        }
  }

  void run(Selection sel, Rng* rng, const HeuristicObserver& observe) {
    if (observe) observe(*this);
    while (active_.size() > 1) {
      auto [i, j, adjust_j] = select(sel, rng);
      merge(i, j, adjust_j);
      ++merges_;
      if (observe) observe(*this);
    }
  }

 private:
  // (i, j) with |M_i| >= |M_j|; on equal sizes the smaller minimum vertex is i.
  std::pair<std::size_t, std::size_t> orient(std::size_t s, std::size_t t) const {
    if (size_[s] != size_[t]) return size_[s] > size_[t] ? std::pair{s, t} : std::pair{t, s};
    return blocks_[s].min() < blocks_[t].min() ? std::pair{s, t} : std::pair{t, s};
  }

  std::tuple<std::size_t, std::size_t, bool> select(Selection sel, Rng* rng) const {
    using Key = std::tuple<std::int64_t, int, int>;
    std::optional<Key> best;
    std::vector<std::pair<std::size_t, std::size_t>> tied;
    std::vector<std::pair<std::size_t, std::size_t>> all;
    std::vector<double> weight;
    double total = 0;
    for (std::size_t p = 0; p < active_.size(); ++p)
      for (std::size_t q = p + 1; q < active_.size(); ++q) {
        auto [i, j] = orient(active_[p], active_[q]);
        const std::int64_t cost = A(i, j) * size_[j];
        if (sel == Selection::weighted) {
          all.emplace_back(i, j);
          weight.push_back(1.0 / (1.0 + static_cast<double>(cost)));
          total += weight.back();
          continue;
        }
        Key key{cost, blocks_[i].min(), blocks_[j].min()};
        if (!best || std::get<0>(key) < std::get<0>(*best)) tied.clear();
        if (!best || key < *best) best = key;
        if (std::get<0>(key) == std::get<0>(*best)) tied.emplace_back(i, j);
      }
    if (sel == Selection::weighted) {
      double r = rng->uniform_real() * total;
      std::size_t pick = all.size() - 1;
      for (std::size_t x = 0; x < all.size(); ++x) {
        if (r < weight[x]) {
          pick = x;
          break;
        }
        r -= weight[x];
      }
      auto [i, j] = all[pick];
      const double p = static_cast<double>(size_[i]) / static_cast<double>(size_[i] + size_[j]);
      return {i, j, rng->bernoulli(p)};
    }
    if (sel == Selection::greedy_random_ties) {
      auto [i, j] = tied[rng->index(tied.size())];
      return {i, j, true};
    }
    for (auto [i, j] : tied)
      if (blocks_[i].min() == std::get<1>(*best) && blocks_[j].min() == std::get<2>(*best)) return {i, j, true};
    return {tied.front().first, tied.front().second, true};
  }

  // Block b takes over the out-neighborhood of block a; the union lives on in slot i.
  void merge(std::size_t i, std::size_t j, bool adjust_j) {
    const std::size_t a = adjust_j ? i : j;
    const std::size_t b = adjust_j ? j : i;
    std::vector<std::size_t> rest;
    for (auto s : active_)
      if (s != i && s != j) rest.push_back(s);

    std::vector<std::size_t> edited;
    if (A(i, j) != 0)
      for (auto k : rest)
        if (B(i, j, k)) edited.push_back(k);

    // All B values below refer to G* before this merge's edits.
    std::vector<std::int64_t> merged_row(n_, 0);
    for (auto k : rest) merged_row[k] = A(a, k) - size_[b] * B(a, k, b);
    for (std::size_t x = 0; x < rest.size(); ++x)
      for (std::size_t y = x + 1; y < rest.size(); ++y) {
        const auto k = rest[x], l = rest[y];
        set_A(k, l, A(k, l) + size_[b] * B(k, l, a) - size_[b] * B(k, l, b));
      }

    for (auto k : edited) toggle_biclique(blocks_[b], blocks_[k]);
    for (auto k : rest) {
      q_[i * n_ + k] = q_[k * n_ + i] = q_[a * n_ + k];
      set_A(i, k, merged_row[k]);
    }
    blocks_[i] |= blocks_[j];
    size_[i] += size_[j];
    std::erase(active_, j);
  }
};

inline EditResult run_heuristic(const Graph& g, const MDTree& tree, Selection sel, Rng* rng,
                                const HeuristicObserver& observe, Method method) {
  const int n = g.order();
  std::vector<VertexSet> flips(static_cast<std::size_t>(n), VertexSet(n));
  for (auto id : prime_nodes_bottom_up(tree))
    PrimeMerger(g, flips, tree.node(id).vertices, tree.child_sets(id)).run(sel, rng, observe);
  std::vector<VertexPair> pairs;
  for (int x = 0; x < n; ++x)
    flips[static_cast<std::size_t>(x)].for_each([&](int y) {
      if (y > x) pairs.emplace_back(x, y);
    });
  return make_result(g, EditSet(std::move(pairs)), method);
}

}  // namespace detail

// Greedy pairwise module merge: per prime node, bottom-up, repeatedly merge the pair of blocks
// with the fewest forced edits A_ij·|M_j|, rewiring the smaller block to the larger one.
inline EditResult heuristic_edit(const Graph& g, const MDTree& tree, TieBreak tie = TieBreak::deterministic(),
                                 const HeuristicObserver& observe = {}) {
  if (tree.order() != g.order()) throw std::invalid_argument("heuristic_edit: tree does not match graph");
  if (!tie.seed) return detail::run_heuristic(g, tree, detail::Selection::greedy, nullptr, observe, Method::greedy);
  Rng rng(*tie.seed);
  return detail::run_heuristic(g, tree, detail::Selection::greedy_random_ties, &rng, observe, Method::greedy);
}

inline EditResult heuristic_edit(const Graph& g, TieBreak tie = TieBreak::deterministic(),
                                 const HeuristicObserver& observe = {}) {
  return heuristic_edit(g, modular_decomposition_tree(g), tie, observe);
}

// Randomized selection: pair (M_i, M_j) drawn with weight 1 / (1 + A_ij·|M_j|); M_j is rewired
// with probability |M_i| / (|M_i| + |M_j|), otherwise M_i is.
inline EditResult heuristic_edit_randomized(const Graph& g, const MDTree& tree, std::uint64_t seed,
                                            const HeuristicObserver& observe = {}) {
  if (tree.order() != g.order()) throw std::invalid_argument("heuristic_edit_randomized: tree does not match graph");
  Rng rng(seed);
  return detail::run_heuristic(g, tree, detail::Selection::weighted, &rng, observe, Method::greedy_randomized);
}

inline EditResult heuristic_edit_randomized(const Graph& g, std::uint64_t seed, const HeuristicObserver& observe = {}) {
  return heuristic_edit_randomized(g, modular_decomposition_tree(g), seed, observe);
}

}  // namespace cgedit
