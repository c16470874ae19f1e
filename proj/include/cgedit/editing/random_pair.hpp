#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "cgedit/editing/edit_result.hpp"
#include "cgedit/modules.hpp"
#include "cgedit/rng.hpp"

namespace cgedit {

// Current blocks of one prime node and their adjacency in the edited quotient.
class RandomPairView {
 public:
  const VertexSet& prime_node() const noexcept { return node_; }
  std::size_t block_count() const noexcept { return active_.size(); }
  const VertexSet& block(std::size_t p) const { return blocks_[active_.at(p)]; }
  bool adjacent(std::size_t p, std::size_t q) const { return Q(active_.at(p), active_.at(q)); }

 protected:
  RandomPairView(const Graph& g, VertexSet node, std::vector<VertexSet> blocks)
      : node_(std::move(node)), blocks_(std::move(blocks)), n_(blocks_.size()) {
    q_.assign(n_ * n_, 0);
    for (std::size_t s = 0; s < n_; ++s) {
      active_.push_back(s);
      for (std::size_t t = 0; t < n_; ++t)
        if (s != t) q_[s * n_ + t] = g.adjacent(blocks_[s].min(), blocks_[t].min()) ? 1 : 0;
    }
  }

  bool Q(std::size_t s, std::size_t t) const { return q_[s * n_ + t] != 0; }

  VertexSet node_;
  std::vector<VertexSet> blocks_;
  std::size_t n_;
  std::vector<std::size_t> active_;
  std::vector<std::uint8_t> q_;
};

// Chooses two distinct positions of the view to merge next.
using PairPicker = std::function<std::pair<std::size_t, std::size_t>(const RandomPairView&)>;

namespace detail {

// Merges blocks in picker order. Edits are logged as (forest node, forest node) events on the
// merge forest over the children and expanded to vertex pairs after the loop.
class PairMerger : public RandomPairView {
 public:
  PairMerger(const Graph& g, VertexSet node, std::vector<VertexSet> blocks)
      : RandomPairView(g, std::move(node), blocks), children_(std::move(blocks)) {
    for (std::size_t s = 0; s < n_; ++s) {
      slot_node_.push_back(s);
      forest_.push_back({});
    }
  }

  void run(const PairPicker& pick, std::vector<VertexPair>& out) {
    while (active_.size() > 1) {
      auto [p, q] = pick(*this);
      if (p == q || p >= active_.size() || q >= active_.size())
        throw std::logic_error("pair picker returned an invalid pair");
      merge(active_[p], active_[q]);
    }
    expand(out);
  }

 private:
  void merge(std::size_t s, std::size_t t) {
    std::size_t i = s, j = t;
    if (blocks_[s].size() != blocks_[t].size() ? blocks_[s].size() < blocks_[t].size()
                                               : blocks_[t].min() < blocks_[s].min())
      std::swap(i, j);
    for (auto k : active_) {
      if (k == i || k == j || Q(i, k) == Q(j, k)) continue;
      events_.emplace_back(slot_node_[j], slot_node_[k]);
    }
    forest_.push_back({slot_node_[i], slot_node_[j]});
    slot_node_[i] = forest_.size() - 1;
    blocks_[i] |= blocks_[j];
    std::erase(active_, j);
  }

  void expand(std::vector<VertexPair>& out) const {
    std::vector<std::vector<std::size_t>> leaves(forest_.size());
    for (std::size_t f = 0; f < forest_.size(); ++f) {
      if (f < n_) leaves[f] = {f};
      for (auto c : forest_[f]) leaves[f].insert(leaves[f].end(), leaves[c].begin(), leaves[c].end());
    }
    std::vector<std::uint8_t> flip(n_ * n_, 0);
    for (auto [x, y] : events_)
      for (auto u : leaves[x])
        for (auto v : leaves[y]) {
          flip[u * n_ + v] ^= 1;
          flip[v * n_ + u] ^= 1;
        }
    for (std::size_t u = 0; u < n_; ++u)
      for (std::size_t v = u + 1; v < n_; ++v)
        if (flip[u * n_ + v])
          children_[u].for_each([&](int x) { children_[v].for_each([&](int y) { out.emplace_back(x, y); }); });
  }

  std::vector<std::size_t> slot_node_;
  std::vector<std::vector<std::size_t>> forest_;  // children of each forest node; leaves are 0..n-1
  std::vector<std::pair<std::size_t, std::size_t>> events_;
  std::vector<VertexSet> children_;  // the blocks as they were before any merge
};

}  // namespace detail

// Pairwise module merge with an arbitrary pair order supplied by pick.
inline EditResult random_pair_edit(const Graph& g, const MDTree& tree, const PairPicker& pick) {
  std::vector<VertexPair> pairs;
  if (tree.order() != g.order()) throw std::invalid_argument("random_pair_edit: tree does not match graph");
  for (auto id : prime_nodes_bottom_up(tree))
    detail::PairMerger(g, tree.node(id).vertices, tree.child_sets(id)).run(pick, pairs);
  return make_result(g, EditSet(std::move(pairs)), Method::random_pair);
}

inline EditResult random_pair_edit(const Graph& g, const PairPicker& pick) {
  return random_pair_edit(g, modular_decomposition_tree(g), pick);
}

// O(n²) variant: the next pair is drawn uniformly at random.
inline EditResult random_pair_edit(const Graph& g, const MDTree& tree, std::uint64_t seed) {
  Rng rng(seed);
  return random_pair_edit(g, tree, [&rng](const RandomPairView& v) {
    const std::size_t p = rng.index(v.block_count());
    std::size_t q = rng.index(v.block_count() - 1);
    if (q >= p) ++q;
    return std::pair{p, q};
  });
}

inline EditResult random_pair_edit(const Graph& g, std::uint64_t seed) {
  return random_pair_edit(g, modular_decomposition_tree(g), seed);
}

}  // namespace cgedit
