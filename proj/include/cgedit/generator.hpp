#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "cgedit/cograph.hpp"
#include "cgedit/graph.hpp"
#include "cgedit/rng.hpp"

namespace cgedit {

struct PerturbedCograph {
  Graph graph;      // planted cograph with the flips applied
  Cotree planted;
  EditSet flips;
};

namespace detail {

inline std::size_t random_cotree_node(Rng& rng, const std::vector<int>& vs, NodeLabel label, int n,
                                      std::vector<MDNode>& nodes) {
  const std::size_t me = nodes.size();
  nodes.push_back({VertexSet::from_range(n, vs), NodeLabel::leaf, {}, MDNode::npos});
  if (vs.size() == 1) return me;
  nodes[me].label = label;
  const int size = static_cast<int>(vs.size());
  const int arity = rng.uniform_int(2, size);
  std::vector<int> cuts;
  for (int c = 1; c < size; ++c) cuts.push_back(c);
  rng.shuffle(cuts);
  cuts.resize(static_cast<std::size_t>(arity - 1));
  std::sort(cuts.begin(), cuts.end());
  cuts.push_back(size);
  const NodeLabel next = label == NodeLabel::series ? NodeLabel::parallel : NodeLabel::series;
  int from = 0;
  std::vector<std::size_t> kids;
  for (int c : cuts) {
    std::vector<int> part(vs.begin() + from, vs.begin() + c);
    kids.push_back(random_cotree_node(rng, part, next, n, nodes));
    from = c;
  }
  std::sort(kids.begin(), kids.end(),
            [&](std::size_t a, std::size_t b) { return nodes[a].vertices.min() < nodes[b].vertices.min(); });
  nodes[me].children = std::move(kids);
  return me;
}

inline VertexPair pair_at(std::uint64_t index, int n) {
  int u = 0;
  while (index >= static_cast<std::uint64_t>(n - 1 - u)) {
    index -= static_cast<std::uint64_t>(n - 1 - u);
    ++u;
  }
  return {u, u + 1 + static_cast<int>(index)};
}

}  // namespace detail

// Random cotree over shuffled vertices (uniform split arity and cut points, alternating labels,
// random root label), realized as a graph, then k distinct uniformly random pair flips.
inline Cotree random_cotree(int n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("random_cotree: n must be positive");
  std::vector<int> vs(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) vs[static_cast<std::size_t>(v)] = v;
  rng.shuffle(vs);
  const NodeLabel root = rng.bernoulli(0.5) ? NodeLabel::series : NodeLabel::parallel;
  std::vector<MDNode> nodes;
  detail::random_cotree_node(rng, vs, root, n, nodes);
  return Cotree::from_tree(MDTree::from_nodes(n, std::move(nodes)));
}

inline PerturbedCograph generate_perturbed_cograph(int n, std::uint64_t k, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("generate: n must be positive");
  const std::uint64_t total = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n - 1) / 2;
  if (k > total)
    throw std::invalid_argument("generate: k=" + std::to_string(k) + " exceeds the " + std::to_string(total) +
                                " vertex pairs");
  Rng rng(seed);
  Cotree planted = random_cotree(n, rng);
  // Floyd's sampling of k distinct pair indices.
  std::set<std::uint64_t> picked;
  for (std::uint64_t j = total - k; j < total; ++j) {
    const std::uint64_t t = rng.uniform(0, j);
    picked.insert(picked.count(t) ? j : t);
  }
  std::vector<VertexPair> flips;
  for (auto i : picked) flips.push_back(detail::pair_at(i, n));
  EditSet f(std::move(flips));
  Graph g = apply_edits(cotree_to_graph(planted), f);
  return {std::move(g), std::move(planted), std::move(f)};
}

}  // namespace cgedit
