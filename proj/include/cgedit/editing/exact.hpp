#pragma once

#include <string>
#include <vector>

#include "cgedit/editing/edit_result.hpp"
#include "cgedit/editing/quotient_search.hpp"
#include "cgedit/errors.hpp"
#include "cgedit/merge.hpp"
#include "cgedit/modules.hpp"

namespace cgedit {

struct ExactOptions {
  int max_children = 16;  // per prime node
  std::uint64_t max_search_nodes = 200'000'000;
  bool with_trace = true;
};

// Optimal cograph editing. Each prime node of MD(g) is solved on its quotient with flip weight
// |M_i|·|M_j|, bottom-up; a quotient flip becomes the biclique between the two children.
inline EditResult exact_edit(const Graph& g, const MDTree& tree, const ExactOptions& opts = {}) {
  if (tree.order() != g.order()) throw std::invalid_argument("exact_edit: tree does not match graph");
  std::vector<VertexPair> pairs;
  for (auto id : prime_nodes_bottom_up(tree)) {
    const auto children = tree.child_sets(id);
    const int k = static_cast<int>(children.size());
    if (k > opts.max_children)
      throw search_limit_exceeded("exact_edit: prime node with " + std::to_string(k) + " children exceeds bound " +
                                  std::to_string(opts.max_children));
    GraphBuilder qb(k);
    PairWeights w(k);
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) {
        const auto& ci = children[static_cast<std::size_t>(i)];
        const auto& cj = children[static_cast<std::size_t>(j)];
        if (g.adjacent(ci.min(), cj.min())) qb.add_edge(i, j);
        w.set(i, j, static_cast<std::int64_t>(ci.size()) * cj.size());
      }
    const auto sol = weighted_quotient_cograph_edit(qb.view(), w, {k, opts.max_search_nodes});
    for (const auto& f : sol.flips)
      children[static_cast<std::size_t>(f.first)].for_each([&](int x) {
        children[static_cast<std::size_t>(f.second)].for_each([&](int y) { pairs.emplace_back(x, y); });
      });
  }
  EditResult r = make_result(g, EditSet(std::move(pairs)), Method::exact);
  if (opts.with_trace) r.trace = pairwise_merge_sequence(g, r.edits, {Optimality::optimal, false});
  return r;
}

inline EditResult exact_edit(const Graph& g, const ExactOptions& opts = {}) {
  return exact_edit(g, modular_decomposition_tree(g), opts);
}

}  // namespace cgedit
