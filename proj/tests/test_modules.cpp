#include <gtest/gtest.h>

#include <algorithm>

#include "cgedit/modules.hpp"
#include "cgedit/rng.hpp"
#include "support/oracles.hpp"

using namespace cgedit;

namespace {

Graph two_k2() { return Graph(4, {{0, 1}, {2, 3}}); }

std::vector<oracle::Mask> masks(const std::vector<VertexSet>& sets) {
  std::vector<oracle::Mask> out;
  for (const auto& s : sets) out.push_back(oracle::to_mask(s));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(IsModule, Examples) {
  const Graph p4 = graphs::path(4);
  EXPECT_FALSE(is_module(p4, VertexSet(4, {1, 2})));
  for (int v = 0; v < 4; ++v) EXPECT_TRUE(is_module(p4, VertexSet::singleton(4, v)));
  EXPECT_TRUE(is_module(p4, p4.vertices()));
  EXPECT_TRUE(is_module(two_k2(), VertexSet(4, {0, 1})));
}

TEST(EnumerateAllModules, Examples) {
  EXPECT_EQ(enumerate_all_modules(graphs::path(4)).size(), 5U);
  EXPECT_EQ(enumerate_all_modules(graphs::complete(3)).size(), 7U);
  const auto k1 = enumerate_all_modules(graphs::complete(1));
  ASSERT_EQ(k1.size(), 1U);
  EXPECT_EQ(k1[0], VertexSet(1, {0}));
}

TEST(EnumerateAllModules, MatchesOracle) {
  for (int n = 1; n <= 5; ++n)
    for (std::uint64_t code = 0; code < oracle::labeled_count(n); ++code) {
      const Graph g = oracle::labeled_graph(n, code);
      auto want = oracle::all_modules(oracle::Small(g));
      std::sort(want.begin(), want.end());
      ASSERT_EQ(masks(enumerate_all_modules(g)), want);
    }
}

TEST(MaximalModularPartition, Examples) {
  EXPECT_EQ(maximal_modular_partition(two_k2()), (ModularPartition{VertexSet(4, {0, 1}), VertexSet(4, {2, 3})}));
  EXPECT_EQ(maximal_modular_partition(graphs::path(4)).size(), 4U);
  EXPECT_EQ(maximal_modular_partition(graphs::complete(2)).size(), 2U);
}

TEST(Quotient, Examples) {
  const auto id = quotient(graphs::path(4), maximal_modular_partition(graphs::path(4)));
  EXPECT_EQ(id.graph, graphs::path(4));
  const ModularPartition halves{VertexSet(4, {0, 1}), VertexSet(4, {2, 3})};
  EXPECT_EQ(quotient(two_k2(), halves).graph, graphs::empty(2));
  const auto q = quotient(join(graphs::complete(2), graphs::complete(2)), halves);
  EXPECT_EQ(q.graph, graphs::complete(2));
  EXPECT_EQ(q.block_of, (std::vector<int>{0, 0, 1, 1}));
  EXPECT_THROW(quotient(graphs::path(4), {VertexSet(4, {1, 2}), VertexSet(4, {0, 3})}), std::invalid_argument);
}

TEST(MDTree, Examples) {
  const MDTree p4 = modular_decomposition_tree(graphs::path(4));
  EXPECT_EQ(p4.node(p4.root()).label, NodeLabel::prime);
  EXPECT_EQ(p4.node(p4.root()).children.size(), 4U);

  const MDTree t = modular_decomposition_tree(two_k2());
  const auto& root = t.node(t.root());
  EXPECT_EQ(root.label, NodeLabel::parallel);
  ASSERT_EQ(root.children.size(), 2U);
  for (auto c : root.children) {
    EXPECT_EQ(t.node(c).label, NodeLabel::series);
    EXPECT_EQ(t.node(c).children.size(), 2U);
  }

  const MDTree k1 = modular_decomposition_tree(graphs::complete(1));
  EXPECT_EQ(k1.size(), 1U);
  EXPECT_EQ(k1.node(0).label, NodeLabel::leaf);
}

TEST(MDTree, StrongModulesAndPrimeNodes) {
  EXPECT_EQ(masks(strong_modules(modular_decomposition_tree(graphs::path(4)))),
            (std::vector<oracle::Mask>{1, 2, 4, 8, 15}));
  EXPECT_TRUE(prime_nodes_bottom_up(modular_decomposition_tree(two_k2())).empty());
  const Graph pp = disjoint_union(graphs::path(4), graphs::path(4));
  const MDTree t = modular_decomposition_tree(pp);
  const auto primes = prime_nodes_bottom_up(t);
  ASSERT_EQ(primes.size(), 2U);
  EXPECT_FALSE(t.node(primes[0]).vertices.intersects(t.node(primes[1]).vertices));
}

TEST(MDTree, PrimeNodesComeBottomUp) {
  // P4 on {M,4,5,6} where M = {0,1,2,3} itself induces a P4.
  const Graph g(7, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}, {4, 5}, {5, 6}});
  const MDTree t = modular_decomposition_tree(g);
  const auto primes = prime_nodes_bottom_up(t);
  ASSERT_EQ(primes.size(), 2U);
  EXPECT_EQ(t.node(primes[0]).vertices, VertexSet(7, {0, 1, 2, 3}));
  EXPECT_EQ(primes[1], t.root());
}

TEST(MDTree, ModulesOfInducedSubgraphs) {
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    const Graph g = oracle::random_graph(7, rng.uniform_real(), rng);
    const MDTree t = modular_decomposition_tree(g);
    for (const auto& nd : t.nodes()) {
      const auto sub = induced_subgraph(g, nd.vertices);
      const oracle::Small ss(sub.graph);
      const oracle::Small sg(g);
      const auto k = static_cast<oracle::Mask>(sub.to_parent.size());
      for (oracle::Mask m = 1; m < (oracle::Mask{1} << k); ++m) {
        oracle::Mask parent = 0;
        for (int b : oracle::bits(m)) parent |= oracle::Mask{1} << sub.to_parent[static_cast<std::size_t>(b)];
        ASSERT_EQ(oracle::is_module(ss, m), oracle::is_module(sg, parent));
      }
    }
  }
}

TEST(MDTree, PrimeQuotientHasOnlyTrivialModules) {
  Rng rng(9);
  for (int i = 0; i < 300; ++i) {
    const Graph g = oracle::random_graph(rng.uniform_int(4, 9), rng.uniform_real(), rng);
    const MDTree t = modular_decomposition_tree(g);
    for (auto id : prime_nodes_bottom_up(t)) {
      const auto sub = induced_subgraph(g, t.node(id).vertices);
      ModularPartition children;
      for (const auto& c : t.child_sets(id)) {
        VertexSet local(sub.graph.order());
        for (std::size_t x = 0; x < sub.to_parent.size(); ++x)
          if (c.contains(sub.to_parent[x])) local.insert(static_cast<int>(x));
        children.push_back(local);
      }
      const auto q = quotient(sub.graph, children);
      EXPECT_EQ(oracle::all_modules(oracle::Small(q.graph)).size(), children.size() + 1);
    }
  }
}

TEST(MDTree, UniqueUnderRelabeling) {
  Rng rng(21);
  for (int i = 0; i < 200; ++i) {
    const int n = rng.uniform_int(1, 12);
    const Graph g = oracle::random_graph(n, rng.uniform_real(), rng);
    std::vector<int> perm(static_cast<std::size_t>(n)), inv(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) perm[static_cast<std::size_t>(v)] = v;
    rng.shuffle(perm);
    for (int v = 0; v < n; ++v) inv[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])] = v;
    const MDTree direct = modular_decomposition_tree(g);
    EXPECT_TRUE(direct == modular_decomposition_tree(g));
    const MDTree moved = modular_decomposition_tree(relabel(g, perm));
    std::vector<oracle::Mask> back;
    for (const auto& nd : moved.nodes()) {
      oracle::Mask m = 0;
      nd.vertices.for_each([&](int v) { m |= oracle::Mask{1} << inv[static_cast<std::size_t>(v)]; });
      back.push_back(m);
    }
    std::sort(back.begin(), back.end());
    EXPECT_EQ(back, masks(strong_modules(direct)));
  }
}

TEST(MDTree, FromNodesRejectsBrokenTrees) {
  std::vector<MDNode> nodes{{VertexSet(2, {0, 1}), NodeLabel::series, {1}, MDNode::npos},
                            {VertexSet(2, {0}), NodeLabel::leaf, {}, 0}};
  EXPECT_THROW(MDTree::from_nodes(2, nodes), std::invalid_argument);
}
