#include <gtest/gtest.h>

#include "cgedit/graph.hpp"
#include "cgedit/rng.hpp"
#include "support/oracles.hpp"

using namespace cgedit;

namespace {

Graph two_k2() { return Graph(4, {{0, 1}, {2, 3}}); }

Graph random_small(Rng& rng, int n) { return oracle::random_graph(n, 0.5, rng); }

}  // namespace

TEST(VertexSet, BasicOperations) {
  VertexSet s(130, {0, 64, 129});
  EXPECT_EQ(s.size(), 3);
  EXPECT_EQ(s.min(), 0);
  EXPECT_EQ(s.next(1), 64);
  EXPECT_EQ(s.next(130), -1);
  EXPECT_EQ(s.to_string(), "0,64,129");
  EXPECT_EQ(s.complement().size(), 127);
  VertexSet t(130, {64});
  EXPECT_TRUE(t.is_subset_of(s));
  EXPECT_FALSE(s.is_subset_of(t));
  EXPECT_TRUE(s.intersects(t));
  EXPECT_EQ((s | t), s);
}

TEST(VertexSet, OutOfRangeThrows) {
  VertexSet s(4);
  EXPECT_THROW(s.insert(4), std::out_of_range);
  EXPECT_THROW(s.insert(-1), std::out_of_range);
}

TEST(EditSet, NormalizesAndSetAlgebra) {
  EditSet f{{3, 1}, {0, 2}, {1, 3}};
  ASSERT_EQ(f.size(), 2U);
  EXPECT_EQ(f.pairs()[0], VertexPair(0, 2));
  EXPECT_TRUE(f.contains({3, 1}));
  EditSet g{{0, 2}, {4, 5}};
  EXPECT_EQ(f.set_union(g).size(), 3U);
  EXPECT_EQ(f.set_difference(g), EditSet({{1, 3}}));
  EXPECT_EQ(f.symmetric_difference(g), EditSet({{1, 3}, {4, 5}}));
  EXPECT_FALSE(f.disjoint_from(g));
  EXPECT_THROW(VertexPair(2, 2), std::invalid_argument);
}

TEST(Graph, RejectsBadEdges) {
  EXPECT_THROW(Graph(3, {{0, 3}}), std::out_of_range);
  EXPECT_THROW(Graph(3, {{1, 1}}), std::invalid_argument);
}

TEST(Graph, ComplementExamples) {
  const Graph c = complement(graphs::path(4));
  EXPECT_EQ(c, Graph(4, {{0, 2}, {0, 3}, {1, 3}}));
  EXPECT_EQ(relabel(c, {1, 3, 0, 2}), graphs::path(4));
  EXPECT_EQ(complement(graphs::empty(3)), graphs::complete(3));
  EXPECT_EQ(complement(complement(graphs::cycle(5))), graphs::cycle(5));
}

TEST(Graph, InducedSubgraphExamples) {
  EXPECT_EQ(induced_subgraph(graphs::path(4), std::vector<int>{0, 1, 2}).graph, graphs::path(3));
  const Graph g = graphs::cycle(6);
  const auto whole = induced_subgraph(g, g.vertices());
  EXPECT_EQ(whole.graph, g);
  EXPECT_EQ(whole.to_parent, (std::vector<int>{0, 1, 2, 3, 4, 5}));
  const Graph c5 = graphs::cycle(5);
  for (int drop = 0; drop < 5; ++drop) {
    std::vector<int> keep;
    for (int v = 0; v < 5; ++v)
      if (v != drop) keep.push_back(v);
    const Graph sub = induced_subgraph(c5, keep).graph;
    EXPECT_EQ(sub.edge_count(), 3U);
    EXPECT_TRUE(oracle::has_induced_p4(oracle::Small(sub)));
  }
}

TEST(Graph, ConnectedComponentsExamples) {
  const auto comps = connected_components(two_k2());
  ASSERT_EQ(comps.size(), 2U);
  EXPECT_EQ(comps[0], VertexSet(4, {0, 1}));
  EXPECT_EQ(comps[1], VertexSet(4, {2, 3}));
  EXPECT_EQ(connected_components(graphs::path(4)).size(), 1U);
  EXPECT_EQ(connected_components(graphs::empty(3)).size(), 3U);
  EXPECT_EQ(co_components(complement(two_k2()), VertexSet::full(4)).size(), 2U);
}

TEST(Graph, ApplyEditsExamples) {
  EXPECT_EQ(apply_edits(graphs::path(4), EditSet{{0, 3}}), graphs::cycle(4));
  EXPECT_EQ(apply_edits(graphs::cycle(5), EditSet{}), graphs::cycle(5));
  Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    const Graph g = random_small(rng, 7);
    std::vector<VertexPair> pairs;
    for (int u = 0; u < 7; ++u)
      for (int v = u + 1; v < 7; ++v)
        if (rng.bernoulli(0.3)) pairs.emplace_back(u, v);
    const EditSet f(std::move(pairs));
    EXPECT_EQ(apply_edits(apply_edits(g, f), f), g);
    EXPECT_EQ(difference(g, apply_edits(g, f)), f);
  }
}

TEST(Graph, JoinAndUnionExamples) {
  const Graph k1 = graphs::complete(1);
  EXPECT_EQ(join(k1, k1), graphs::complete(2));
  EXPECT_EQ(complement(disjoint_union(k1, k1)), graphs::complete(2));
  EXPECT_EQ(join(graphs::empty(2), graphs::empty(2)), Graph(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}));
}

TEST(Graph, Properties) {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const Graph g = random_small(rng, rng.uniform_int(1, 6));
    const Graph h = random_small(rng, rng.uniform_int(1, 6));
    EXPECT_EQ(complement(complement(g)), g);
    EXPECT_EQ(join(g, h), complement(disjoint_union(complement(g), complement(h))));
    EXPECT_EQ(connected_components(disjoint_union(g, h)).size(),
              connected_components(g).size() + connected_components(h).size());
  }
}

TEST(Graph, BuilderToggle) {
  GraphBuilder b(3);
  b.toggle(0, 1);
  b.toggle(1, 2);
  b.toggle(0, 1);
  EXPECT_EQ(std::move(b).build(), Graph(3, {{1, 2}}));
}

TEST(Rng, ReproducibleAndInRange) {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next(), b.next());
  Rng r(1);
  for (int i = 0; i < 1000; ++i) {
    const auto x = r.uniform(3, 9);
    EXPECT_GE(x, 3U);
    EXPECT_LE(x, 9U);
    const double d = r.uniform_real();
    EXPECT_GE(d, 0.0);
    EXPECT_LT(d, 1.0);
  }
}
