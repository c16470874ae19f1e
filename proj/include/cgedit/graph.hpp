#pragma once

#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cgedit/vertex_set.hpp"

namespace cgedit {

// Unordered pair of distinct vertices, stored with first < second.
struct VertexPair {
  int first = 0;
  int second = 0;

  VertexPair() = default;
  VertexPair(int x, int y) : first(std::min(x, y)), second(std::max(x, y)) {
    if (x == y) throw std::invalid_argument("pair {" + std::to_string(x) + "," + std::to_string(y) + "} is a self-loop");
  }

  friend auto operator<=>(const VertexPair&, const VertexPair&) = default;
};

// Set of unordered vertex pairs F; a graph G is edited to G △ F.
class EditSet {
 public:
  EditSet() = default;
  EditSet(std::initializer_list<VertexPair> pairs) : pairs_(pairs) { normalize(); }
  explicit EditSet(std::vector<VertexPair> pairs) : pairs_(std::move(pairs)) { normalize(); }

  const std::vector<VertexPair>& pairs() const noexcept { return pairs_; }
  std::size_t size() const noexcept { return pairs_.size(); }
  bool empty() const noexcept { return pairs_.empty(); }
  auto begin() const noexcept { return pairs_.begin(); }
  auto end() const noexcept { return pairs_.end(); }

  bool contains(const VertexPair& p) const { return std::binary_search(pairs_.begin(), pairs_.end(), p); }

  EditSet set_union(const EditSet& o) const {
    std::vector<VertexPair> out;
    std::set_union(pairs_.begin(), pairs_.end(), o.pairs_.begin(), o.pairs_.end(), std::back_inserter(out));
    return from_sorted(std::move(out));
  }
  EditSet set_difference(const EditSet& o) const {
    std::vector<VertexPair> out;
    std::set_difference(pairs_.begin(), pairs_.end(), o.pairs_.begin(), o.pairs_.end(), std::back_inserter(out));
    return from_sorted(std::move(out));
  }
  EditSet symmetric_difference(const EditSet& o) const {
    std::vector<VertexPair> out;
    std::set_symmetric_difference(pairs_.begin(), pairs_.end(), o.pairs_.begin(), o.pairs_.end(),
                                  std::back_inserter(out));
    return from_sorted(std::move(out));
  }
  bool disjoint_from(const EditSet& o) const {
    auto a = pairs_.begin();
    auto b = o.pairs_.begin();
    while (a != pairs_.end() && b != o.pairs_.end()) {
      if (*a == *b) return false;
      *a < *b ? ++a : ++b;
    }
    return true;
  }

  template <class Pred>
  EditSet filter(Pred&& keep) const {
    std::vector<VertexPair> out;
    std::copy_if(pairs_.begin(), pairs_.end(), std::back_inserter(out), keep);
    return from_sorted(std::move(out));
  }

  friend bool operator==(const EditSet&, const EditSet&) = default;
  friend auto operator<=>(const EditSet&, const EditSet&) = default;

 private:
  static EditSet from_sorted(std::vector<VertexPair> sorted) {
    EditSet e;
    e.pairs_ = std::move(sorted);
    return e;
  }
  void normalize() {
    std::sort(pairs_.begin(), pairs_.end());
    pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
  }

  std::vector<VertexPair> pairs_;
};

// Simple undirected loop-free graph on vertices 0..n-1 with bit-row adjacency.
//
// Graphs are immutable values; use GraphBuilder or the free functions below to derive new ones.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : rows_(static_cast<std::size_t>(n), VertexSet(n)) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
  }
  Graph(int n, std::initializer_list<std::pair<int, int>> edges);
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  int order() const noexcept { return static_cast<int>(rows_.size()); }
  bool adjacent(int u, int v) const noexcept { return rows_[static_cast<std::size_t>(u)].contains(v); }
  const VertexSet& neighbors(int v) const { return rows_.at(static_cast<std::size_t>(v)); }
  int degree(int v) const { return neighbors(v).size(); }
  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (const auto& r : rows_) twice += static_cast<std::size_t>(r.size());
    return twice / 2;
  }
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < order(); ++u)
      rows_[static_cast<std::size_t>(u)].for_each([&](int v) {
        if (u < v) out.emplace_back(u, v);
      });
    return out;
  }
  VertexSet vertices() const { return VertexSet::full(order()); }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend class GraphBuilder;
  std::vector<VertexSet> rows_;
};

// Mutable staging area for a Graph; build() hands the rows over.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n) : g_(n) {}
  explicit GraphBuilder(Graph g) : g_(std::move(g)) {}

  int order() const noexcept { return g_.order(); }
  bool adjacent(int u, int v) const { return g_.adjacent(u, v); }
  void set_edge(int u, int v, bool present) {
    check(u, v);
    g_.rows_[static_cast<std::size_t>(u)].set(v, present);
    g_.rows_[static_cast<std::size_t>(v)].set(u, present);
  }
  void add_edge(int u, int v) { set_edge(u, v, true); }
  void remove_edge(int u, int v) { set_edge(u, v, false); }
  void toggle(int u, int v) {
    check(u, v);
    g_.rows_[static_cast<std::size_t>(u)].toggle(v);
    g_.rows_[static_cast<std::size_t>(v)].toggle(u);
  }
  const Graph& view() const noexcept { return g_; }
  Graph build() && { return std::move(g_); }

 private:
  void check(int u, int v) const {
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= g_.order() || v >= g_.order())
      throw std::out_of_range("edge {" + std::to_string(u) + "," + std::to_string(v) + "} out of range for n=" +
                              std::to_string(g_.order()));
  }
  Graph g_;
};

inline Graph::Graph(int n, std::initializer_list<std::pair<int, int>> edges)
    : Graph(n, std::vector<std::pair<int, int>>(edges)) {}

inline Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  *this = std::move(b).build();
}

// Induced subgraph together with the map from its ids back to the parent graph.
struct InducedSubgraph {
  Graph graph;
  std::vector<int> to_parent;
};

inline Graph complement(const Graph& g) {
  GraphBuilder b(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) b.add_edge(u, v);
  return std::move(b).build();
}

inline InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    int v = vertices[i];
    if (v < 0 || v >= g.order()) throw std::out_of_range("vertex " + std::to_string(v) + " not in graph");
    if (index[static_cast<std::size_t>(v)] >= 0) throw std::invalid_argument("duplicate vertex " + std::to_string(v));
    index[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  GraphBuilder b(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i)
    g.neighbors(vertices[i]).for_each([&](int w) {
      int j = index[static_cast<std::size_t>(w)];
      if (j > static_cast<int>(i)) b.add_edge(static_cast<int>(i), j);
    });
  return {std::move(b).build(), vertices};
}

inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order()) throw std::out_of_range("vertex set universe does not match graph order");
  return induced_subgraph(g, s.members());
}

// Vertex sets of the connected components of g[within]; ordered by minimum vertex.
inline std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& within) {
  std::vector<VertexSet> comps;
  VertexSet left = within;
  while (!left.empty()) {
    VertexSet comp(g.order());
    VertexSet frontier = VertexSet::singleton(g.order(), left.min());
    while (!frontier.empty()) {
      comp |= frontier;
      left -= frontier;
      VertexSet reach(g.order());
      frontier.for_each([&](int v) { reach |= g.neighbors(v); });
      frontier = reach & left;
    }
    comps.push_back(std::move(comp));
  }
  return comps;
}

inline std::vector<VertexSet> connected_components(const Graph& g) { return connected_components(g, g.vertices()); }

// Components of the complement of g[within], computed without materializing the complement.
inline std::vector<VertexSet> co_components(const Graph& g, const VertexSet& within) {
  std::vector<VertexSet> comps;
  VertexSet left = within;
  while (!left.empty()) {
    VertexSet comp(g.order());
    VertexSet frontier = VertexSet::singleton(g.order(), left.min());
    left -= frontier;
    while (!frontier.empty()) {
      comp |= frontier;
      VertexSet reach(g.order());
      frontier.for_each([&](int v) { reach |= left - g.neighbors(v); });
      left -= reach;
      frontier = std::move(reach);
    }
    comps.push_back(std::move(comp));
  }
  return comps;
}

inline bool is_connected(const Graph& g, const VertexSet& within) {
  return within.empty() || connected_components(g, within).size() == 1;
}

inline Graph apply_edits(const Graph& g, const EditSet& f) {
  GraphBuilder b(g);
  for (const auto& p : f) {
    if (p.second >= g.order() || p.first < 0)
      throw std::out_of_range("edit {" + std::to_string(p.first) + "," + std::to_string(p.second) +
                              "} out of range for n=" + std::to_string(g.order()));
    b.toggle(p.first, p.second);
  }
  return std::move(b).build();
}

// Pairs on which two graphs over the same vertex set differ.
inline EditSet difference(const Graph& g, const Graph& h) {
  if (g.order() != h.order()) throw std::invalid_argument("graphs have different orders");
  std::vector<VertexPair> out;
  for (int u = 0; u < g.order(); ++u) {
    VertexSet d = g.neighbors(u) ^ h.neighbors(u);
    d.for_each([&](int v) {
      if (u < v) out.emplace_back(u, v);
    });
  }
  return EditSet(std::move(out));
}

// Vertices of h are shifted by g.order().
inline Graph disjoint_union(const Graph& g, const Graph& h) {
  const int off = g.order();
  GraphBuilder b(off + h.order());
  for (auto [u, v] : g.edges()) b.add_edge(u, v);
  for (auto [u, v] : h.edges()) b.add_edge(u + off, v + off);
  return std::move(b).build();
}

inline Graph join(const Graph& g, const Graph& h) {
  GraphBuilder b(disjoint_union(g, h));
  for (int u = 0; u < g.order(); ++u)
    for (int v = 0; v < h.order(); ++v) b.add_edge(u, g.order() + v);
  return std::move(b).build();
}

// Relabels vertex v as perm[v].
inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
  GraphBuilder b(g.order());
  for (auto [u, v] : g.edges()) b.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
  return std::move(b).build();
}

namespace graphs {

inline Graph empty(int n) { return Graph(n); }
inline Graph complete(int n) { return complement(Graph(n)); }
inline Graph path(int n) {
  GraphBuilder b(n);
  for (int i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
  return std::move(b).build();
}
inline Graph cycle(int n) {
  GraphBuilder b(path(n));
  if (n >= 3) b.add_edge(0, n - 1);
  return std::move(b).build();
}

}  // namespace graphs

}  // namespace cgedit
