#pragma once

#include <array>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "cgedit/errors.hpp"
#include "cgedit/graph.hpp"
#include "cgedit/modules.hpp"

namespace cgedit {

using P4 = std::array<int, 4>;

// Induced path a-b-c-d inside g[within], oriented so that a < d. Scans middle edges b-c in
// lexicographic order and returns the first hit.
inline std::optional<P4> find_p4(const Graph& g, const VertexSet& within) {
  std::optional<P4> found;
  within.for_each([&](int b) {
    if (found) return;
    VertexSet cs = g.neighbors(b) & within;
    cs.for_each([&](int c) {
      if (found || c < b) return;
      for (auto [x, y] : {std::pair{b, c}, std::pair{c, b}}) {
        // a hangs off x, d hangs off y
        VertexSet as = (g.neighbors(x) & within) - g.neighbors(y);
        as.erase(y);
        VertexSet ds = (g.neighbors(y) & within) - g.neighbors(x);
        ds.erase(x);
        as.for_each([&](int a) {
          if (found) return;
          VertexSet d = ds - g.neighbors(a);
          if (d.empty()) return;
          int dv = d.min();
          found = a < dv ? P4{a, x, y, dv} : P4{dv, y, x, a};
        });
        if (found) return;
      }
    });
  });
  return found;
}

inline std::optional<P4> find_p4(const Graph& g) { return find_p4(g, g.vertices()); }

namespace detail {

inline bool is_cograph_within(const Graph& g, const VertexSet& s) {
  if (s.size() <= 3) return true;  // every graph on <= 3 vertices is P4-free
  auto comps = connected_components(g, s);
  if (comps.size() == 1) comps = co_components(g, s);
  if (comps.size() == 1) return false;
  for (const auto& c : comps)
    if (!is_cograph_within(g, c)) return false;
  return true;
}

}  // namespace detail

// Cograph test by recursive (co-)component splitting: a cograph never has a connected induced
// subgraph on >= 2 vertices whose complement is also connected.
inline bool is_cograph(const Graph& g) { return detail::is_cograph_within(g, g.vertices()); }

// MD tree of a cograph: inner labels only parallel/series.
class Cotree {
 public:
  // Validates that t has no prime node and labels alternate along every edge.
  static Cotree from_tree(MDTree t) {
    for (const auto& nd : t.nodes()) {
      if (nd.label == NodeLabel::prime) throw std::invalid_argument("cotree contains a prime node");
      if (nd.parent != MDNode::npos && nd.label != NodeLabel::leaf && t.node(nd.parent).label == nd.label)
        throw std::invalid_argument("cotree labels do not alternate");
    }
    Cotree c;
    c.tree_ = std::move(t);
    return c;
  }

  const MDTree& tree() const noexcept { return tree_; }
  int order() const noexcept { return tree_.order(); }

 private:
  MDTree tree_;
};

namespace detail {

inline void build_cotree(const Graph& g, const VertexSet& s, std::size_t self, std::vector<MDNode>& nodes) {
  if (s.size() == 1) return;
  auto comps = connected_components(g, s);
  NodeLabel label = NodeLabel::parallel;
  if (comps.size() == 1) {
    comps = co_components(g, s);
    label = NodeLabel::series;
  }
  if (comps.size() == 1) throw not_a_cograph(*find_p4(g, s));
  nodes[self].label = label;
  for (auto& c : comps) {
    std::size_t idx = nodes.size();
    nodes[self].children.push_back(idx);
    nodes.push_back({c, NodeLabel::leaf, {}, self});
    build_cotree(g, c, idx, nodes);
  }
}

}  // namespace detail

// Builds the cotree directly from (co-)components; throws not_a_cograph with a P4 otherwise.
inline Cotree cotree(const Graph& g) {
  if (g.order() < 1) throw std::invalid_argument("cotree: empty graph");
  std::vector<MDNode> nodes;
  nodes.push_back({g.vertices(), NodeLabel::leaf, {}, MDNode::npos});
  detail::build_cotree(g, g.vertices(), 0, nodes);
  return Cotree::from_tree(MDTree::from_nodes(g.order(), std::move(nodes)));
}

// Edge xy iff lca(x,y) is a series node.
inline Graph cotree_to_graph(const Cotree& t) {
  const MDTree& tr = t.tree();
  GraphBuilder b(tr.order());
  for (const auto& nd : tr.nodes()) {
    if (nd.label != NodeLabel::series) continue;
    for (std::size_t i = 0; i < nd.children.size(); ++i)
      for (std::size_t j = i + 1; j < nd.children.size(); ++j)
        tr.node(nd.children[i]).vertices.for_each([&](int x) {
          tr.node(nd.children[j]).vertices.for_each([&](int y) { b.add_edge(x, y); });
        });
  }
  return std::move(b).build();
}

// Rooted triple xy|z with x < y.
struct Triple {
  int x = 0;
  int y = 0;
  int z = 0;

  Triple() = default;
  Triple(int a, int b, int out) : x(std::min(a, b)), y(std::max(a, b)), z(out) {
    if (a == b || a == out || b == out) throw std::invalid_argument("triple needs three distinct vertices");
  }
  friend auto operator<=>(const Triple&, const Triple&) = default;
};

// R(G): xy|z whenever z sees both of x,y and xy is a non-edge, or z sees neither and xy is an edge.
inline std::set<Triple> triple_set(const Graph& g) {
  std::set<Triple> out;
  const int n = g.order();
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        if (z == x || z == y) continue;
        bool xz = g.adjacent(x, z), yz = g.adjacent(y, z), xy = g.adjacent(x, y);
        if ((xz && yz && !xy) || (!xz && !yz && xy)) out.emplace(x, y, z);
      }
  return out;
}

// lca(x,y) is a strict descendant of lca(x,z) = lca(y,z).
inline bool displays(const MDTree& t, const Triple& r) {
  auto xy = t.lca_of_vertices(r.x, r.y);
  auto xz = t.lca_of_vertices(r.x, r.z);
  auto yz = t.lca_of_vertices(r.y, r.z);
  return xz == yz && xy != xz && t.depth(xy) > t.depth(xz);
}

inline bool displays(const Cotree& t, const Triple& r) { return displays(t.tree(), r); }

}  // namespace cgedit
