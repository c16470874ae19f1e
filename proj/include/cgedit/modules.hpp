#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cgedit/errors.hpp"
#include "cgedit/graph.hpp"
#include "cgedit/vertex_set.hpp"

namespace cgedit {

// True iff every member of m sees the same neighbors outside m.
inline bool is_module(const Graph& g, const VertexSet& m) {
  if (m.empty()) throw std::invalid_argument("is_module: empty vertex set");
  if (m.universe() != g.order()) throw std::out_of_range("is_module: universe mismatch");
  const int rep = m.min();
  const VertexSet outside_rep = g.neighbors(rep) - m;
  bool ok = true;
  m.for_each([&](int x) {
    if (ok && x != rep) ok = (g.neighbors(x) - m) == outside_rep;
  });
  return ok;
}

// Brute-force MD(G): every nonempty vertex subset that is a module.
inline std::vector<VertexSet> enumerate_all_modules(const Graph& g, int max_order = 16) {
  const int n = g.order();
  if (n > max_order)
    throw search_limit_exceeded("enumerate_all_modules: n=" + std::to_string(n) + " exceeds bound " +
                                std::to_string(max_order));
  std::vector<VertexSet> out;
  for (unsigned long mask = 1; mask < (1UL << n); ++mask) {
    VertexSet s(n);
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1UL) s.insert(v);
    if (is_module(g, s)) out.push_back(std::move(s));
  }
  return out;
}

enum class NodeLabel { leaf, parallel, series, prime };

inline const char* to_string(NodeLabel l) {
  switch (l) {
    case NodeLabel::leaf: return "leaf";
    case NodeLabel::parallel: return "parallel";
    case NodeLabel::series: return "series";
    case NodeLabel::prime: return "prime";
  }
  return "?";
}

struct MDNode {
  VertexSet vertices;
  NodeLabel label = NodeLabel::leaf;
  std::vector<std::size_t> children;  // sorted by minimum vertex id
  std::size_t parent = npos;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

// Rooted tree of strong modules stored as an arena; node 0 is the root.
class MDTree {
 public:
  MDTree() = default;

  // Builds a tree from an arena, checking the structural invariants: every vertex is exactly one
  // leaf, children partition their parent, inner nodes have at least two children.
  static MDTree from_nodes(int order, std::vector<MDNode> nodes) {
    MDTree t;
    t.order_ = order;
    t.nodes_ = std::move(nodes);
    t.index();
    t.check_structure();
    return t;
  }

  int order() const noexcept { return order_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  std::size_t root() const noexcept { return 0; }
  const MDNode& node(std::size_t i) const { return nodes_.at(i); }
  const std::vector<MDNode>& nodes() const noexcept { return nodes_; }
  std::size_t leaf_of(int v) const { return leaf_.at(static_cast<std::size_t>(v)); }
  int depth(std::size_t i) const { return depth_.at(i); }

  std::size_t lca(std::size_t a, std::size_t b) const {
    while (depth_[a] > depth_[b]) a = nodes_[a].parent;
    while (depth_[b] > depth_[a]) b = nodes_[b].parent;
    while (a != b) {
      a = nodes_[a].parent;
      b = nodes_[b].parent;
    }
    return a;
  }
  std::size_t lca_of_vertices(int x, int y) const { return lca(leaf_of(x), leaf_of(y)); }

  // Node whose vertex set equals s, if any.
  std::optional<std::size_t> find(const VertexSet& s) const {
    if (s.empty()) return std::nullopt;
    std::size_t cur = smallest_containing(s);
    if (nodes_[cur].vertices == s) return cur;
    return std::nullopt;
  }

  // Inclusion-minimal node whose vertex set contains s (s nonempty).
  std::size_t smallest_containing(const VertexSet& s) const {
    std::size_t cur = leaf_of(s.min());
    while (!s.is_subset_of(nodes_[cur].vertices)) cur = nodes_[cur].parent;
    return cur;
  }

  // Children sets of node i, in stored order.
  std::vector<VertexSet> child_sets(std::size_t i) const {
    std::vector<VertexSet> out;
    for (auto c : nodes_.at(i).children) out.push_back(nodes_[c].vertices);
    return out;
  }

  // Nodes in an order where every node follows all its descendants.
  // Same vertex sets, labels and shape; arena numbering is ignored.
  friend bool operator==(const MDTree& a, const MDTree& b) {
    if (a.order_ != b.order_ || a.nodes_.size() != b.nodes_.size()) return false;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{0, 0}};
    while (!stack.empty()) {
      auto [x, y] = stack.back();
      stack.pop_back();
      const auto &nx = a.nodes_[x], &ny = b.nodes_[y];
      if (nx.vertices != ny.vertices || nx.label != ny.label || nx.children.size() != ny.children.size()) return false;
      for (std::size_t c = 0; c < nx.children.size(); ++c) stack.emplace_back(nx.children[c], ny.children[c]);
    }
    return true;
  }

  std::vector<std::size_t> post_order() const {
    std::vector<std::size_t> out, stack{0};
    while (!stack.empty()) {
      auto i = stack.back();
      stack.pop_back();
      out.push_back(i);
      for (auto c : nodes_[i].children) stack.push_back(c);
    }
    std::reverse(out.begin(), out.end());
    return out;
  }

 private:
  void index() {
    leaf_.assign(static_cast<std::size_t>(order_), MDNode::npos);
    depth_.assign(nodes_.size(), 0);
    if (nodes_.empty()) throw std::invalid_argument("MD tree without nodes");
    nodes_[0].parent = MDNode::npos;
    std::vector<std::size_t> stack{0};
    std::vector<bool> seen(nodes_.size(), false);
    seen[0] = true;
    while (!stack.empty()) {
      auto i = stack.back();
      stack.pop_back();
      for (auto c : nodes_[i].children) {
        if (c >= nodes_.size() || seen[c]) throw std::invalid_argument("MD tree arena is not a tree");
        seen[c] = true;
        nodes_[c].parent = i;
        depth_[c] = depth_[i] + 1;
        stack.push_back(c);
      }
      if (nodes_[i].children.empty()) {
        if (nodes_[i].vertices.size() != 1) throw std::invalid_argument("leaf with more than one vertex");
        auto v = static_cast<std::size_t>(nodes_[i].vertices.min());
        if (leaf_[v] != MDNode::npos) throw std::invalid_argument("vertex appears in two leaves");
        leaf_[v] = i;
      }
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end())
      throw std::invalid_argument("MD tree arena has unreachable nodes");
    if (std::find(leaf_.begin(), leaf_.end(), MDNode::npos) != leaf_.end())
      throw std::invalid_argument("MD tree misses a vertex");
  }
  void check_structure() const {
    for (const auto& nd : nodes_) {
      if (nd.vertices.universe() != order_) throw std::invalid_argument("node universe mismatch");
      if (nd.children.empty()) {
        if (nd.label != NodeLabel::leaf) throw std::invalid_argument("leaf node with inner label");
        continue;
      }
      if (nd.label == NodeLabel::leaf) throw std::invalid_argument("inner node labeled leaf");
      if (nd.children.size() < 2) throw std::invalid_argument("inner node with a single child");
      VertexSet u(order_);
      for (auto c : nd.children) {
        if (u.intersects(nodes_[c].vertices)) throw std::invalid_argument("children overlap");
        u |= nodes_[c].vertices;
      }
      if (u != nd.vertices) throw std::invalid_argument("children do not partition their parent");
    }
    if (nodes_[0].vertices != VertexSet::full(order_)) throw std::invalid_argument("root is not the full vertex set");
  }

  int order_ = 0;
  std::vector<MDNode> nodes_;
  std::vector<std::size_t> leaf_;
  std::vector<int> depth_;
};

using ModularPartition = std::vector<VertexSet>;

namespace detail {

// Smallest module of g[within] containing seed.
inline VertexSet module_closure(const Graph& g, const VertexSet& within, const VertexSet& seed) {
  const int rep = seed.min();
  VertexSet m = seed;
  std::vector<int> queue = seed.members();
  while (!queue.empty()) {
    int a = queue.back();
    queue.pop_back();
    if (a == rep) continue;
    VertexSet split = (g.neighbors(a) ^ g.neighbors(rep)) & within;
    split -= m;
    split.for_each([&](int w) {
      m.insert(w);
      queue.push_back(w);
    });
  }
  return m;
}

// Maximal modules of g[within] not containing v: refine within \ {v} until no vertex splits a part.
inline std::vector<VertexSet> maximal_modules_avoiding(const Graph& g, const VertexSet& within, int v) {
  std::vector<VertexSet> parts;
  VertexSet rest = within;
  rest.erase(v);
  VertexSet near = rest & g.neighbors(v);
  VertexSet far = rest - g.neighbors(v);
  if (!near.empty()) parts.push_back(std::move(near));
  if (!far.empty()) parts.push_back(std::move(far));
  for (bool changed = true; changed;) {
    changed = false;
    rest.for_each([&](int x) {
      const VertexSet& nx = g.neighbors(x);
      const std::size_t count = parts.size();
      for (std::size_t i = 0; i < count; ++i) {
        if (parts[i].contains(x) || parts[i].size() < 2) continue;
        VertexSet in = parts[i] & nx;
        if (in.empty() || in == parts[i]) continue;
        parts[i] -= in;
        parts.push_back(std::move(in));
        changed = true;
      }
    });
  }
  return parts;
}

struct Split {
  NodeLabel label;
  std::vector<VertexSet> blocks;
};

// P_max(g[within]) with the node label, for |within| >= 2.
inline Split maximal_partition_within(const Graph& g, const VertexSet& within) {
  auto comps = connected_components(g, within);
  if (comps.size() > 1) return {NodeLabel::parallel, std::move(comps)};
  auto cocomps = co_components(g, within);
  if (cocomps.size() > 1) {
    std::sort(cocomps.begin(), cocomps.end(), min_vertex_less);
    return {NodeLabel::series, std::move(cocomps)};
  }
  // Prime: the block of v collects every part whose closure with v stays proper; every other
  // maximal module avoiding v is itself a maximal strong module.
  const int v = within.min();
  std::vector<VertexSet> blocks;
  VertexSet own = VertexSet::singleton(g.order(), v);
  for (auto& part : maximal_modules_avoiding(g, within, v)) {
    VertexSet seed = VertexSet::singleton(g.order(), v);
    seed.insert(part.min());
    if (module_closure(g, within, seed) != within)
      own |= part;
    else
      blocks.push_back(std::move(part));
  }
  blocks.push_back(std::move(own));
  std::sort(blocks.begin(), blocks.end(), min_vertex_less);
  return {NodeLabel::prime, std::move(blocks)};
}

}  // namespace detail

inline ModularPartition maximal_modular_partition(const Graph& g) {
  if (g.order() < 2) throw std::invalid_argument("maximal_modular_partition: needs at least two vertices");
  return detail::maximal_partition_within(g, g.vertices()).blocks;
}

// Modular decomposition tree by the recursive P_max scheme. Children sorted by minimum vertex.
inline MDTree modular_decomposition_tree(const Graph& g) {
  if (g.order() < 1) throw std::invalid_argument("modular_decomposition_tree: empty graph");
  std::vector<MDNode> nodes;
  nodes.push_back({g.vertices(), NodeLabel::leaf, {}, MDNode::npos});
  std::vector<std::size_t> work{0};
  while (!work.empty()) {
    auto i = work.back();
    work.pop_back();
    if (nodes[i].vertices.size() == 1) continue;
    auto split = detail::maximal_partition_within(g, nodes[i].vertices);
    nodes[i].label = split.label;
    for (auto& b : split.blocks) {
      nodes[i].children.push_back(nodes.size());
      work.push_back(nodes.size());
      nodes.push_back({std::move(b), NodeLabel::leaf, {}, i});
    }
  }
  return MDTree::from_nodes(g.order(), std::move(nodes));
}

// Result of collapsing each block of a modular partition to a single vertex.
struct QuotientGraph {
  Graph graph;
  std::vector<VertexSet> blocks;
  std::vector<int> block_of;  // vertex -> block index
};

inline QuotientGraph quotient(const Graph& g, const ModularPartition& p) {
  QuotientGraph q;
  q.blocks = p;
  q.block_of.assign(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i].empty() || !is_module(g, p[i]))
      throw std::invalid_argument("quotient: block {" + p[i].to_string() + "} is not a module");
    p[i].for_each([&](int v) {
      if (q.block_of[static_cast<std::size_t>(v)] >= 0)
        throw std::invalid_argument("quotient: blocks overlap at vertex " + std::to_string(v));
      q.block_of[static_cast<std::size_t>(v)] = static_cast<int>(i);
    });
  }
  if (std::find(q.block_of.begin(), q.block_of.end(), -1) != q.block_of.end())
    throw std::invalid_argument("quotient: blocks do not cover the vertex set");
  GraphBuilder b(static_cast<int>(p.size()));
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (g.adjacent(p[i].min(), p[j].min())) b.add_edge(static_cast<int>(i), static_cast<int>(j));
  q.graph = std::move(b).build();
  return q;
}

inline std::vector<VertexSet> strong_modules(const MDTree& t) {
  std::vector<VertexSet> out;
  for (const auto& nd : t.nodes()) out.push_back(nd.vertices);
  std::sort(out.begin(), out.end());
  return out;
}

// Prime nodes ordered so that descendants precede ancestors.
inline std::vector<std::size_t> prime_nodes_bottom_up(const MDTree& t) {
  std::vector<std::size_t> out;
  for (auto i : t.post_order())
    if (t.node(i).label == NodeLabel::prime) out.push_back(i);
  return out;
}

}  // namespace cgedit
