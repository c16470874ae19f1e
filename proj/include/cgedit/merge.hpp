#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cgedit/cograph.hpp"
#include "cgedit/errors.hpp"
#include "cgedit/graph.hpp"
#include "cgedit/modules.hpp"

namespace cgedit {

// M_1 ⊞ ... ⊞ M_k -> M: disjoint parts and their union.
struct MergeSpec {
  std::vector<VertexSet> parts;
  VertexSet target;

  explicit MergeSpec(std::vector<VertexSet> ps) : parts(std::move(ps)) {
    if (parts.size() < 2) throw std::invalid_argument("merge needs at least two parts");
    target = VertexSet(parts.front().universe());
    for (const auto& p : parts) {
      if (p.empty()) throw std::invalid_argument("merge part is empty");
      if (target.intersects(p)) throw std::invalid_argument("merge parts overlap");
      target |= p;
    }
  }
};

// Module merge w.r.t. h: every part is a module of g and of h, the union is a module of h and
// not a module of g.
inline bool validate_merge(const Graph& g, const Graph& h, const MergeSpec& spec) {
  if (g.order() != h.order()) throw std::invalid_argument("validate_merge: graphs on different vertex sets");
  if (spec.target.universe() != g.order()) throw std::invalid_argument("validate_merge: universe mismatch");
  for (const auto& p : spec.parts)
    if (!is_module(g, p) || !is_module(h, p)) return false;
  return is_module(h, spec.target) && !is_module(g, spec.target);
}

// F_{H'}(⊞ M_i -> M): the edits of f with one end in target and the other in host \ target.
inline EditSet merge_edit_set(const EditSet& f, const VertexSet& host, const VertexSet& target) {
  if (!target.is_subset_of(host)) throw std::invalid_argument("merge_edit_set: target not inside host");
  const VertexSet outside = host - target;
  return f.filter([&](const VertexPair& p) {
    return (target.contains(p.first) && outside.contains(p.second)) ||
           (target.contains(p.second) && outside.contains(p.first));
  });
}

struct ModulePreservation {
  bool preserved = true;
  std::optional<VertexSet> witness;  // a module of g that is not a module of g △ f

  explicit operator bool() const noexcept { return preserved; }
};

namespace detail {

// Exhaustive over MD(g) via T3: strong modules plus unions of children of non-prime nodes. The
// unions are all modules of h iff each child is a module of h and, for three or more children,
// the quotient of h over them is complete or edgeless.
inline ModulePreservation check_module_preserving_tree(const MDTree& tg, const Graph& h) {
  for (const auto& nd : tg.nodes())
    if (!is_module(h, nd.vertices)) return {false, nd.vertices};
  for (const auto& nd : tg.nodes()) {
    if (nd.label == NodeLabel::prime || nd.label == NodeLabel::leaf || nd.children.size() < 3) continue;
    // A vertex of one child must see all other children alike, else it splits their union.
    for (auto c : nd.children) {
      const int z = tg.node(c).vertices.min();
      std::optional<std::size_t> first;
      for (auto d : nd.children) {
        if (d == c) continue;
        if (!first) {
          first = d;
          continue;
        }
        if (h.adjacent(z, tg.node(*first).vertices.min()) != h.adjacent(z, tg.node(d).vertices.min()))
          return {false, tg.node(*first).vertices | tg.node(d).vertices};
      }
    }
  }
  return {};
}

}  // namespace detail

// Every module of g remains a module of g △ f. Up to brute_force_bound vertices MD(g) is enumerated
// outright; above it the decomposition tree is used.
inline ModulePreservation check_module_preserving(const Graph& g, const EditSet& f, int brute_force_bound = 12) {
  const Graph h = apply_edits(g, f);
  if (g.order() <= brute_force_bound) {
    for (const auto& m : enumerate_all_modules(g, brute_force_bound))
      if (!is_module(h, m)) return {false, m};
    return {};
  }
  return detail::check_module_preserving_tree(modular_decomposition_tree(g), h);
}

// A strong module M* of h that is not a module of g, with its host P_{M*} and slice σ.
struct NewModule {
  VertexSet module;
  VertexSet host;
  EditSet sigma;
};

struct SigmaDecomposition {
  std::vector<NewModule> modules;
  EditSet residual;  // edits of f outside every σ; empty for optimal module-preserving f
};

enum class Optimality { unknown, optimal };

namespace detail {

struct MergeContext {
  Graph g;
  Graph h;
  MDTree tg;
  MDTree th;
};

inline MergeContext make_merge_context(const Graph& g, const EditSet& f) {
  MergeContext ctx{g, apply_edits(g, f), {}, {}};
  if (auto p4 = find_p4(ctx.h)) throw not_a_cograph(*p4);
  ctx.tg = modular_decomposition_tree(g);
  if (auto mp = check_module_preserving_tree(ctx.tg, ctx.h); !mp) throw not_module_preserving(mp.witness->to_string());
  ctx.th = modular_decomposition_tree(ctx.h);
  return ctx;
}

// Size ascending, then minimum vertex: a total order refining inclusion.
inline bool merge_order_less(const VertexSet& a, const VertexSet& b) {
  int sa = a.size(), sb = b.size();
  if (sa != sb) return sa < sb;
  return min_vertex_less(a, b);
}

// New strong modules of h with their inclusion-minimal prime host in g.
inline std::vector<std::pair<VertexSet, std::size_t>> new_strong_modules(const MergeContext& ctx) {
  std::vector<std::pair<VertexSet, std::size_t>> out;
  for (const auto& nd : ctx.th.nodes()) {
    if (is_module(ctx.g, nd.vertices)) continue;
    std::size_t host = ctx.tg.smallest_containing(nd.vertices);
    if (ctx.tg.node(host).label != NodeLabel::prime)
      throw std::logic_error("new strong module {" + nd.vertices.to_string() + "} has a non-prime minimal host");
    out.emplace_back(nd.vertices, host);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return merge_order_less(a.first, b.first); });
  return out;
}

inline std::vector<VertexSet> x_partition(const MergeContext& ctx, const VertexSet& m_star, std::size_t host) {
  auto h_node = ctx.th.find(m_star);
  if (!h_node) throw std::invalid_argument("x_partition: {" + m_star.to_string() + "} is not a strong module of h");
  std::vector<VertexSet> contributing;  // C(M*)
  for (const auto& c : ctx.tg.child_sets(host))
    if (c.is_subset_of(m_star)) contributing.push_back(c);
  const auto h_children = ctx.th.child_sets(*h_node);

  std::vector<VertexSet> x;
  for (const auto& t : h_children)
    if (std::any_of(contributing.begin(), contributing.end(), [&](const VertexSet& c) { return c.is_subset_of(t); }))
      x.push_back(t);
  for (const auto& c : contributing)
    if (std::any_of(h_children.begin(), h_children.end(), [&](const VertexSet& t) { return t.is_subset_of(c); }) &&
        std::find(x.begin(), x.end(), c) == x.end())
      x.push_back(c);
  std::sort(x.begin(), x.end(), min_vertex_less);

  VertexSet cover(m_star.universe());
  for (const auto& b : x) {
    if (cover.intersects(b)) throw std::logic_error("X(M*) blocks overlap");
    cover |= b;
  }
  if (cover != m_star) throw std::logic_error("X(M*) does not partition {" + m_star.to_string() + "}");
  return x;
}

}  // namespace detail

// Orders the new strong modules M*_1..M*_n of h = g △ f and slices f into σ_i = F_{M*_i} minus
// every earlier F_{M*_j}.
inline SigmaDecomposition sigma_decomposition(const Graph& g, const EditSet& f,
                                              Optimality optimality = Optimality::unknown) {
  const auto ctx = detail::make_merge_context(g, f);
  SigmaDecomposition out;
  EditSet used;
  for (auto& [m, host] : detail::new_strong_modules(ctx)) {
    const VertexSet& p = ctx.tg.node(host).vertices;
    EditSet fm = merge_edit_set(f, p, m);
    out.modules.push_back({m, p, fm.set_difference(used)});
    used = used.set_union(fm);
  }
  out.residual = f.set_difference(used);
  if (optimality == Optimality::optimal && !out.residual.empty())
    throw std::invalid_argument("edit set flagged optimal has edits outside every module merge");
  return out;
}

// X(M*): maximal blocks among the children of M* in h and the children of P_{M*} inside M*.
inline std::vector<VertexSet> x_partition(const Graph& g, const Graph& h, const VertexSet& m_star) {
  if (is_module(g, m_star)) throw std::invalid_argument("x_partition: {" + m_star.to_string() + "} is a module of g");
  const auto ctx = detail::make_merge_context(g, difference(g, h));
  if (!ctx.th.find(m_star)) throw std::invalid_argument("x_partition: {" + m_star.to_string() + "} is not strong in h");
  std::size_t host = ctx.tg.smallest_containing(m_star);
  return detail::x_partition(ctx, m_star, host);
}

// One pairwise merge left ⊞ right -> result, realized by the edits theta inside host.
struct MergeStep {
  VertexSet left;
  VertexSet right;
  VertexSet result;
  VertexSet host;
  EditSet theta;
};

struct MergeTrace {
  std::vector<MergeStep> steps;
  std::vector<Graph> intermediates;  // G'_0 = g, ..., G'_m when requested
  EditSet residual;                  // edits not realized by any merge step

  EditSet edits() const {
    EditSet all = residual;
    for (const auto& s : steps) all = all.set_union(s.theta);
    return all;
  }
};

struct MergeOptions {
  Optimality optimality = Optimality::unknown;
  bool keep_intermediates = false;
};

// Pairwise merge sequence N*_1..N*_m: each new strong module M*_i is assembled from its X(M*_i)
// blocks one at a time, spending only the edits not used by earlier steps.
inline MergeTrace pairwise_merge_sequence(const Graph& g, const EditSet& f, MergeOptions opts = {}) {
  const auto ctx = detail::make_merge_context(g, f);
  MergeTrace trace;
  GraphBuilder current(g);
  if (opts.keep_intermediates) trace.intermediates.push_back(g);
  EditSet used;
  for (auto& [m_star, host] : detail::new_strong_modules(ctx)) {
    const VertexSet& p = ctx.tg.node(host).vertices;
    auto blocks = detail::x_partition(ctx, m_star, host);
    VertexSet acc = blocks.front();
    for (std::size_t j = 1; j < blocks.size(); ++j) {
      MergeStep step{acc, blocks[j], acc | blocks[j], p, {}};
      if (!is_module(current.view(), step.result)) {
        step.theta = merge_edit_set(f, p, step.result).set_difference(used);
        for (const auto& e : step.theta) current.toggle(e.first, e.second);
        used = used.set_union(step.theta);
      }
      acc = step.result;
      if (opts.keep_intermediates) trace.intermediates.push_back(current.view());
      trace.steps.push_back(std::move(step));
    }
  }
  trace.residual = f.set_difference(used);
  if (opts.optimality == Optimality::optimal && !trace.residual.empty())
    throw std::invalid_argument("edit set flagged optimal is not covered by pairwise merges");
  return trace;
}

}  // namespace cgedit
