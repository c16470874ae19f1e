#pragma once

// Brute-force reference implementations for tests. Deliberately independent of the library
// algorithms: graphs are uint32 adjacency rows and everything is found by exhaustive search.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "cgedit/graph.hpp"
#include "cgedit/rng.hpp"

namespace oracle {

using Mask = std::uint32_t;

struct Small {
  int n = 0;
  std::vector<Mask> rows;

  explicit Small(int order) : n(order), rows(static_cast<std::size_t>(order), 0) {}
  explicit Small(const cgedit::Graph& g) : Small(g.order()) {
    for (auto [u, v] : g.edges()) add(u, v);
  }
  void add(int u, int v) {
    rows[static_cast<std::size_t>(u)] |= Mask{1} << v;
    rows[static_cast<std::size_t>(v)] |= Mask{1} << u;
  }
  bool adj(int u, int v) const { return (rows[static_cast<std::size_t>(u)] >> v) & 1U; }
  Mask all() const { return n == 32 ? ~Mask{0} : (Mask{1} << n) - 1; }

  cgedit::Graph graph() const {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (adj(u, v)) e.emplace_back(u, v);
    return cgedit::Graph(n, e);
  }
};

inline std::vector<int> bits(Mask m) {
  std::vector<int> out;
  for (; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

inline Mask to_mask(const cgedit::VertexSet& s) {
  Mask m = 0;
  s.for_each([&](int v) { m |= Mask{1} << v; });
  return m;
}

// Labeled graph number `code` on n vertices: bit i of code is the i-th pair in (u,v) order.
inline cgedit::Graph labeled_graph(int n, std::uint64_t code) {
  std::vector<std::pair<int, int>> e;
  int i = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++i)
      if ((code >> i) & 1U) e.emplace_back(u, v);
  return cgedit::Graph(n, e);
}

inline std::uint64_t labeled_count(int n) { return std::uint64_t{1} << (n * (n - 1) / 2); }

inline bool is_module(const Small& g, Mask m) {
  if (m == 0) return false;
  const Mask outside = g.all() & ~m;
  const int first = std::countr_zero(m);
  const Mask ref = g.rows[static_cast<std::size_t>(first)] & outside;
  for (int v : bits(m))
    if ((g.rows[static_cast<std::size_t>(v)] & outside) != ref) return false;
  return true;
}

inline std::vector<Mask> all_modules(const Small& g) {
  std::vector<Mask> out;
  for (std::uint64_t m = 1; m <= g.all(); ++m)
    if (is_module(g, static_cast<Mask>(m))) out.push_back(static_cast<Mask>(m));
  return out;
}

inline bool overlap(Mask a, Mask b) { return (a & b) != 0 && (a & ~b) != 0 && (b & ~a) != 0; }

inline std::vector<Mask> strong_modules(const Small& g) {
  const auto mods = all_modules(g);
  std::vector<Mask> out;
  for (Mask m : mods)
    if (std::none_of(mods.begin(), mods.end(), [&](Mask o) { return overlap(m, o); })) out.push_back(m);
  return out;
}

inline bool connected(const Small& g, Mask s, bool complement = false) {
  if (s == 0) return true;
  Mask seen = s & (~s + 1);
  for (bool grew = true; grew;) {
    grew = false;
    for (int v : bits(seen)) {
      Mask nb = complement ? ~g.rows[static_cast<std::size_t>(v)] & ~(Mask{1} << v) : g.rows[static_cast<std::size_t>(v)];
      Mask add = nb & s & ~seen;
      if (add) {
        seen |= add;
        grew = true;
      }
    }
  }
  return seen == s;
}

inline int edges_within(const Small& g, Mask s) {
  int e = 0;
  for (int v : bits(s)) e += std::popcount(g.rows[static_cast<std::size_t>(v)] & s);
  return e / 2;
}

// Induced P4 by exhaustion over 4-subsets: 3 edges and degree sequence 1,1,2,2.
inline bool has_induced_p4(const Small& g) {
  for (int a = 0; a < g.n; ++a)
    for (int b = a + 1; b < g.n; ++b)
      for (int c = b + 1; c < g.n; ++c)
        for (int d = c + 1; d < g.n; ++d) {
          const Mask s = (Mask{1} << a) | (Mask{1} << b) | (Mask{1} << c) | (Mask{1} << d);
          if (edges_within(g, s) != 3) continue;
          std::vector<int> deg;
          for (int v : bits(s)) deg.push_back(std::popcount(g.rows[static_cast<std::size_t>(v)] & s));
          std::sort(deg.begin(), deg.end());
          if (deg == std::vector<int>{1, 1, 2, 2}) return true;
        }
  return false;
}

inline bool is_induced_p4(const cgedit::Graph& g, const std::array<int, 4>& p) {
  const auto [a, b, c, d] = p;
  std::set<int> distinct{a, b, c, d};
  return distinct.size() == 4 && g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(c, d) && !g.adjacent(a, c) &&
         !g.adjacent(b, d) && !g.adjacent(a, d);
}

// Smallest edge code over relabelings that sort vertices by degree; a complete invariant.
inline std::uint64_t canonical_code(const Small& g) {
  std::vector<int> order(static_cast<std::size_t>(g.n));
  std::iota(order.begin(), order.end(), 0);
  auto deg = [&](int v) { return std::popcount(g.rows[static_cast<std::size_t>(v)]); };
  std::sort(order.begin(), order.end(), [&](int a, int b) { return deg(a) < deg(b); });
  std::vector<std::pair<std::size_t, std::size_t>> classes;
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j < order.size() && deg(order[j]) == deg(order[i])) ++j;
    classes.emplace_back(i, j);
    i = j;
  }
  std::uint64_t best = ~std::uint64_t{0};
  auto code_of = [&](const std::vector<int>& ord) {
    std::uint64_t c = 0;
    int i = 0;
    for (int u = 0; u < g.n; ++u)
      for (int v = u + 1; v < g.n; ++v, ++i)
        if (g.adj(ord[static_cast<std::size_t>(u)], ord[static_cast<std::size_t>(v)])) c |= std::uint64_t{1} << i;
    return c;
  };
  auto rec = [&](auto&& self, std::size_t cls) -> void {
    if (cls == classes.size()) {
      best = std::min(best, code_of(order));
      return;
    }
    auto [lo, hi] = classes[cls];
    std::sort(order.begin() + static_cast<long>(lo), order.begin() + static_cast<long>(hi));
    do self(self, cls + 1);
    while (std::next_permutation(order.begin() + static_cast<long>(lo), order.begin() + static_cast<long>(hi)));
  };
  rec(rec, 0);
  return best;
}

// One representative per isomorphism class, built by extending the classes on n-1 vertices.
inline std::vector<cgedit::Graph> nonisomorphic_graphs(int n) {
  std::vector<Small> reps{Small(1)};
  for (int k = 2; k <= n; ++k) {
    std::set<std::uint64_t> seen;
    std::vector<Small> next;
    for (const auto& r : reps)
      for (Mask nb = 0; nb < (Mask{1} << (k - 1)); ++nb) {
        Small s(k);
        for (int u = 0; u < k - 1; ++u)
          for (int v = u + 1; v < k - 1; ++v)
            if (r.adj(u, v)) s.add(u, v);
        for (int u : bits(nb)) s.add(u, k - 1);
        if (seen.insert(canonical_code(s)).second) next.push_back(s);
      }
    reps = std::move(next);
  }
  std::vector<cgedit::Graph> out;
  for (const auto& r : reps) out.push_back(r.graph());
  return out;
}

inline cgedit::Graph random_graph(int n, double p, cgedit::Rng& rng) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) e.emplace_back(u, v);
  return cgedit::Graph(n, e);
}

// Graph with every module of g checked against h, by enumeration.
inline bool preserves_all_modules(const cgedit::Graph& g, const cgedit::Graph& h) {
  const Small sg(g), sh(h);
  for (Mask m : all_modules(sg))
    if (!is_module(sh, m)) return false;
  return true;
}

}  // namespace oracle
