#pragma once

#include <charconv>
#include <cstddef>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "cgedit/cograph.hpp"
#include "cgedit/errors.hpp"
#include "cgedit/graph.hpp"
#include "cgedit/merge.hpp"
#include "cgedit/modules.hpp"

namespace cgedit {

namespace detail {

struct Line {
  std::size_t number;
  std::string_view text;
};

inline std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

// Non-blank lines that are not '#' comments, with 1-based line numbers.
inline std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  for (std::size_t number = 1;; ++number) {
    const auto nl = text.find('\n');
    const auto line = trim(text.substr(0, nl));
    if (!line.empty() && line.front() != '#') out.push_back({number, line});
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return out;
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  while (true) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string_view::npos) break;
    s.remove_prefix(b);
    const auto e = s.find_first_of(" \t");
    out.push_back(s.substr(0, e));
    if (e == std::string_view::npos) break;
    s.remove_prefix(e);
  }
  return out;
}

inline std::optional<long long> to_int(std::string_view s) {
  long long v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) return std::nullopt;
  return v;
}

inline VertexSet parse_set(std::string_view s, int n, std::size_t line) {
  VertexSet out(n);
  while (!s.empty()) {
    const auto c = s.find(',');
    auto v = to_int(s.substr(0, c));
    if (!v || *v < 0 || *v >= n) throw parse_error(line, "bad vertex '" + std::string(s.substr(0, c)) + "'");
    out.insert(static_cast<int>(*v));
    if (c == std::string_view::npos) break;
    s.remove_prefix(c + 1);
  }
  if (out.empty()) throw parse_error(line, "empty vertex set");
  return out;
}

}  // namespace detail

// Graph document: a header "n m", then m lines "u v". Blank lines and '#' comments are ignored.
inline Graph parse_graph(std::string_view text) {
  const auto lines = detail::content_lines(text);
  if (lines.empty()) throw parse_error(1, "missing header");
  const auto head = detail::split_ws(lines[0].text);
  std::optional<long long> n, m;
  if (head.size() == 2) {
    n = detail::to_int(head[0]);
    m = detail::to_int(head[1]);
  }
  if (!n || !m || *n < 0 || *m < 0) throw parse_error(lines[0].number, "malformed header, expected 'n m'");
  if (*n == 0) throw parse_error(lines[0].number, "graph must have at least one vertex");
  if (*n > 1'000'000) throw parse_error(lines[0].number, "vertex count too large");
  GraphBuilder b(static_cast<int>(*n));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& ln = lines[i];
    const auto f = detail::split_ws(ln.text);
    std::optional<long long> u, v;
    if (f.size() == 2) {
      u = detail::to_int(f[0]);
      v = detail::to_int(f[1]);
    }
    if (!u || !v) throw parse_error(ln.number, "malformed edge line, expected 'u v'");
    if (*u < 0 || *u >= *n || *v < 0 || *v >= *n) throw parse_error(ln.number, "endpoint out of range");
    if (*u == *v) throw parse_error(ln.number, "self-loop at vertex " + std::to_string(*u));
    if (b.adjacent(static_cast<int>(*u), static_cast<int>(*v)))
      throw parse_error(ln.number, "duplicate edge " + std::to_string(*u) + " " + std::to_string(*v));
    b.add_edge(static_cast<int>(*u), static_cast<int>(*v));
  }
  if (static_cast<long long>(lines.size() - 1) != *m)
    throw parse_error(lines.back().number, "header announces " + std::to_string(*m) + " edges, found " +
                                               std::to_string(lines.size() - 1));
  return std::move(b).build();
}

inline std::string serialize_graph(const Graph& g) {
  std::ostringstream os;
  os << g.order() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

// One pair "x y" per line, sorted.
inline std::string serialize_edit_set(const EditSet& f) {
  std::ostringstream os;
  for (const auto& p : f) os << p.first << ' ' << p.second << '\n';
  return os.str();
}

// n bounds the endpoints when given.
inline EditSet parse_edit_set(std::string_view text, std::optional<int> n = std::nullopt) {
  std::vector<VertexPair> pairs;
  std::set<VertexPair> seen;
  for (const auto& ln : detail::content_lines(text)) {
    const auto f = detail::split_ws(ln.text);
    std::optional<long long> u, v;
    if (f.size() == 2) {
      u = detail::to_int(f[0]);
      v = detail::to_int(f[1]);
    }
    if (!u || !v || *u < 0 || *v < 0 || *u > 1'000'000 || *v > 1'000'000)
      throw parse_error(ln.number, "malformed pair line, expected 'x y'");
    if (n && (*u >= *n || *v >= *n)) throw parse_error(ln.number, "endpoint out of range");
    if (*u == *v) throw parse_error(ln.number, "pair with identical endpoints");
    VertexPair p(static_cast<int>(*u), static_cast<int>(*v));
    if (!seen.insert(p).second) throw parse_error(ln.number, "duplicate pair");
    pairs.push_back(p);
  }
  return EditSet(std::move(pairs));
}

// Nested parentheses: S(...) series, P(...) parallel, PR(...) prime, leaves as vertex ids.
inline std::string serialize_mdtree(const MDTree& t) {
  std::string out;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    const auto& nd = t.node(i);
    if (nd.label == NodeLabel::leaf) {
      out += std::to_string(nd.vertices.min());
      return;
    }
    out += nd.label == NodeLabel::series ? "S(" : nd.label == NodeLabel::parallel ? "P(" : "PR(";
    for (std::size_t c = 0; c < nd.children.size(); ++c) {
      if (c) out += ',';
      self(self, nd.children[c]);
    }
    out += ')';
  };
  rec(rec, t.root());
  return out;
}

inline std::string serialize_cotree(const Cotree& t) { return serialize_mdtree(t.tree()); }

inline MDTree parse_mdtree(std::string_view text) {
  struct Raw {
    NodeLabel label;
    int leaf = -1;
    std::vector<std::size_t> children;
  };
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t' && c != '\n' && c != '\r') s += c;
  std::vector<Raw> raw;
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) -> parse_error {
    return parse_error(1, what + " at offset " + std::to_string(pos));
  };
  auto rec = [&](auto&& self) -> std::size_t {
    if (pos < s.size() && (s[pos] >= '0' && s[pos] <= '9')) {
      std::size_t e = pos;
      while (e < s.size() && s[e] >= '0' && s[e] <= '9') ++e;
      auto v = detail::to_int(std::string_view(s).substr(pos, e - pos));
      if (!v || *v > 1'000'000) throw fail("bad vertex id");
      pos = e;
      raw.push_back({NodeLabel::leaf, static_cast<int>(*v), {}});
      return raw.size() - 1;
    }
    NodeLabel label;
    if (s.compare(pos, 3, "PR(") == 0) {
      label = NodeLabel::prime;
      pos += 3;
    } else if (s.compare(pos, 2, "P(") == 0) {
      label = NodeLabel::parallel;
      pos += 2;
    } else if (s.compare(pos, 2, "S(") == 0) {
      label = NodeLabel::series;
      pos += 2;
    } else {
      throw fail("expected vertex id or S(, P(, PR(");
    }
    const std::size_t me = raw.size();
    raw.push_back({label, -1, {}});
    while (true) {
      const std::size_t child = self(self);
      raw[me].children.push_back(child);
      if (pos < s.size() && s[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < s.size() && s[pos] == ')') {
        ++pos;
        break;
      }
      throw fail("expected ',' or ')'");
    }
    return me;
  };
  rec(rec);
  if (pos != s.size()) throw fail("trailing characters");

  int n = 0;
  for (const auto& r : raw)
    if (r.label == NodeLabel::leaf) ++n;
  std::vector<MDNode> nodes(raw.size());
  auto fill = [&](auto&& self, std::size_t i) -> void {
    nodes[i].label = raw[i].label;
    nodes[i].vertices = VertexSet(n);
    if (raw[i].label == NodeLabel::leaf) {
      if (raw[i].leaf >= n) throw parse_error(1, "leaf ids must be 0..n-1");
      nodes[i].vertices.insert(raw[i].leaf);
      return;
    }
    for (auto c : raw[i].children) {
      self(self, c);
      nodes[i].vertices |= nodes[c].vertices;
    }
    nodes[i].children = raw[i].children;
    std::sort(nodes[i].children.begin(), nodes[i].children.end(),
              [&](std::size_t a, std::size_t b) { return nodes[a].vertices.min() < nodes[b].vertices.min(); });
  };
  fill(fill, 0);
  try {
    return MDTree::from_nodes(n, std::move(nodes));
  } catch (const std::invalid_argument& e) {
    throw parse_error(1, e.what());
  }
}

namespace detail {

inline std::string pairs_text(const EditSet& f) {
  if (f.empty()) return "-";
  std::string out;
  for (const auto& p : f) {
    if (!out.empty()) out += ' ';
    out += std::to_string(p.first) + "-" + std::to_string(p.second);
  }
  return out;
}

inline EditSet parse_pairs(std::string_view s, int n, std::size_t line) {
  s = trim(s);
  if (s == "-") return {};
  std::vector<VertexPair> out;
  for (auto tok : split_ws(s)) {
    const auto d = tok.find('-');
    std::optional<long long> u, v;
    if (d != std::string_view::npos) {
      u = to_int(tok.substr(0, d));
      v = to_int(tok.substr(d + 1));
    }
    if (!u || !v || *u < 0 || *v < 0 || *u >= n || *v >= n || *u == *v)
      throw parse_error(line, "bad pair '" + std::string(tok) + "'");
    out.emplace_back(static_cast<int>(*u), static_cast<int>(*v));
  }
  return EditSet(std::move(out));
}

inline std::vector<std::string_view> split_tabs(std::string_view s) {
  std::vector<std::string_view> out;
  while (true) {
    const auto t = s.find('\t');
    out.push_back(s.substr(0, t));
    if (t == std::string_view::npos) break;
    s.remove_prefix(t + 1);
  }
  return out;
}

}  // namespace detail

// Header "trace n", one tab-separated line per step (left, right, host, theta) and a final
// "residual" line. Sets are comma lists, theta pairs "x-y" separated by spaces, "-" when empty.
inline std::string serialize_trace(const MergeTrace& t, int n) {
  std::ostringstream os;
  os << "trace " << n << '\n';
  for (const auto& s : t.steps)
    os << s.left.to_string() << '\t' << s.right.to_string() << '\t' << s.host.to_string() << '\t'
       << detail::pairs_text(s.theta) << '\n';
  os << "residual\t" << detail::pairs_text(t.residual) << '\n';
  return os.str();
}

inline MergeTrace parse_trace(std::string_view text) {
  const auto lines = detail::content_lines(text);
  if (lines.empty()) throw parse_error(1, "missing trace header");
  const auto head = detail::split_ws(lines[0].text);
  std::optional<long long> n;
  if (head.size() == 2 && head[0] == "trace") n = detail::to_int(head[1]);
  if (!n || *n <= 0 || *n > 1'000'000) throw parse_error(lines[0].number, "malformed header, expected 'trace n'");
  const int order = static_cast<int>(*n);
  MergeTrace t;
  bool residual = false;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& ln = lines[i];
    if (residual) throw parse_error(ln.number, "content after residual line");
    const auto f = detail::split_tabs(ln.text);
    if (f.size() == 2 && f[0] == "residual") {
      t.residual = detail::parse_pairs(f[1], order, ln.number);
      residual = true;
      continue;
    }
    if (f.size() != 4) throw parse_error(ln.number, "expected 4 tab-separated fields");
    MergeStep s{detail::parse_set(f[0], order, ln.number), detail::parse_set(f[1], order, ln.number), {},
                detail::parse_set(f[2], order, ln.number), detail::parse_pairs(f[3], order, ln.number)};
    if (s.left.intersects(s.right)) throw parse_error(ln.number, "merged blocks overlap");
    s.result = s.left | s.right;
    t.steps.push_back(std::move(s));
  }
  if (!residual) throw parse_error(lines.back().number, "missing residual line");
  return t;
}

}  // namespace cgedit
