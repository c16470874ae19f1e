#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cgedit/graph.hpp"
#include "cgedit/merge.hpp"

namespace cgedit {

enum class Method { bruteforce, exact, greedy, greedy_randomized, random_pair };

inline std::string_view to_string(Method m) {
  switch (m) {
    case Method::bruteforce: return "bruteforce";
    case Method::exact: return "exact";
    case Method::greedy: return "greedy";
    case Method::greedy_randomized: return "greedy-rand";
    case Method::random_pair: return "random-pair";
  }
  return "?";
}

inline Method parse_method(std::string_view s) {
  for (auto m : {Method::bruteforce, Method::exact, Method::greedy, Method::greedy_randomized, Method::random_pair})
    if (to_string(m) == s) return m;
  throw std::invalid_argument("unknown method '" + std::string(s) + "'");
}

struct EditResult {
  EditSet edits;
  Graph result_graph;
  std::size_t cost = 0;
  Method method = Method::exact;
  std::optional<MergeTrace> trace;
};

inline EditResult make_result(const Graph& g, EditSet edits, Method method) {
  Graph h = apply_edits(g, edits);
  const std::size_t cost = edits.size();
  return {std::move(edits), std::move(h), cost, method, std::nullopt};
}

}  // namespace cgedit
