#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cgedit/cograph.hpp"
#include "cgedit/editing/edit_result.hpp"
#include "cgedit/merge.hpp"

namespace cgedit {

struct VerifyReport {
  bool cograph = false;
  std::optional<P4> p4;                  // witness when the result is not a cograph
  bool consistent = false;               // result_graph == g △ edits
  bool cost_ok = false;                  // cost == |edits|
  ModulePreservation modules;            // every module of g survives
  bool modules_required = true;          // brute-force optima need not preserve modules
  std::optional<bool> trace_ok;          // absent when there is no trace
  std::vector<std::string> problems;

  bool ok() const {
    return cograph && consistent && cost_ok && (modules.preserved || !modules_required) && trace_ok.value_or(true);
  }
};

namespace detail {

inline bool check_trace(const Graph& g, const EditResult& r, std::vector<std::string>& problems) {
  const MergeTrace& t = *r.trace;
  EditSet seen = t.residual;
  for (const auto& s : t.steps) {
    if (!s.theta.disjoint_from(seen)) {
      problems.push_back("trace: theta sets overlap");
      return false;
    }
    seen = seen.set_union(s.theta);
  }
  if (seen != r.edits) {
    problems.push_back("trace: merge edits do not add up to the edit set");
    return false;
  }
  GraphBuilder cur(g);
  for (std::size_t l = 0; l < t.steps.size(); ++l) {
    const auto& s = t.steps[l];
    const Graph before = cur.view();
    for (const auto& e : s.theta) cur.toggle(e.first, e.second);
    if (!s.theta.empty() && !validate_merge(before, cur.view(), MergeSpec({s.left, s.right}))) {
      problems.push_back("trace: step " + std::to_string(l) + " is not a valid module merge");
      return false;
    }
    if (!is_module(cur.view(), s.result)) {
      problems.push_back("trace: step " + std::to_string(l) + " does not produce a module");
      return false;
    }
    if (!t.intermediates.empty() && t.intermediates.at(l + 1) != cur.view()) {
      problems.push_back("trace: intermediate graph " + std::to_string(l + 1) + " differs from replay");
      return false;
    }
  }
  for (const auto& e : t.residual) cur.toggle(e.first, e.second);
  if (cur.view() != r.result_graph) {
    problems.push_back("trace: replay does not end at the result graph");
    return false;
  }
  return true;
}

}  // namespace detail

inline VerifyReport verify_edit_result(const Graph& g, const EditResult& r) {
  VerifyReport rep;
  rep.p4 = find_p4(r.result_graph);
  rep.cograph = !rep.p4;
  if (!rep.cograph) rep.problems.push_back("result is not a cograph");
  rep.consistent = apply_edits(g, r.edits) == r.result_graph;
  if (!rep.consistent) rep.problems.push_back("result graph differs from input with edits applied");
  rep.cost_ok = r.cost == r.edits.size();
  if (!rep.cost_ok) rep.problems.push_back("cost does not match the number of edits");
  rep.modules = check_module_preserving(g, r.edits);
  rep.modules_required = r.method != Method::bruteforce;
  if (!rep.modules && rep.modules_required)
    rep.problems.push_back("module {" + rep.modules.witness->to_string() + "} of the input is broken");
  if (r.trace) rep.trace_ok = detail::check_trace(g, r, rep.problems);
  return rep;
}

}  // namespace cgedit
