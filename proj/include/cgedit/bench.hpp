#pragma once

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdint>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "cgedit/editing/brute_force.hpp"
#include "cgedit/editing/exact.hpp"
#include "cgedit/editing/heuristic.hpp"
#include "cgedit/editing/random_pair.hpp"
#include "cgedit/editing/verify.hpp"
#include "cgedit/errors.hpp"
#include "cgedit/generator.hpp"

namespace cgedit {

struct BenchConfig {
  std::vector<int> sizes;
  std::vector<std::uint64_t> ks;
  std::vector<Method> methods;
  int reps = 1;
  std::uint64_t seed = 0;
  int threads = 1;
  bool verify = true;
};

struct BenchRecord {
  std::string instance;
  int n = 0;
  std::uint64_t k = 0;
  std::uint64_t seed = 0;
  Method method = Method::greedy;
  long long cost = -1;  // -1 when the solver refused the instance
  double runtime_ms = 0;
  double decomposition_ms = 0;
  double editing_ms = 0;
  bool verified = false;
  bool recovered = false;  // edits equal the planted flips
  std::string status = "ok";
};

inline constexpr std::string_view bench_csv_header =
    "instance,n,k,seed,method,cost,runtime_ms,decomposition_ms,editing_ms,verified,recovered,status";

inline std::string to_csv(const BenchRecord& r) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(3);
  os << r.instance << ',' << r.n << ',' << r.k << ',' << r.seed << ',' << to_string(r.method) << ',' << r.cost << ','
     << r.runtime_ms << ',' << r.decomposition_ms << ',' << r.editing_ms << ',' << (r.verified ? 1 : 0) << ','
     << (r.recovered ? 1 : 0) << ',' << r.status;
  return os.str();
}

namespace detail {

inline std::vector<std::string_view> split_list(std::string_view s) {
  std::vector<std::string_view> out;
  while (true) {
    const auto c = s.find(',');
    auto tok = s.substr(0, c);
    while (!tok.empty() && (tok.front() == ' ' || tok.front() == '\t')) tok.remove_prefix(1);
    while (!tok.empty() && (tok.back() == ' ' || tok.back() == '\t')) tok.remove_suffix(1);
    if (!tok.empty()) out.push_back(tok);
    if (c == std::string_view::npos) break;
    s.remove_prefix(c + 1);
  }
  return out;
}

inline std::uint64_t parse_u64(std::string_view s, std::size_t line) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size())
    throw parse_error(line, "expected a non-negative integer, got '" + std::string(s) + "'");
  return v;
}

}  // namespace detail

// key = value lines; lists are comma separated. Keys: sizes, ks, methods, reps, seed, threads,
// verify. Unknown keys and bruteforce on instances above its size bound are rejected.
inline BenchConfig parse_bench_config(std::string_view text) {
  BenchConfig c;
  std::map<std::string, std::size_t> seen;
  std::size_t number = 0;
  while (true) {
    ++number;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    if (const auto h = line.find('#'); h != std::string_view::npos) line = line.substr(0, h);
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      if (line.find_first_not_of(" \t\r") != std::string_view::npos) throw parse_error(number, "expected 'key = value'");
    } else {
      std::string key(line.substr(0, eq));
      std::string_view value = line.substr(eq + 1);
      std::erase_if(key, [](char ch) { return ch == ' ' || ch == '\t'; });
      while (!value.empty() && (value.back() == '\r' || value.back() == ' ')) value.remove_suffix(1);
      if (seen.count(key)) throw parse_error(number, "duplicate key '" + key + "'");
      seen[key] = number;
      const auto vals = detail::split_list(value);
      if (vals.empty()) throw parse_error(number, "missing value for '" + key + "'");
      auto single = [&]() {
        if (vals.size() != 1) throw parse_error(number, "'" + key + "' takes a single value");
        return vals.front();
      };
      if (key == "sizes") {
        for (auto v : vals) {
          auto x = detail::parse_u64(v, number);
          if (x < 1 || x > 100000) throw parse_error(number, "size out of range");
          c.sizes.push_back(static_cast<int>(x));
        }
      } else if (key == "ks") {
        for (auto v : vals) c.ks.push_back(detail::parse_u64(v, number));
      } else if (key == "methods") {
        for (auto v : vals) {
          try {
            c.methods.push_back(parse_method(v));
          } catch (const std::invalid_argument& e) {
            throw parse_error(number, e.what());
          }
        }
      } else if (key == "reps") {
        c.reps = static_cast<int>(detail::parse_u64(single(), number));
        if (c.reps < 1) throw parse_error(number, "reps must be positive");
      } else if (key == "seed") {
        c.seed = detail::parse_u64(single(), number);
      } else if (key == "threads") {
        c.threads = static_cast<int>(detail::parse_u64(single(), number));
        if (c.threads < 1) throw parse_error(number, "threads must be positive");
      } else if (key == "verify") {
        auto v = single();
        if (v != "true" && v != "false") throw parse_error(number, "verify must be true or false");
        c.verify = v == "true";
      } else {
        throw parse_error(number, "unknown key '" + key + "'");
      }
    }
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  for (const char* req : {"sizes", "ks", "methods"})
    if (!seen.count(req))
      throw parse_error(number, std::string("missing key '") + req + "'");
  for (int n : c.sizes)
    for (auto k : c.ks)
      if (k > static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n - 1) / 2)
        throw parse_error(seen["ks"], "k=" + std::to_string(k) + " exceeds the pairs of n=" + std::to_string(n));
  const int brute_max = BruteForceLimits{}.single_optimum;
  if (std::find(c.methods.begin(), c.methods.end(), Method::bruteforce) != c.methods.end())
    for (int n : c.sizes)
      if (n > brute_max)
        throw parse_error(seen["methods"], "bruteforce cannot run on n=" + std::to_string(n) + " (limit " +
                                               std::to_string(brute_max) + ")");
  return c;
}

namespace detail {

using Clock = std::chrono::steady_clock;

inline double ms_since(Clock::time_point t) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t).count();
}

// Editing phase only; the decomposition is passed in.
inline EditResult edit_with_tree(const Graph& g, const MDTree& tree, Method m, std::uint64_t seed) {
  switch (m) {
    case Method::exact: return exact_edit(g, tree, {.with_trace = false});
    case Method::greedy: return heuristic_edit(g, tree);
    case Method::greedy_randomized: return heuristic_edit_randomized(g, tree, seed);
    case Method::random_pair: return random_pair_edit(g, tree, seed);
    case Method::bruteforce: break;
  }
  return brute_force_optimal_edit(g);
}

}  // namespace detail

inline EditResult run_method(const Graph& g, Method m, std::uint64_t seed) {
  if (m == Method::bruteforce) return brute_force_optimal_edit(g);
  return detail::edit_with_tree(g, modular_decomposition_tree(g), m, seed);
}

inline BenchRecord run_instance(const PerturbedCograph& inst, std::string id, std::uint64_t k, std::uint64_t seed,
                                Method m, bool verify) {
  BenchRecord r;
  r.instance = std::move(id);
  r.n = inst.graph.order();
  r.k = k;
  r.seed = seed;
  r.method = m;
  const auto start = detail::Clock::now();
  try {
    EditResult res;
    if (m == Method::bruteforce) {
      res = brute_force_optimal_edit(inst.graph);
      r.editing_ms = detail::ms_since(start);
    } else {
      const MDTree tree = modular_decomposition_tree(inst.graph);
      r.decomposition_ms = detail::ms_since(start);
      const auto t1 = detail::Clock::now();
      res = detail::edit_with_tree(inst.graph, tree, m, seed);
      r.editing_ms = detail::ms_since(t1);
    }
    r.runtime_ms = detail::ms_since(start);
    r.cost = static_cast<long long>(res.cost);
    r.recovered = res.edits == inst.flips;
    r.verified = verify && verify_edit_result(inst.graph, res).ok();
  } catch (const search_limit_exceeded&) {
    r.runtime_ms = detail::ms_since(start);
    r.status = "limit";
  }
  return r;
}

struct BenchSummary {
  std::map<Method, std::pair<double, int>> cost_sum;  // total cost, solved instances

  double mean_cost(Method m) const {
    auto it = cost_sum.find(m);
    return it == cost_sum.end() || it->second.second == 0 ? 0.0 : it->second.first / it->second.second;
  }
};

// One record per (instance, method), in instance order, each as a CSV line on out.
inline BenchSummary run_benchmark(const BenchConfig& c, std::ostream& out) {
  struct Item {
    int n;
    std::uint64_t k;
    int rep;
    std::uint64_t seed;
  };
  std::vector<Item> items;
  for (int n : c.sizes)
    for (auto k : c.ks)
      for (int rep = 0; rep < c.reps; ++rep) items.push_back({n, k, rep, c.seed + items.size()});

  std::vector<std::vector<BenchRecord>> records(items.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) {
      const auto& it = items[i];
      const auto inst = generate_perturbed_cograph(it.n, it.k, it.seed);
      const std::string id = "n" + std::to_string(it.n) + "-k" + std::to_string(it.k) + "-r" + std::to_string(it.rep);
      for (auto m : c.methods) records[i].push_back(run_instance(inst, id, it.k, it.seed, m, c.verify));
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < c.threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  BenchSummary s;
  out << bench_csv_header << '\n';
  for (const auto& rs : records)
    for (const auto& r : rs) {
      out << to_csv(r) << '\n';
      if (r.cost >= 0) {
        auto& [sum, count] = s.cost_sum[r.method];
        sum += static_cast<double>(r.cost);
        ++count;
      }
    }
  return s;
}

// Median wall time of the editing phase alone on G(n, 1/2) instances, which are prime with
// high probability.
inline double median_editing_ms(Method m, int n, int samples, std::uint64_t seed) {
  std::vector<double> times;
  Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng.bernoulli(0.5)) b.add_edge(u, v);
    const Graph g = std::move(b).build();
    const MDTree tree = modular_decomposition_tree(g);
    const auto t = detail::Clock::now();
    auto r = detail::edit_with_tree(g, tree, m, seed + static_cast<std::uint64_t>(s));
    times.push_back(detail::ms_since(t));
    if (r.cost == 0 && !is_cograph(g)) throw std::logic_error("editing produced no edits for a non-cograph");
  }
  std::sort(times.begin(), times.end());
  return times[times.size() / 2];
}

}  // namespace cgedit
