// cgedit: cograph recognition, modular decomposition and cograph editing from the command line.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "cgedit/cgedit.hpp"

namespace {

using namespace cgedit;

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

Graph load_graph(const std::string& path) {
  try {
    return parse_graph(read_input(path));
  } catch (const parse_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

int cmd_recognize(const std::string& path) {
  const Graph g = load_graph(path);
  if (auto p4 = find_p4(g)) {
    std::cout << "not-cograph witness: " << (*p4)[0] << ' ' << (*p4)[1] << ' ' << (*p4)[2] << ' ' << (*p4)[3] << '\n';
    return 1;
  }
  std::cout << "cograph\n";
  return 0;
}

int cmd_mdtree(const std::string& path) {
  std::cout << serialize_mdtree(modular_decomposition_tree(load_graph(path))) << '\n';
  return 0;
}

int cmd_edit(const std::string& path, const std::string& method, std::uint64_t seed, const std::string& trace_path,
             bool verify) {
  const Graph g = load_graph(path);
  EditResult r = run_method(g, parse_method(method), seed);
  std::cout << serialize_edit_set(r.edits);
  std::cerr << "cost: " << r.cost << '\n';
  if (!trace_path.empty()) {
    if (!r.trace) {
      if (!check_module_preserving(g, r.edits))
        throw std::runtime_error("the edit set is not module-preserving; no merge trace exists");
      r.trace = pairwise_merge_sequence(g, r.edits);
    }
    write_file(trace_path, serialize_trace(*r.trace, g.order()));
  }
  if (verify) {
    const auto rep = verify_edit_result(g, r);
    for (const auto& p : rep.problems) std::cerr << "verify: " << p << '\n';
    std::cerr << "verify: " << (rep.ok() ? "ok" : "FAILED") << '\n';
    if (!rep.ok()) return 1;
  }
  return 0;
}

int cmd_gen(int n, std::uint64_t k, std::uint64_t seed, bool planted) {
  const auto inst = generate_perturbed_cograph(n, k, seed);
  std::cout << serialize_graph(inst.graph);
  if (planted) {
    std::cout << "# planted-cotree: " << serialize_cotree(inst.planted) << '\n';
    std::cout << "# planted-edits:";
    for (const auto& p : inst.flips) std::cout << ' ' << p.first << '-' << p.second;
    std::cout << '\n';
  }
  return 0;
}

int cmd_bench(const std::string& config_path, bool scaling) {
  BenchConfig c;
  try {
    c = parse_bench_config(read_input(config_path));
  } catch (const parse_error& e) {
    throw std::runtime_error(config_path + ": " + e.what());
  }
  if (scaling) {
    std::cout << "method,n,samples,median_editing_ms,ratio_to_previous\n";
    for (auto m : c.methods) {
      if (m == Method::bruteforce || m == Method::exact) continue;
      double prev = 0;
      for (int n : c.sizes) {
        const double t = median_editing_ms(m, n, c.reps, c.seed);
        std::cout << to_string(m) << ',' << n << ',' << c.reps << ',' << t << ',';
        if (prev > 0) std::cout << t / prev;
        std::cout << '\n';
        prev = t;
      }
    }
    return 0;
  }
  const auto summary = run_benchmark(c, std::cout);
  for (auto m : c.methods) std::cerr << "mean cost " << to_string(m) << ": " << summary.mean_cost(m) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cograph editing by pairwise module merge"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Input/output format (only 'text' is supported)")
      ->check(CLI::IsMember({"text"}));

  std::string path;
  auto* recognize = app.add_subcommand("recognize", "Test whether a graph is a cograph");
  recognize->add_option("graph", path, "Graph file ('-' for stdin)")->required();

  auto* mdtree = app.add_subcommand("mdtree", "Print the modular decomposition tree");
  mdtree->add_option("graph", path, "Graph file ('-' for stdin)")->required();

  std::string method = "greedy";
  std::uint64_t seed = 0;
  std::string trace_path;
  bool verify = false;
  auto* edit = app.add_subcommand("edit", "Edit a graph into a cograph; edits on stdout, cost on stderr");
  edit->add_option("graph", path, "Graph file ('-' for stdin)")->required();
  edit->add_option("--method", method, "bruteforce, exact, greedy, greedy-rand or random-pair")
      ->check(CLI::IsMember({"bruteforce", "exact", "greedy", "greedy-rand", "random-pair"}));
  edit->add_option("--seed", seed, "Seed for randomized methods (default 0)");
  edit->add_option("--trace", trace_path, "Write the pairwise merge trace to this file");
  edit->add_flag("--verify", verify, "Check the result and report on stderr");

  int n = 0;
  std::uint64_t k = 0;
  std::uint64_t gen_seed = 0;
  bool planted = false;
  auto* gen = app.add_subcommand("gen", "Generate a perturbed cograph");
  gen->add_option("--n", n, "Number of vertices")->required()->check(CLI::PositiveNumber);
  gen->add_option("--k", k, "Number of random pair flips")->required();
  gen->add_option("--seed", gen_seed, "Seed (default 0)");
  gen->add_flag("--emit-planted", planted, "Append the planted cotree and flips as comments");

  std::string config;
  bool scaling = false;
  auto* bench = app.add_subcommand("bench", "Run a benchmark; CSV on stdout");
  bench->add_option("--config", config, "key = value configuration file")->required();
  bench->add_flag("--scaling", scaling, "Print median editing-phase time per size instead of the records");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*recognize) return cmd_recognize(path);
    if (*mdtree) return cmd_mdtree(path);
    if (*edit) return cmd_edit(path, method, seed, trace_path, verify);
    if (*gen) return cmd_gen(n, k, gen_seed, planted);
    if (*bench) return cmd_bench(config, scaling);
  } catch (const std::exception& e) {
    std::cerr << "cgedit: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
