// Command-line front end: solve, gen, bench, oracle, ttt.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "asep/benchmark.hpp"
#include "asep/config.hpp"
#include "asep/generator.hpp"
#include "asep/oracle.hpp"
#include "asep/solver.hpp"

namespace {

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(std::stod(item));
  }
  return out;
}

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// Solver flags shared by solve and bench. Values are collected as strings
/// and applied on top of the config file so flags always win.
struct SolverFlags {
  std::string config_file;
  std::vector<std::pair<std::string, std::string*>> bound;
  std::string theta, theta_ref, theta_elite, eta, rho, xi_max, gamma, mu, time_limit, stagnation, max_gen, seed,
      objective, threads;
  bool no_tabu = false;

  void attach(CLI::App& app) {
    app.add_option("--config", config_file, "key=value config file");
    auto opt = [&](const char* flag, const char* key, std::string& target, const char* help) {
      app.add_option(flag, target, help);
      bound.emplace_back(key, &target);
    };
    opt("--theta", "theta", theta, "population size");
    opt("--theta-ref", "theta_ref", theta_ref, "reference set size");
    opt("--theta-elite", "theta_elite", theta_elite, "elite set size");
    opt("--eta", "eta", eta, "randomized scale factor");
    opt("--rho", "rho", rho, "itemset scale factor");
    opt("--xi-max", "xi_max", xi_max, "TSSA maximal non-improving iterations");
    opt("--gamma", "gamma", gamma, "tabu scale factor");
    opt("--mu", "mu", mu, "quality weight");
    opt("--time-limit", "time_limit", time_limit, "seconds (<= 0 disables)");
    opt("--stagnation", "stagnation_limit", stagnation, "generations without improvement (0 disables)");
    opt("--max-generations", "max_generations", max_gen, "generation cap (0 disables)");
    opt("--seed", "seed", seed, "random seed");
    opt("--objective", "objective", objective, "largest|total|count");
    opt("--threads", "threads", threads, "construction workers");
    app.add_flag("--no-tabu", no_tabu, "disable the tabu list");
  }

  asep::SolverConfig build(double alpha) const {
    asep::SolverConfig config;
    if (!config_file.empty()) config = asep::load_config(config_file, config);
    // theta first so explicit reference/elite sizes override its rescaling.
    if (!theta.empty()) asep::apply_setting(config, "theta", theta);
    for (const auto& [key, value] : bound) {
      if (key != "theta" && !value->empty()) asep::apply_setting(config, key, *value);
    }
    if (no_tabu) config.tabu = false;
    config.alpha = alpha;
    config.validate();
    return config;
  }
};

int run_solve(const std::string& graph_path, double alpha, bool one_based, const std::string& variant,
              const std::string& out, const SolverFlags& flags) {
  const asep::Graph g = asep::load_edge_list(graph_path, one_based);
  const asep::SolverConfig config = flags.build(alpha);
  const asep::SolveReport report = asep::run_variant(g, config, asep::parse_variant(variant));
  const std::size_t tau = asep::threshold(alpha, g.num_vertices());
  if (!asep::check_separator(g, report.best, tau)) {
    std::cerr << "error: reported separator fails the feasibility check\n";
    return 2;
  }
  write_text(out, report.to_json() + "\n");
  std::cerr << "best |S| = " << report.best_size << " (tau = " << tau << ", " << report.generations
            << " generations, " << report.total_time << " s)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum alpha-separator search"};
  app.require_subcommand(1);

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "solve one instance");
  std::string graph_path;
  double alpha = 0.0;
  bool one_based = false;
  std::string variant = "fis";
  std::string out;
  SolverFlags solve_flags;
  solve_cmd->add_option("graph", graph_path, "edge-list file")->required();
  solve_cmd->add_option("--alpha", alpha, "component size fraction")->required();
  solve_cmd->add_flag("--one-based", one_based, "vertex ids in the file start at 1");
  solve_cmd->add_option("--variant", variant, "fis|tssa-only|no-tabu");
  solve_cmd->add_option("-o,--output", out, "write the JSON report here (default stdout)");
  solve_flags.attach(*solve_cmd);

  // gen
  auto* gen_cmd = app.add_subcommand("gen", "generate an Erdos-Renyi instance");
  asep::InstanceSpec spec;
  std::string model = "incremental";
  std::string gen_out;
  gen_cmd->add_option("--n", spec.n, "vertex count")->required();
  gen_cmd->add_option("--p", spec.p, "connection probability")->required();
  gen_cmd->add_option("--seed", spec.seed, "random seed");
  gen_cmd->add_option("--model", model, "incremental|gilbert");
  gen_cmd->add_option("-o,--output", gen_out, "edge-list output (a .json manifest is written alongside)")->required();

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "run a benchmark over a directory of instances");
  std::string bench_dir;
  std::string alphas = "0.2,0.4,0.6";
  std::string variants = "fis";
  std::size_t runs = 1;
  std::size_t workers = 1;
  std::string bench_out;
  bool bench_one_based = false;
  SolverFlags bench_flags;
  bench_cmd->add_option("--dir", bench_dir, "instance directory")->required();
  bench_cmd->add_option("--alphas", alphas, "comma-separated alpha values");
  bench_cmd->add_option("--runs", runs, "runs per (instance, alpha, variant)");
  bench_cmd->add_option("--variants", variants, "comma-separated: fis,tssa-only,no-tabu");
  bench_cmd->add_option("--workers", workers, "parallel benchmark cells");
  bench_cmd->add_flag("--one-based", bench_one_based, "vertex ids in the files start at 1");
  bench_cmd->add_option("-o,--output", bench_out, "CSV output")->required();
  bench_flags.attach(*bench_cmd);

  // oracle
  auto* oracle_cmd = app.add_subcommand("oracle", "exact minimum separator by enumeration (n <= 20)");
  std::string oracle_graph;
  double oracle_alpha = 0.0;
  bool oracle_one_based = false;
  oracle_cmd->add_option("graph", oracle_graph, "edge-list file")->required();
  oracle_cmd->add_option("--alpha", oracle_alpha, "component size fraction")->required();
  oracle_cmd->add_flag("--one-based", oracle_one_based, "vertex ids in the file start at 1");

  // ttt
  auto* ttt_cmd = app.add_subcommand("ttt", "time-to-target data from benchmark CSV");
  std::string csv_path;
  std::size_t target = 0;
  std::string ttt_out;
  std::string ttt_instance, ttt_variant;
  double ttt_alpha = -1.0;
  ttt_cmd->add_option("--csv", csv_path, "benchmark CSV")->required();
  ttt_cmd->add_option("--target", target, "target separator size")->required();
  ttt_cmd->add_option("--instance", ttt_instance, "only rows of this instance");
  ttt_cmd->add_option("--alpha", ttt_alpha, "only rows with this alpha");
  ttt_cmd->add_option("--variant", ttt_variant, "only rows of this variant");
  ttt_cmd->add_option("-o,--output", ttt_out, "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve_cmd) return run_solve(graph_path, alpha, one_based, variant, out, solve_flags);

    if (*gen_cmd) {
      spec.model = asep::parse_model(model);
      const asep::Graph g = asep::generate_er(spec);
      asep::save_edge_list(g, gen_out);
      write_text(gen_out + ".json", spec.manifest());
      std::cerr << spec.name() << ": n=" << g.num_vertices() << " m=" << g.num_edges() << "\n";
      return 0;
    }

    if (*bench_cmd) {
      asep::BenchmarkPlan plan;
      plan.alphas = parse_list(alphas);
      plan.variants.clear();
      for (const auto& v : split(variants)) plan.variants.push_back(asep::parse_variant(v));
      plan.runs = runs;
      plan.workers = workers;
      plan.config = bench_flags.build(plan.alphas.empty() ? 0.5 : plan.alphas.front());
      const auto instances = asep::load_instances(bench_dir, bench_one_based);
      write_text(bench_out, asep::to_csv(asep::run_benchmark(instances, plan)));
      return 0;
    }

    if (*oracle_cmd) {
      const asep::Graph g = asep::load_edge_list(oracle_graph, oracle_one_based);
      const auto exact = asep::brute_force_min_separator(g, oracle_alpha);
      std::cout << "size " << exact.size << "\nwitness";
      for (auto v : exact.witness) std::cout << ' ' << (oracle_one_based ? v + 1 : v);
      std::cout << '\n';
      return 0;
    }

    if (*ttt_cmd) {
      const auto records = asep::parse_csv(read_text(csv_path));
      asep::TttFilter filter;
      if (!ttt_instance.empty()) filter.instance = ttt_instance;
      if (!ttt_variant.empty()) filter.variant = ttt_variant;
      if (ttt_alpha >= 0.0) filter.alpha = ttt_alpha;
      const auto data = asep::time_to_target(records, target, filter);
      if (data.skipped > 0) std::cerr << data.skipped << " run(s) never reached target " << target << "; skipped\n";
      write_text(ttt_out, asep::to_ttt(data));
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
