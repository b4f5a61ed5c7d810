#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "asep/config.hpp"
#include "asep/graph.hpp"
#include "asep/solver.hpp"

namespace asep {

enum class Variant {
  Fis,       ///< full search
  TssaOnly,  ///< iterated TSSA on one solution
  NoTabu,    ///< full search with the tabu list disabled
};

Variant parse_variant(std::string_view name);
std::string_view variant_name(Variant v);

/// Runs one solver variant.
SolveReport run_variant(const Graph& g, SolverConfig config, Variant variant);

/// One row of benchmark output.
struct RunRecord {
  std::string instance;
  double alpha = 0.0;
  std::string variant;
  std::uint64_t seed = 0;
  std::size_t best_size = 0;
  double time_to_best = 0.0;
  double total_time = 0.0;
  std::size_t generations = 0;
  /// (size, seconds) for every incumbent improvement, in order.
  std::vector<std::pair<std::size_t, double>> timeline;
};

struct NamedGraph {
  std::string name;
  Graph graph;
};

struct BenchmarkPlan {
  std::vector<double> alphas{0.2, 0.4, 0.6};
  std::vector<Variant> variants{Variant::Fis};
  std::size_t runs = 1;
  SolverConfig config;  ///< run r uses seed config.seed + r
  std::size_t workers = 1;
};

/// Every (instance, alpha, variant, run) cell. Each reported separator is
/// re-checked with check_separator; a failure throws std::runtime_error.
std::vector<RunRecord> run_benchmark(const std::vector<NamedGraph>& instances, const BenchmarkPlan& plan);

/// Reads every edge-list file in `dir` (skipping *.json manifests), sorted by
/// file name. Throws GraphError on unreadable or malformed files.
std::vector<NamedGraph> load_instances(const std::string& dir, bool one_based = false);

/// RFC 4180 CSV with a header row. f_hat / f_bar are the best and mean
/// best_size over all runs of the same (instance, alpha, variant).
std::string to_csv(const std::vector<RunRecord>& records);
std::vector<RunRecord> parse_csv(std::string_view text);

struct TttFilter {
  std::optional<std::string> instance;
  std::optional<double> alpha;
  std::optional<std::string> variant;
};

struct TttPoint {
  double seconds;
  double probability;
};

struct TttData {
  std::vector<TttPoint> points;
  std::size_t skipped = 0;  ///< matching runs that never reached the target
};

/// Time at which each matching run first held a separator of size <= target,
/// sorted ascending and paired with p_i = (i - 0.5) / R, R the number of runs
/// that reached the target.
TttData time_to_target(const std::vector<RunRecord>& records, std::size_t target, const TttFilter& filter = {});

/// One "t,p" line per point.
std::string to_ttt(const TttData& data);

}  // namespace asep
