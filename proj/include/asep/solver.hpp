#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "asep/config.hpp"
#include "asep/population.hpp"
#include "asep/tssa.hpp"

namespace asep {

/// One improvement of the incumbent: a feasible separator of `size` found
/// after `seconds` of wall time in generation `generation` (0 = construction).
struct TimelineEntry {
  std::size_t size = 0;
  double seconds = 0.0;
  std::size_t generation = 0;
  std::vector<Vertex> nodes;
};

struct SolveReport {
  std::vector<Vertex> best;
  std::size_t best_size = 0;
  std::size_t construction_best = 0;
  double time_to_best = 0.0;
  double total_time = 0.0;
  std::size_t generations = 0;
  std::vector<TimelineEntry> timeline;

  /// JSON document. Wall-clock fields are omitted when include_timing is
  /// false; the remainder is a pure function of (graph, config).
  [[nodiscard]] std::string to_json(bool include_timing = true) const;
};

/// Called after every generation with the population, the current K and
/// the incumbent. Used for invariant checking.
using GenerationObserver = std::function<void(const Population&, std::size_t k, const Separator& best)>;

TssaParams tssa_params(const SolverConfig& config);

/// One generation at fixed K: recombine, improve with TSSA, manage the
/// population. Returns the offspring if it is feasible.
std::optional<Separator> k_decision_step(const Problem& problem, Population& population, const SolverConfig& config,
                                         const TssaParams& params, Rng& rng);

/// Builds theta solutions, one RNG stream per index. Runs on
/// config.threads workers; the result does not depend on the thread count.
Population build_population(const Problem& problem, const SolverConfig& config, std::span<const double> centrality,
                            const TssaParams& params);

/// Frequent itemset-driven search.
SolveReport solve(const Graph& g, const SolverConfig& config, const GenerationObserver& observer = {});

/// Iterated TSSA on a single solution (no population, no recombination).
SolveReport solve_tssa_only(const Graph& g, const SolverConfig& config);

}  // namespace asep
