#include "asep/solver.hpp"

#include <algorithm>
#include <cmath>
#include <nlohmann/json.hpp>
#include <thread>

#include "asep/centrality.hpp"
#include "asep/construction.hpp"
#include "asep/recombination.hpp"

namespace asep {

namespace {

// Stream index for the generation loop, disjoint from construction indices.
constexpr std::uint64_t kMainStream = 0xF15ULL << 40;

double round_ms(double seconds) { return std::round(seconds * 1000.0) / 1000.0; }

class Tracker {
 public:
  Tracker(SolveReport& report, Clock::time_point start) : report_(report), start_(start) {}

  void improve(const Separator& s, std::size_t generation) {
    const double t = elapsed();
    TimelineEntry entry;
    entry.size = s.size();
    entry.seconds = t;
    entry.generation = generation;
    entry.nodes.assign(s.nodes().begin(), s.nodes().end());
    report_.timeline.push_back(std::move(entry));
    report_.best.assign(s.nodes().begin(), s.nodes().end());
    report_.best_size = s.size();
    report_.time_to_best = t;
  }

  [[nodiscard]] double elapsed() const {
    return std::chrono::duration<double>(Clock::now() - start_).count();
  }

 private:
  SolveReport& report_;
  Clock::time_point start_;
};

}  // namespace

std::string SolveReport::to_json(bool include_timing) const {
  nlohmann::ordered_json doc;
  doc["best_size"] = best_size;
  doc["best"] = best;
  doc["construction_best"] = construction_best;
  doc["generations"] = generations;
  if (include_timing) {
    doc["time_to_best"] = round_ms(time_to_best);
    doc["total_time"] = round_ms(total_time);
  }
  auto& tl = doc["timeline"] = nlohmann::ordered_json::array();
  for (const auto& e : timeline) {
    nlohmann::ordered_json item;
    item["size"] = e.size;
    item["generation"] = e.generation;
    if (include_timing) item["seconds"] = round_ms(e.seconds);
    item["nodes"] = e.nodes;
    tl.push_back(std::move(item));
  }
  return doc.dump(2);
}

TssaParams tssa_params(const SolverConfig& config) {
  TssaParams p;
  p.max_streak = config.max_streak;
  p.gamma = config.gamma;
  p.tabu_enabled = config.tabu;
  return p;
}

std::optional<Separator> k_decision_step(const Problem& problem, Population& population, const SolverConfig& config,
                                         const TssaParams& params, Rng& rng) {
  const RecombinationParams rp{config.reference_size, config.elite_size, config.rho};
  Separator child = recombine(problem, population, rp, rng);
  child = tssa(problem, std::move(child), params, rng);
  const bool feasible = child.feasible();
  std::optional<Separator> found;
  if (feasible) found = child;
  manage(population, std::move(child), config.mu, rng);
  return found;
}

Population build_population(const Problem& problem, const SolverConfig& config, std::span<const double> centrality,
                            const TssaParams& params) {
  const std::size_t theta = config.population_size;
  std::vector<std::optional<Separator>> slots(theta);
  auto work = [&](std::size_t worker, std::size_t workers) {
    for (std::size_t i = worker; i < theta; i += workers) {
      if (params.deadline && Clock::now() >= *params.deadline) return;
      Rng rng = Rng::stream(config.seed, i);
      slots[i] = construct_solution(problem, config.eta, centrality, params, rng);
    }
  };
  const std::size_t workers = std::min(config.threads, theta);
  if (workers <= 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
  }
  Population population;
  for (auto& s : slots) {
    if (s) population.push_back(std::move(*s));
  }
  return population;
}

SolveReport solve(const Graph& g, const SolverConfig& config, const GenerationObserver& observer) {
  config.validate();
  const auto start = Clock::now();
  SolveReport report;
  Tracker tracker(report, start);
  if (g.num_vertices() == 0) return report;

  const Problem problem(g, config.alpha, config.objective);
  TssaParams params = tssa_params(config);
  if (config.time_limit > 0.0) {
    params.deadline = start + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(config.time_limit));
  }
  auto out_of_time = [&] { return params.deadline && Clock::now() >= *params.deadline; };

  const auto centrality = betweenness(g);
  Population population = build_population(problem, config, centrality, params);
  if (population.empty()) {
    // Deadline hit before any construction finished; S = V is feasible.
    std::vector<Vertex> all(g.num_vertices());
    for (std::size_t v = 0; v < all.size(); ++v) all[v] = static_cast<Vertex>(v);
    population.emplace_back(problem, std::move(all));
  }
  const auto smallest = std::min_element(population.begin(), population.end(),
                                         [](const Separator& a, const Separator& b) { return a.size() < b.size(); });
  Separator best = *smallest;
  tracker.improve(best, 0);
  report.construction_best = best.size();

  Rng rng = Rng::stream(config.seed, kMainStream);
  std::size_t k = 0;
  bool done = population.size() < config.population_size;

  // Lowers K below the incumbent and repairs; repaired members that are
  // already feasible are taken as new incumbents straight away.
  auto descend = [&](std::size_t generation) {
    while (!done) {
      if (best.size() == 0) {
        done = true;
        return;
      }
      k = best.size() - 1;
      repair_population(problem, population, k, rng);
      auto hit = std::find_if(population.begin(), population.end(), [](const Separator& s) { return s.feasible(); });
      if (hit == population.end()) {
        // Only the empty set has size 0, and it is not feasible here.
        if (k == 0) done = true;
        return;
      }
      best = *hit;
      tracker.improve(best, generation);
    }
  };
  descend(0);

  std::size_t since_improvement = 0;
  while (!done) {
    if (out_of_time()) break;
    if (config.stagnation_limit > 0 && since_improvement >= config.stagnation_limit) break;
    if (config.max_generations > 0 && report.generations >= config.max_generations) break;
    ++report.generations;
    if (auto found = k_decision_step(problem, population, config, params, rng)) {
      best = std::move(*found);
      tracker.improve(best, report.generations);
      since_improvement = 0;
      descend(report.generations);
    } else {
      ++since_improvement;
    }
    if (observer) observer(population, k, best);
  }
  report.total_time = tracker.elapsed();
  return report;
}

SolveReport solve_tssa_only(const Graph& g, const SolverConfig& config) {
  config.validate();
  const auto start = Clock::now();
  SolveReport report;
  Tracker tracker(report, start);
  if (g.num_vertices() == 0) return report;

  const Problem problem(g, config.alpha, config.objective);
  TssaParams params = tssa_params(config);
  if (config.time_limit > 0.0) {
    params.deadline = start + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(config.time_limit));
  }
  const auto centrality = betweenness(g);
  Rng rng = Rng::stream(config.seed, 0);
  Separator best = construct_solution(problem, config.eta, centrality, params, rng);
  tracker.improve(best, 0);
  report.construction_best = best.size();

  RemovalEvaluator eval(g, problem.tau, problem.objective);
  Separator current = best;
  std::size_t since_improvement = 0;
  while (best.size() > 0) {
    if (params.deadline && Clock::now() >= *params.deadline) break;
    if (config.stagnation_limit > 0 && since_improvement >= config.stagnation_limit) break;
    if (config.max_generations > 0 && report.generations >= config.max_generations) break;
    if (current.size() == best.size()) current.erase(problem, best_removal(current, eval, rng));
    if (current.size() == 0) {
      if (current.feasible()) tracker.improve(current, report.generations);
      break;
    }
    ++report.generations;
    current = tssa(problem, std::move(current), params, rng);
    if (current.feasible()) {
      best = current;
      tracker.improve(best, report.generations);
      since_improvement = 0;
    } else {
      ++since_improvement;
    }
  }
  report.total_time = tracker.elapsed();
  return report;
}

}  // namespace asep
