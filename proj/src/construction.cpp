#include "asep/construction.hpp"

#include <cmath>
#include <stdexcept>

namespace asep {

Separator grow_to_feasible(const Problem& problem, double eta, std::span<const double> centrality, Rng& rng) {
  if (!(eta > 0.0 && eta <= 1.0)) throw std::invalid_argument("eta must lie in (0, 1]");
  const std::size_t n = problem.num_vertices();
  if (centrality.size() != n) throw std::invalid_argument("centrality size does not match the graph");
  if (n == 0) return Separator(problem, {});

  std::vector<Vertex> remaining(n);
  for (std::size_t v = 0; v < n; ++v) remaining[v] = static_cast<Vertex>(v);
  const std::size_t first = rng.below(n);
  Vertex seed = remaining[first];
  remaining[first] = remaining.back();
  remaining.pop_back();
  Separator s(problem, {seed});

  while (!s.feasible() && !remaining.empty()) {
    auto sample = static_cast<std::size_t>(std::ceil(eta * static_cast<double>(remaining.size()) - 1e-9));
    sample = std::max<std::size_t>(sample, 1);
    rng.sample_prefix(remaining, sample);
    std::size_t best = 0;
    std::uint64_t ties = 1;
    for (std::size_t i = 1; i < sample; ++i) {
      const double a = centrality[remaining[i]];
      const double b = centrality[remaining[best]];
      if (a > b) {
        best = i;
        ties = 1;
      } else if (a == b && rng.below(++ties) == 0) {
        best = i;
      }
    }
    Vertex pick = remaining[best];
    remaining[best] = remaining.back();
    remaining.pop_back();
    s.insert(problem, pick);
  }
  return s;
}

Separator shrink(const Problem& problem, Separator s, const TssaParams& params, Rng& rng) {
  if (params.max_streak == 0) return s;
  RemovalEvaluator eval(*problem.graph, problem.tau, problem.objective);
  while (s.size() > 0) {
    if (params.deadline && Clock::now() >= *params.deadline) break;
    Separator candidate = s;
    candidate.erase(problem, best_removal(candidate, eval, rng));
    candidate = tssa(problem, std::move(candidate), params, rng);
    if (!candidate.feasible()) break;
    s = std::move(candidate);
  }
  return s;
}

Separator construct_solution(const Problem& problem, double eta, std::span<const double> centrality,
                             const TssaParams& params, Rng& rng) {
  return shrink(problem, grow_to_feasible(problem, eta, centrality, rng), params, rng);
}

}  // namespace asep
