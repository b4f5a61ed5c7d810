#include "asep/recombination.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace asep {

std::vector<std::size_t> node_frequencies(std::size_t num_vertices, std::span<const std::vector<Vertex>> sets) {
  std::vector<std::size_t> psi(num_vertices, 0);
  for (const auto& s : sets) {
    for (Vertex v : s) ++psi[v];
  }
  return psi;
}

std::vector<std::size_t> node_frequencies(std::size_t num_vertices, std::span<const Separator> sets) {
  std::vector<std::size_t> psi(num_vertices, 0);
  for (const auto& s : sets) {
    for (Vertex v : s.nodes()) ++psi[v];
  }
  return psi;
}

std::size_t inherited_count(double rho, std::size_t k) {
  if (!(rho > 0.0 && rho <= 1.0)) throw std::invalid_argument("rho must lie in (0, 1]");
  return static_cast<std::size_t>(std::floor(rho * static_cast<double>(k) + 1e-9));
}

Separator recombine(const Problem& problem, std::span<const Separator> population, const RecombinationParams& params,
                    Rng& rng, RecombinationTrace* trace) {
  if (population.empty()) throw std::invalid_argument("recombination needs a nonempty population");
  const std::size_t n = problem.num_vertices();

  std::vector<std::size_t> order(population.size());
  std::iota(order.begin(), order.end(), 0);
  const std::size_t ref_size = std::clamp<std::size_t>(params.reference_size, 1, population.size());
  rng.sample_prefix(order, ref_size);
  order.resize(ref_size);
  std::vector<std::size_t> psi(n, 0);
  for (std::size_t i : order) {
    for (Vertex v : population[i].nodes()) ++psi[v];
  }

  const auto elite = elite_indices(population, std::max<std::size_t>(params.elite_size, 1), rng);
  const std::size_t base_index = elite[rng.below(elite.size())];
  const Separator& base = population[base_index];
  const std::size_t k = base.size();

  std::vector<Vertex> pool(base.nodes().begin(), base.nodes().end());
  for (std::size_t i = pool.size(); i > 1; --i) std::swap(pool[i - 1], pool[rng.below(i)]);
  std::stable_sort(pool.begin(), pool.end(), [&](Vertex a, Vertex b) { return psi[a] > psi[b]; });
  pool.resize(std::min(inherited_count(params.rho, k), pool.size()));

  if (trace != nullptr) {
    trace->reference = order;
    trace->elite = elite;
    trace->base = base_index;
    trace->inherited = pool;
  }

  Separator child(problem, std::move(pool));
  std::vector<Vertex> candidates;
  while (child.size() < k) {
    const ComponentView& view = child.view();
    candidates.clear();
    for (Vertex v = 0; v < static_cast<Vertex>(n); ++v) {
      const std::int32_t c = view.component_of(v);
      if (c != ComponentView::kRemoved && view.size_of(c) > problem.tau) candidates.push_back(v);
    }
    if (candidates.empty()) {
      for (Vertex v = 0; v < static_cast<Vertex>(n); ++v) {
        if (!child.contains(v)) candidates.push_back(v);
      }
    }
    child.insert(problem, candidates[rng.below(candidates.size())]);
  }
  return child;
}

}  // namespace asep
