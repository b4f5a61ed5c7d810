#pragma once

#include <span>
#include <vector>

#include "asep/population.hpp"

namespace asep {

/// Psi(v): number of sets in `sets` that contain v.
std::vector<std::size_t> node_frequencies(std::size_t num_vertices, std::span<const std::vector<Vertex>> sets);
std::vector<std::size_t> node_frequencies(std::size_t num_vertices, std::span<const Separator> sets);

struct RecombinationParams {
  std::size_t reference_size = 25;
  std::size_t elite_size = 5;
  double rho = 0.95;
};

/// What the operator drew; filled on request for inspection in tests.
struct RecombinationTrace {
  std::vector<std::size_t> reference;
  std::vector<std::size_t> elite;
  std::size_t base = 0;
  std::vector<Vertex> inherited;
};

/// Number of base-solution vertices inherited: floor(rho * k).
std::size_t inherited_count(double rho, std::size_t k);

/// Frequent itemset recombination. Samples a reference set, picks a base
/// solution from the elite, keeps the floor(rho * K) base vertices most
/// frequent in the reference set, then fills up to K with vertices drawn
/// uniformly from oversized residual components (from all non-separator
/// vertices once no component is oversized).
Separator recombine(const Problem& problem, std::span<const Separator> population, const RecombinationParams& params,
                    Rng& rng, RecombinationTrace* trace = nullptr);

}  // namespace asep
