#pragma once

#include <optional>
#include <span>
#include <vector>

#include "asep/separator.hpp"

namespace asep {

using Population = std::vector<Separator>;

/// Greedily drops, from every member larger than k, the vertex whose removal
/// increases the objective least, until each member has exactly k vertices.
/// Throws std::logic_error if a member is already smaller than k.
void repair_population(const Problem& problem, Population& population, std::size_t k, Rng& rng);

/// d(S_i) for every member: summed set distance to all other members.
/// Computed from vertex frequencies in O(sum of member sizes).
std::vector<std::size_t> total_distances(std::span<const Separator> members);

/// d for one member index, by direct pairwise summation.
std::size_t distance(std::span<const Separator> members, std::size_t index);

/// Competition ranks (1 + number of strictly better keys). ascending=true
/// treats smaller keys as better.
std::vector<std::size_t> min_ranks(std::span<const std::size_t> keys, bool ascending);

/// Q = mu * rank(objective, smaller is better) + (1 - mu) * rank(distance,
/// larger is better) over the given members.
std::vector<double> scores(std::span<const Separator> members, double mu);

struct ManageOutcome {
  bool inserted = false;
  bool duplicate = false;
  std::optional<std::size_t> replaced;  ///< index of the evicted incumbent
};

/// Scores P + {candidate} and evicts the member with the largest Q. Exact
/// duplicates of an incumbent are discarded up front. When several members
/// share the largest Q an incumbent is evicted (uniformly among them), so
/// the candidate is dropped only when it is the unique worst.
ManageOutcome manage(Population& population, Separator candidate, double mu, Rng& rng);

/// Indices of the `count` best members: smallest objective, then largest
/// distance, then uniformly random.
std::vector<std::size_t> elite_indices(std::span<const Separator> members, std::size_t count, Rng& rng);

}  // namespace asep
