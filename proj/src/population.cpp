#include "asep/population.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace asep {

void repair_population(const Problem& problem, Population& population, std::size_t k, Rng& rng) {
  RemovalEvaluator eval(*problem.graph, problem.tau, problem.objective);
  for (auto& member : population) {
    if (member.size() < k) {
      throw std::logic_error("population member of size " + std::to_string(member.size()) +
                             " is smaller than the target size " + std::to_string(k));
    }
    while (member.size() > k) member.erase(problem, best_removal(member, eval, rng));
  }
}

std::vector<std::size_t> total_distances(std::span<const Separator> members) {
  if (members.empty()) return {};
  const std::size_t n = members.front().mask().size();
  std::vector<std::size_t> freq(n, 0);
  std::size_t total_size = 0;
  for (const auto& s : members) {
    total_size += s.size();
    for (Vertex v : s.nodes()) ++freq[v];
  }
  // sum_j (|Si| + |Sj| - 2|Si ∩ Sj|) over j != i.
  const std::size_t others = members.size() - 1;
  std::vector<std::size_t> d(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) {
    std::size_t shared = 0;
    for (Vertex v : members[i].nodes()) shared += freq[v] - 1;
    d[i] = others * members[i].size() + (total_size - members[i].size()) - 2 * shared;
  }
  return d;
}

std::size_t distance(std::span<const Separator> members, std::size_t index) {
  std::size_t d = 0;
  for (std::size_t j = 0; j < members.size(); ++j) {
    if (j != index) d += set_distance(members[index].nodes(), members[j].nodes());
  }
  return d;
}

std::vector<std::size_t> min_ranks(std::span<const std::size_t> keys, bool ascending) {
  std::vector<std::size_t> idx(keys.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return ascending ? keys[a] < keys[b] : keys[a] > keys[b];
  });
  std::vector<std::size_t> rank(keys.size());
  for (std::size_t pos = 0; pos < idx.size(); ++pos) {
    if (pos > 0 && keys[idx[pos]] == keys[idx[pos - 1]]) {
      rank[idx[pos]] = rank[idx[pos - 1]];
    } else {
      rank[idx[pos]] = pos + 1;
    }
  }
  return rank;
}

std::vector<double> scores(std::span<const Separator> members, double mu) {
  std::vector<std::size_t> quality(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) quality[i] = members[i].excess();
  const auto d = total_distances(members);
  const auto rq = min_ranks(quality, true);
  const auto rd = min_ranks(d, false);
  std::vector<double> q(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) {
    q[i] = mu * static_cast<double>(rq[i]) + (1.0 - mu) * static_cast<double>(rd[i]);
  }
  return q;
}

ManageOutcome manage(Population& population, Separator candidate, double mu, Rng& rng) {
  if (!(mu >= 0.0 && mu <= 1.0)) throw std::invalid_argument("mu must lie in [0, 1]");
  ManageOutcome out;
  for (const auto& member : population) {
    if (member == candidate) {
      out.duplicate = true;
      return out;
    }
  }
  population.push_back(std::move(candidate));
  const auto q = scores(population, mu);
  const std::size_t cand = population.size() - 1;
  const double worst = *std::max_element(q.begin(), q.end());

  std::vector<std::size_t> incumbents;
  for (std::size_t i = 0; i < cand; ++i) {
    if (q[i] == worst) incumbents.push_back(i);
  }
  if (incumbents.empty()) {
    population.pop_back();
    return out;
  }
  const std::size_t victim = incumbents[rng.below(incumbents.size())];
  population[victim] = std::move(population.back());
  population.pop_back();
  out.inserted = true;
  out.replaced = victim;
  return out;
}

std::vector<std::size_t> elite_indices(std::span<const Separator> members, std::size_t count, Rng& rng) {
  const auto d = total_distances(members);
  std::vector<std::size_t> idx(members.size());
  std::iota(idx.begin(), idx.end(), 0);
  for (std::size_t i = idx.size(); i > 1; --i) std::swap(idx[i - 1], idx[rng.below(i)]);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (members[a].excess() != members[b].excess()) return members[a].excess() < members[b].excess();
    return d[a] > d[b];
  });
  idx.resize(std::min(count, idx.size()));
  return idx;
}

}  // namespace asep
