#include "asep/separator.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace asep {

Separator::Separator(const Problem& problem, std::vector<Vertex> nodes) : nodes_(std::move(nodes)) {
  std::sort(nodes_.begin(), nodes_.end());
  if (std::adjacent_find(nodes_.begin(), nodes_.end()) != nodes_.end()) {
    throw std::invalid_argument("separator contains a repeated vertex");
  }
  mask_ = removal_mask(problem.num_vertices(), nodes_);
  refresh(problem);
}

void Separator::insert(const Problem& problem, Vertex v) {
  if (mask_[v]) throw std::invalid_argument("vertex " + std::to_string(v) + " already in separator");
  nodes_.insert(std::lower_bound(nodes_.begin(), nodes_.end(), v), v);
  mask_[v] = 1;
  refresh(problem);
}

void Separator::erase(const Problem& problem, Vertex v) {
  if (!mask_[v]) throw std::invalid_argument("vertex " + std::to_string(v) + " not in separator");
  nodes_.erase(std::lower_bound(nodes_.begin(), nodes_.end(), v));
  mask_[v] = 0;
  refresh(problem);
}

void Separator::swap_nodes(const Problem& problem, Vertex add, Vertex drop) {
  if (add == drop) return;
  if (mask_[add] || !mask_[drop]) throw std::invalid_argument("invalid swap");
  nodes_.erase(std::lower_bound(nodes_.begin(), nodes_.end(), drop));
  nodes_.insert(std::lower_bound(nodes_.begin(), nodes_.end(), add), add);
  mask_[drop] = 0;
  mask_[add] = 1;
  refresh(problem);
}

void Separator::refresh(const Problem& problem) {
  tau_ = problem.tau;
  view_.rebuild(*problem.graph, mask_);
  excess_ = evaluate(problem.objective, view_, problem.tau);
}

Vertex best_removal(const Separator& s, RemovalEvaluator& eval, Rng& rng, std::size_t* value) {
  return best_removal(s.nodes(), s.view(), eval, rng, value);
}

Vertex best_removal(std::span<const Vertex> nodes, const ComponentView& view, RemovalEvaluator& eval, Rng& rng,
                    std::size_t* value) {
  if (nodes.empty()) throw std::invalid_argument("best_removal on an empty separator");
  eval.attach(view);
  std::size_t best = std::numeric_limits<std::size_t>::max();
  Vertex choice = -1;
  std::uint64_t ties = 0;
  for (Vertex w : nodes) {
    const std::size_t f = eval.excess_without(w);
    if (f < best) {
      best = f;
      choice = w;
      ties = 1;
    } else if (f == best && rng.below(++ties) == 0) {
      choice = w;
    }
  }
  if (value != nullptr) *value = best;
  return choice;
}

std::size_t set_distance(std::span<const Vertex> a, std::span<const Vertex> b) {
  std::size_t common = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++common;
      ++i;
      ++j;
    }
  }
  return a.size() + b.size() - 2 * common;
}

}  // namespace asep
