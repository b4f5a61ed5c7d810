#pragma once

#include <span>
#include <vector>

#include "asep/components.hpp"
#include "asep/objective.hpp"
#include "asep/removal.hpp"
#include "asep/rng.hpp"

namespace asep {

/// Fixed problem data shared by every search component.
struct Problem {
  const Graph* graph;
  std::size_t tau;
  Objective objective = Objective::LargestExcess;

  Problem(const Graph& g, double alpha, Objective kind = Objective::LargestExcess)
      : graph(&g), tau(threshold(alpha, g.num_vertices())), objective(kind) {}
  Problem(const Graph& g, std::size_t tau_, Objective kind) : graph(&g), tau(tau_), objective(kind) {}

  [[nodiscard]] std::size_t num_vertices() const { return graph->num_vertices(); }
};

/// Candidate separator with its residual decomposition and objective value
/// cached. nodes() is kept sorted, so equality is plain vector equality.
class Separator {
 public:
  Separator() = default;
  Separator(const Problem& problem, std::vector<Vertex> nodes);

  void insert(const Problem& problem, Vertex v);
  void erase(const Problem& problem, Vertex v);
  /// insert(add) followed by erase(drop) with a single recomputation.
  void swap_nodes(const Problem& problem, Vertex add, Vertex drop);

  [[nodiscard]] std::span<const Vertex> nodes() const { return nodes_; }
  [[nodiscard]] std::size_t size() const { return nodes_.size(); }
  [[nodiscard]] bool contains(Vertex v) const { return mask_[v] != 0; }
  [[nodiscard]] std::span<const char> mask() const { return mask_; }
  [[nodiscard]] const ComponentView& view() const { return view_; }
  [[nodiscard]] std::size_t excess() const { return excess_; }
  [[nodiscard]] bool feasible() const { return view_.largest() <= tau_; }

  friend bool operator==(const Separator& a, const Separator& b) { return a.nodes_ == b.nodes_; }

 private:
  void refresh(const Problem& problem);

  std::vector<Vertex> nodes_;
  std::vector<char> mask_;
  ComponentView view_;
  std::size_t excess_ = 0;
  std::size_t tau_ = 0;
};

/// argmin over v in s of objective(s \ {v}); ties broken uniformly at random.
/// s must be nonempty.
Vertex best_removal(const Separator& s, RemovalEvaluator& eval, Rng& rng, std::size_t* value = nullptr);
/// Same, for an explicit node list whose removal produced view.
Vertex best_removal(std::span<const Vertex> nodes, const ComponentView& view, RemovalEvaluator& eval, Rng& rng,
                    std::size_t* value = nullptr);

/// |a ∪ b| - |a ∩ b| for sorted vertex lists.
std::size_t set_distance(std::span<const Vertex> a, std::span<const Vertex> b);

}  // namespace asep
