#pragma once

#include <cstdint>
#include <vector>

#include "asep/components.hpp"
#include "asep/objective.hpp"

namespace asep {

/// Scores S \ {w} for every w in S without recomputing components.
///
/// Reinstating w merges w with the distinct components adjacent to it, so
/// only deg(w) component ids are touched. The largest untouched component
/// is found by walking ComponentView::by_size() past merged ids, which is
/// at most deg(w) + 1 steps.
///
/// One evaluator per worker: excess_without() uses internal scratch.
class RemovalEvaluator {
 public:
  RemovalEvaluator(const Graph& g, std::size_t tau, Objective kind = Objective::LargestExcess);

  /// Binds a view; O(T) for TotalExcess/OversizedCount, O(1) otherwise.
  /// The view must outlive subsequent excess_without() calls.
  void attach(const ComponentView& view);

  /// Objective value of S \ {w}. Throws std::invalid_argument if w is not
  /// removed in the attached view.
  [[nodiscard]] std::size_t excess_without(Vertex w);

  [[nodiscard]] std::size_t tau() const { return tau_; }
  [[nodiscard]] Objective kind() const { return kind_; }

 private:
  const Graph* graph_;
  const ComponentView* view_ = nullptr;
  std::size_t tau_;
  Objective kind_;
  std::size_t baseline_ = 0;
  std::vector<std::uint32_t> mark_;
  std::uint32_t epoch_ = 0;
  std::vector<std::int32_t> touched_;
};

/// Objective of S \ {w} given the view of S.
std::size_t removal_eval(const Graph& g, const ComponentView& view, Vertex w, std::size_t tau,
                         Objective kind = Objective::LargestExcess);

}  // namespace asep
