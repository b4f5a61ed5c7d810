#include "asep/removal.hpp"

#include <algorithm>
#include <stdexcept>

namespace asep {

RemovalEvaluator::RemovalEvaluator(const Graph& g, std::size_t tau, Objective kind)
    : graph_(&g), tau_(tau), kind_(kind), mark_(g.num_vertices(), 0) {}

void RemovalEvaluator::attach(const ComponentView& view) {
  view_ = &view;
  baseline_ = kind_ == Objective::LargestExcess ? 0 : evaluate(kind_, view, tau_);
  if (mark_.size() < view.count()) mark_.resize(view.count(), 0);
}

std::size_t RemovalEvaluator::excess_without(Vertex w) {
  if (view_ == nullptr) throw std::logic_error("RemovalEvaluator used before attach()");
  const ComponentView& view = *view_;
  if (!view.is_removed(w)) throw std::invalid_argument("vertex " + std::to_string(w) + " is not in the separator");

  if (++epoch_ == 0) {
    std::fill(mark_.begin(), mark_.end(), 0);
    epoch_ = 1;
  }
  touched_.clear();
  std::size_t merged = 1;
  for (Vertex u : graph_->neighbors(w)) {
    const std::int32_t c = view.component_of(u);
    if (c == ComponentView::kRemoved || mark_[c] == epoch_) continue;
    mark_[c] = epoch_;
    touched_.push_back(c);
    merged += view.size_of(c);
  }
  auto excess = [this](std::size_t s) { return s > tau_ ? s - tau_ : std::size_t{0}; };

  switch (kind_) {
    case Objective::LargestExcess: {
      std::size_t largest_other = 0;
      for (std::int32_t c : view.by_size()) {
        if (mark_[c] != epoch_) {
          largest_other = view.size_of(c);
          break;
        }
      }
      return excess(std::max(merged, largest_other));
    }
    case Objective::TotalExcess: {
      std::size_t value = baseline_ + excess(merged);
      for (std::int32_t c : touched_) value -= excess(view.size_of(c));
      return value;
    }
    case Objective::OversizedCount: {
      std::size_t value = baseline_ + (merged > tau_ ? 1 : 0);
      for (std::int32_t c : touched_) value -= view.size_of(c) > tau_ ? 1 : 0;
      return value;
    }
  }
  throw std::logic_error("unknown objective");
}

std::size_t removal_eval(const Graph& g, const ComponentView& view, Vertex w, std::size_t tau, Objective kind) {
  RemovalEvaluator eval(g, tau, kind);
  eval.attach(view);
  return eval.excess_without(w);
}

}  // namespace asep
