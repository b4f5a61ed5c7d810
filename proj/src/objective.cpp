#include "asep/objective.hpp"

#include <stdexcept>

namespace asep {

std::size_t f_prime(const ComponentView& view, std::size_t tau) {
  const std::size_t largest = view.largest();
  return largest > tau ? largest - tau : 0;
}

std::size_t f_double_prime(const ComponentView& view, std::size_t tau) {
  std::size_t total = 0;
  for (std::size_t s : view.sizes()) {
    if (s > tau) total += s - tau;
  }
  return total;
}

std::size_t f_triple_prime(const ComponentView& view, std::size_t tau) {
  std::size_t count = 0;
  for (std::size_t s : view.sizes()) {
    if (s > tau) ++count;
  }
  return count;
}

std::size_t evaluate(Objective kind, const ComponentView& view, std::size_t tau) {
  switch (kind) {
    case Objective::LargestExcess:
      return f_prime(view, tau);
    case Objective::TotalExcess:
      return f_double_prime(view, tau);
    case Objective::OversizedCount:
      return f_triple_prime(view, tau);
  }
  throw std::logic_error("unknown objective");
}

bool is_feasible(const ComponentView& view, std::size_t tau) { return view.largest() <= tau; }

Objective parse_objective(std::string_view name) {
  if (name == "largest") return Objective::LargestExcess;
  if (name == "total") return Objective::TotalExcess;
  if (name == "count") return Objective::OversizedCount;
  throw std::invalid_argument("unknown objective '" + std::string(name) + "' (expected largest|total|count)");
}

std::string_view objective_name(Objective kind) {
  switch (kind) {
    case Objective::LargestExcess:
      return "largest";
    case Objective::TotalExcess:
      return "total";
    case Objective::OversizedCount:
      return "count";
  }
  return "?";
}

}  // namespace asep
