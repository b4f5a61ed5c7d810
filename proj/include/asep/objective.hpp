#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "asep/components.hpp"

namespace asep {

/// Auxiliary objective used to rank fixed-size candidates. All three are
/// zero exactly when every component fits under the threshold.
enum class Objective {
  LargestExcess,   ///< excess of the largest component over tau
  TotalExcess,     ///< summed excess over all oversized components
  OversizedCount,  ///< number of oversized components
};

std::size_t f_prime(const ComponentView& view, std::size_t tau);
std::size_t f_double_prime(const ComponentView& view, std::size_t tau);
std::size_t f_triple_prime(const ComponentView& view, std::size_t tau);

std::size_t evaluate(Objective kind, const ComponentView& view, std::size_t tau);

/// Every component has at most tau vertices. O(1) given the view.
bool is_feasible(const ComponentView& view, std::size_t tau);

/// CLI names: "largest", "total", "count".
Objective parse_objective(std::string_view name);
std::string_view objective_name(Objective kind);

}  // namespace asep
