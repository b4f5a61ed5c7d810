#pragma once

#include <span>

#include "asep/separator.hpp"
#include "asep/tssa.hpp"

namespace asep {

/// Randomized greedy growth: one uniform seed vertex, then repeatedly the
/// highest-centrality vertex of a uniform sample of ceil(eta * |remaining|)
/// candidates (at least one), until the separator is feasible.
Separator grow_to_feasible(const Problem& problem, double eta, std::span<const double> centrality, Rng& rng);

/// Drops the vertex whose removal hurts the objective least and runs TSSA at
/// the reduced size; repeats while TSSA reaches feasibility. A zero TSSA
/// budget (max_streak == 0) disables shrinking.
Separator shrink(const Problem& problem, Separator s, const TssaParams& params, Rng& rng);

/// grow_to_feasible followed by shrink.
Separator construct_solution(const Problem& problem, double eta, std::span<const double> centrality,
                             const TssaParams& params, Rng& rng);

}  // namespace asep
