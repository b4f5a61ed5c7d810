#pragma once

#include <span>
#include <vector>

#include "asep/graph.hpp"

namespace asep {

/// Largest graph the exhaustive oracles accept.
inline constexpr std::size_t kOracleMaxVertices = 20;

struct ExactSeparator {
  std::size_t size = 0;
  std::vector<Vertex> witness;  ///< lexicographically first optimum
};

/// Exhaustive search by increasing cardinality. Throws std::invalid_argument
/// for graphs with more than kOracleMaxVertices vertices.
ExactSeparator brute_force_min_separator(const Graph& g, double alpha);
ExactSeparator brute_force_min_separator(const Graph& g, std::size_t tau);

/// Minimum vertex cover size by exhaustive search.
std::size_t brute_force_vertex_cover(const Graph& g);

/// Feasibility of `nodes` as a separator for threshold tau. Uses union-find
/// over the surviving edges, independently of ComponentView.
bool check_separator(const Graph& g, std::span<const Vertex> nodes, std::size_t tau);

}  // namespace asep
