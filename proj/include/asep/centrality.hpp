#pragma once

#include <vector>

#include "asep/graph.hpp"

namespace asep {

/// Betweenness centrality over unordered pairs {s, t}, s != v != t.
/// Pairs with no connecting path contribute nothing. Brandes, O(nm).
std::vector<double> betweenness(const Graph& g);

}  // namespace asep
