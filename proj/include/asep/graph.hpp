#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace asep {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Immutable undirected simple graph in adjacency-list (CSR) form.
class Graph {
 public:
  Graph() = default;

  /// Throws GraphError on self-loops, duplicate edges or ids out of range.
  Graph(std::size_t n, std::span<const Edge> edges);

  [[nodiscard]] std::size_t num_vertices() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  [[nodiscard]] std::size_t num_edges() const { return neighbors_.size() / 2; }

  [[nodiscard]] std::span<const Vertex> neighbors(Vertex v) const {
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
  }
  [[nodiscard]] std::size_t degree(Vertex v) const {
    return static_cast<std::size_t>(offsets_[v + 1] - offsets_[v]);
  }
  [[nodiscard]] bool has_edge(Vertex u, Vertex v) const;

  /// Edges with u < v, sorted lexicographically.
  [[nodiscard]] std::vector<Edge> edges() const;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> neighbors_;
};

/// Parses the "n m" + m lines of "u v" edge-list format. '#' lines are
/// comments; CRLF is accepted. With one_based, ids are shifted down by one.
Graph parse_edge_list(std::string_view text, bool one_based = false);
Graph load_edge_list(const std::string& path, bool one_based = false);

std::string to_edge_list(const Graph& g);
void save_edge_list(const Graph& g, const std::string& path);

/// ceil(alpha * n); alpha must lie in [1/n, 1).
std::size_t threshold(double alpha, std::size_t n);

}  // namespace asep
