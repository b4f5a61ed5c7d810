#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "asep/graph.hpp"

namespace asep {

/// Connected components of the residual graph G[V \ S].
///
/// Removed vertices carry kRemoved as their component id. Component ids are
/// dense in [0, count()). by_size() lists component ids in non-increasing
/// size order so that "largest component not in some small set" queries
/// touch only a handful of entries.
class ComponentView {
 public:
  static constexpr std::int32_t kRemoved = -1;

  ComponentView() = default;

  /// removed[v] != 0 marks v as part of the separator.
  void rebuild(const Graph& g, std::span<const char> removed);

  [[nodiscard]] std::int32_t component_of(Vertex v) const { return comp_[v]; }
  [[nodiscard]] bool is_removed(Vertex v) const { return comp_[v] == kRemoved; }
  [[nodiscard]] std::span<const std::int32_t> component_ids() const { return comp_; }
  [[nodiscard]] std::span<const std::size_t> sizes() const { return sizes_; }
  [[nodiscard]] std::size_t size_of(std::int32_t c) const { return sizes_[c]; }
  [[nodiscard]] std::span<const std::int32_t> by_size() const { return order_; }
  [[nodiscard]] std::size_t count() const { return sizes_.size(); }
  [[nodiscard]] std::size_t largest() const { return sizes_.empty() ? 0 : sizes_[order_.front()]; }
  [[nodiscard]] std::size_t num_vertices() const { return comp_.size(); }

  /// Builds a view directly from component sizes, without a graph. Used for
  /// evaluating objectives on synthetic decompositions.
  static ComponentView from_sizes(std::span<const std::size_t> sizes);

 private:
  void sort_by_size();

  std::vector<std::int32_t> comp_;
  std::vector<std::size_t> sizes_;
  std::vector<std::int32_t> order_;
  std::vector<Vertex> queue_;
  std::vector<std::size_t> bucket_;
};

ComponentView components_after_removal(const Graph& g, std::span<const Vertex> removed);

/// Mask form of a vertex list, sized to the graph.
std::vector<char> removal_mask(std::size_t n, std::span<const Vertex> removed);

}  // namespace asep
