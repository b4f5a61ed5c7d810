#include "asep/components.hpp"

#include <stdexcept>

namespace asep {

void ComponentView::rebuild(const Graph& g, std::span<const char> removed) {
  const std::size_t n = g.num_vertices();
  if (removed.size() != n) throw std::invalid_argument("removal mask size does not match the graph");
  comp_.assign(n, kRemoved);
  sizes_.clear();
  queue_.resize(n);
  constexpr std::int32_t kUnvisited = -2;
  for (std::size_t v = 0; v < n; ++v) {
    if (!removed[v]) comp_[v] = kUnvisited;
  }
  for (std::size_t root = 0; root < n; ++root) {
    if (comp_[root] != kUnvisited) continue;
    const auto id = static_cast<std::int32_t>(sizes_.size());
    std::size_t head = 0;
    std::size_t tail = 0;
    queue_[tail++] = static_cast<Vertex>(root);
    comp_[root] = id;
    while (head < tail) {
      Vertex u = queue_[head++];
      for (Vertex w : g.neighbors(u)) {
        if (comp_[w] == kUnvisited) {
          comp_[w] = id;
          queue_[tail++] = w;
        }
      }
    }
    sizes_.push_back(tail);
  }
  sort_by_size();
}

ComponentView ComponentView::from_sizes(std::span<const std::size_t> sizes) {
  ComponentView view;
  view.sizes_.assign(sizes.begin(), sizes.end());
  for (std::size_t c = 0; c < sizes.size(); ++c) {
    view.comp_.insert(view.comp_.end(), sizes[c], static_cast<std::int32_t>(c));
  }
  view.sort_by_size();
  return view;
}

void ComponentView::sort_by_size() {
  // Counting sort, descending; sizes are bounded by n.
  const std::size_t limit = comp_.size() + 1;
  bucket_.assign(limit + 1, 0);
  for (std::size_t s : sizes_) ++bucket_[limit - s];
  std::size_t acc = 0;
  for (auto& b : bucket_) {
    std::size_t c = b;
    b = acc;
    acc += c;
  }
  order_.resize(sizes_.size());
  for (std::size_t c = 0; c < sizes_.size(); ++c) {
    order_[bucket_[limit - sizes_[c]]++] = static_cast<std::int32_t>(c);
  }
}

std::vector<char> removal_mask(std::size_t n, std::span<const Vertex> removed) {
  std::vector<char> mask(n, 0);
  for (Vertex v : removed) {
    if (v < 0 || static_cast<std::size_t>(v) >= n) throw std::out_of_range("vertex id outside the graph");
    mask[v] = 1;
  }
  return mask;
}

ComponentView components_after_removal(const Graph& g, std::span<const Vertex> removed) {
  ComponentView view;
  view.rebuild(g, removal_mask(g.num_vertices(), removed));
  return view;
}

}  // namespace asep
