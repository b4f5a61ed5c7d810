#include "asep/oracle.hpp"

#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace asep {

namespace {

using Mask = std::uint32_t;

std::vector<Mask> adjacency_masks(const Graph& g) {
  if (g.num_vertices() > kOracleMaxVertices) {
    throw std::invalid_argument("exhaustive oracle limited to " + std::to_string(kOracleMaxVertices) + " vertices");
  }
  std::vector<Mask> adj(g.num_vertices(), 0);
  for (const auto& [u, v] : g.edges()) {
    adj[u] |= Mask{1} << v;
    adj[v] |= Mask{1} << u;
  }
  return adj;
}

bool residual_fits(const std::vector<Mask>& adj, Mask full, Mask removed, std::size_t tau) {
  Mask left = full & ~removed;
  while (left != 0) {
    Mask comp = left & (~left + 1);
    Mask frontier = comp;
    while (frontier != 0) {
      Mask next = 0;
      for (Mask f = frontier; f != 0; f &= f - 1) next |= adj[std::countr_zero(f)];
      next &= left & ~comp;
      comp |= next;
      frontier = next;
    }
    if (static_cast<std::size_t>(std::popcount(comp)) > tau) return false;
    left &= ~comp;
  }
  return true;
}

// Visits k-subsets of {0..n-1} in lexicographic order until pred is true.
template <typename Pred>
bool first_subset(std::size_t n, std::size_t k, Pred pred, std::vector<Vertex>& out) {
  std::vector<Vertex> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    Mask m = 0;
    for (Vertex v : idx) m |= Mask{1} << v;
    if (pred(m)) {
      out = idx;
      return true;
    }
    std::size_t i = k;
    while (i > 0 && static_cast<std::size_t>(idx[i - 1]) == n - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

ExactSeparator brute_force_min_separator(const Graph& g, double alpha) {
  return brute_force_min_separator(g, threshold(alpha, g.num_vertices()));
}

ExactSeparator brute_force_min_separator(const Graph& g, std::size_t tau) {
  const auto adj = adjacency_masks(g);
  const std::size_t n = g.num_vertices();
  const Mask full = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
  ExactSeparator best;
  for (std::size_t k = 0; k <= n; ++k) {
    if (first_subset(n, k, [&](Mask m) { return residual_fits(adj, full, m, tau); }, best.witness)) {
      best.size = k;
      return best;
    }
  }
  throw std::logic_error("removing every vertex is always feasible");
}

std::size_t brute_force_vertex_cover(const Graph& g) {
  adjacency_masks(g);
  const auto edges = g.edges();
  const std::size_t n = g.num_vertices();
  std::vector<Vertex> witness;
  for (std::size_t k = 0; k <= n; ++k) {
    auto covers = [&](Mask m) {
      for (const auto& [u, v] : edges) {
        if (((m >> u) & 1U) == 0 && ((m >> v) & 1U) == 0) return false;
      }
      return true;
    };
    if (first_subset(n, k, covers, witness)) return k;
  }
  throw std::logic_error("the full vertex set is always a cover");
}

bool check_separator(const Graph& g, std::span<const Vertex> nodes, std::size_t tau) {
  const std::size_t n = g.num_vertices();
  std::vector<char> gone(n, 0);
  for (Vertex v : nodes) {
    if (v < 0 || static_cast<std::size_t>(v) >= n) return false;
    gone[v] = 1;
  }
  std::vector<std::size_t> parent(n);
  std::vector<std::size_t> size(n, 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const auto& [u, v] : g.edges()) {
    if (gone[u] || gone[v]) continue;
    std::size_t a = find(u);
    std::size_t b = find(v);
    if (a == b) continue;
    if (size[a] < size[b]) std::swap(a, b);
    parent[b] = a;
    size[a] += size[b];
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (!gone[v] && find(v) == v && size[v] > tau) return false;
  }
  return true;
}

}  // namespace asep
