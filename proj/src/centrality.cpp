#include "asep/centrality.hpp"

#include <cstdint>

namespace asep {

std::vector<double> betweenness(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<double> score(n, 0.0);
  std::vector<double> sigma(n);
  std::vector<double> delta(n);
  std::vector<std::int32_t> dist(n);
  std::vector<Vertex> order;
  order.reserve(n);

  for (std::size_t s = 0; s < n; ++s) {
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    std::fill(dist.begin(), dist.end(), -1);
    order.clear();
    sigma[s] = 1.0;
    dist[s] = 0;
    order.push_back(static_cast<Vertex>(s));
    for (std::size_t head = 0; head < order.size(); ++head) {
      Vertex v = order[head];
      for (Vertex w : g.neighbors(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          order.push_back(w);
        }
        if (dist[w] == dist[v] + 1) sigma[w] += sigma[v];
      }
    }
    // Predecessors of w are the neighbours one level closer to s.
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      Vertex w = *it;
      for (Vertex v : g.neighbors(w)) {
        if (dist[v] == dist[w] - 1) delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
      }
      if (static_cast<std::size_t>(w) != s) score[w] += delta[w];
    }
  }
  // Each unordered pair was accumulated from both endpoints.
  for (double& x : score) x *= 0.5;
  return score;
}

}  // namespace asep
