#pragma once

// Small graph builders and naive reference computations shared by the test
// binaries. Nothing here calls into the optimized code paths it checks.

#include <algorithm>
#include <cstdint>
#include <queue>
#include <vector>

#include "asep/generator.hpp"
#include "asep/graph.hpp"
#include "asep/rng.hpp"

namespace asep::testing {

inline Graph path_graph(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  return Graph(n, e);
}

inline Graph cycle_graph(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  return Graph(n, e);
}

inline Graph star_graph(std::size_t leaves) {
  std::vector<Edge> e;
  for (std::size_t i = 1; i <= leaves; ++i) e.emplace_back(0, static_cast<Vertex>(i));
  return Graph(leaves + 1, e);
}

inline Graph complete_graph(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) e.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return Graph(n, e);
}

inline Graph random_graph(Rng& rng, std::size_t n_min, std::size_t n_max, double p_min, double p_max) {
  InstanceSpec spec;
  spec.n = n_min + rng.below(n_max - n_min + 1);
  spec.p = p_min + (p_max - p_min) * rng.uniform();
  spec.seed = rng.next();
  spec.model = rng.below(2) == 0 ? ErModel::Gilbert : ErModel::Incremental;
  return generate_er(spec);
}

inline std::vector<Vertex> random_subset(Rng& rng, std::size_t n, std::size_t k) {
  std::vector<Vertex> all(n);
  for (std::size_t v = 0; v < n; ++v) all[v] = static_cast<Vertex>(v);
  rng.sample_prefix(all, k);
  all.resize(k);
  std::sort(all.begin(), all.end());
  return all;
}

/// Component sizes of G[V \ removed] by plain DFS over an edge scan.
inline std::vector<std::size_t> naive_component_sizes(const Graph& g, const std::vector<Vertex>& removed) {
  const std::size_t n = g.num_vertices();
  std::vector<char> gone(n, 0);
  for (Vertex v : removed) gone[v] = 1;
  std::vector<std::vector<Vertex>> adj(n);
  for (const auto& [u, v] : g.edges()) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<char> seen(n, 0);
  std::vector<std::size_t> sizes;
  for (std::size_t r = 0; r < n; ++r) {
    if (gone[r] || seen[r]) continue;
    std::size_t count = 0;
    std::vector<Vertex> stack{static_cast<Vertex>(r)};
    seen[r] = 1;
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      ++count;
      for (Vertex y : adj[x]) {
        if (!gone[y] && !seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
    sizes.push_back(count);
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

inline std::size_t naive_largest_excess(const std::vector<std::size_t>& sizes, std::size_t tau) {
  std::size_t largest = sizes.empty() ? 0 : *std::max_element(sizes.begin(), sizes.end());
  return largest > tau ? largest - tau : 0;
}

inline std::size_t naive_total_excess(const std::vector<std::size_t>& sizes, std::size_t tau) {
  std::size_t t = 0;
  for (auto s : sizes) t += s > tau ? s - tau : 0;
  return t;
}

inline std::size_t naive_oversized(const std::vector<std::size_t>& sizes, std::size_t tau) {
  return static_cast<std::size_t>(std::count_if(sizes.begin(), sizes.end(), [&](auto s) { return s > tau; }));
}

/// Betweenness over ORDERED pairs (s, t), s != u != t, from all-pairs BFS
/// distance and path counts: sigma_st(u) = sigma_su * sigma_ut when
/// d(s,u) + d(u,t) = d(s,t).
inline std::vector<double> ordered_pair_betweenness(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
  std::vector<std::vector<double>> sigma(n, std::vector<double>(n, 0.0));
  for (std::size_t s = 0; s < n; ++s) {
    std::queue<Vertex> q;
    dist[s][s] = 0;
    sigma[s][s] = 1.0;
    q.push(static_cast<Vertex>(s));
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      for (Vertex w : g.neighbors(v)) {
        if (dist[s][w] < 0) {
          dist[s][w] = dist[s][v] + 1;
          q.push(w);
        }
        if (dist[s][w] == dist[s][v] + 1) sigma[s][w] += sigma[s][v];
      }
    }
  }
  std::vector<double> score(n, 0.0);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = 0; t < n; ++t) {
      if (s == t || dist[s][t] < 0) continue;
      for (std::size_t u = 0; u < n; ++u) {
        if (u == s || u == t || dist[s][u] < 0 || dist[u][t] < 0) continue;
        if (dist[s][u] + dist[u][t] == dist[s][t]) score[u] += sigma[s][u] * sigma[u][t] / sigma[s][t];
      }
    }
  }
  return score;
}

/// Explicit enumeration of every shortest s-t path (small graphs only),
/// ordered pairs.
inline std::vector<double> enumerated_betweenness(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<double> score(n, 0.0);
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<int> d(n, -1);
    std::queue<Vertex> q;
    d[s] = 0;
    q.push(static_cast<Vertex>(s));
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      for (Vertex w : g.neighbors(v)) {
        if (d[w] < 0) {
          d[w] = d[v] + 1;
          q.push(w);
        }
      }
    }
    for (std::size_t t = 0; t < n; ++t) {
      if (t == s || d[t] < 0) continue;
      std::vector<std::vector<Vertex>> paths;
      std::vector<Vertex> cur{static_cast<Vertex>(s)};
      auto dfs = [&](auto&& self, Vertex v) -> void {
        if (static_cast<std::size_t>(v) == t) {
          paths.push_back(cur);
          return;
        }
        for (Vertex w : g.neighbors(v)) {
          if (d[w] == d[v] + 1 && d[w] <= d[t]) {
            cur.push_back(w);
            self(self, w);
            cur.pop_back();
          }
        }
      };
      dfs(dfs, static_cast<Vertex>(s));
      for (const auto& p : paths) {
        for (std::size_t i = 1; i + 1 < p.size(); ++i) score[p[i]] += 1.0 / static_cast<double>(paths.size());
      }
    }
  }
  return score;
}

}  // namespace asep::testing
