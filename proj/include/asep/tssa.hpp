#pragma once

#include <chrono>
#include <cstddef>
#include <deque>
#include <optional>
#include <vector>

#include "asep/separator.hpp"

namespace asep {

using Clock = std::chrono::steady_clock;

struct TssaParams {
  std::size_t max_streak = 2000;  ///< non-improving iterations before giving up
  double gamma = 0.2;             ///< tabu tenure scale, capacity floor(gamma * (n - K))
  bool tabu_enabled = true;
  std::optional<Clock::time_point> deadline;
};

/// FIFO of forbidden add-candidates with O(1) membership. A capacity of
/// zero means the list is disabled and push() is a no-op.
class TabuList {
 public:
  TabuList(std::size_t num_vertices, std::size_t capacity);

  [[nodiscard]] bool contains(Vertex v) const { return member_[v] != 0; }
  void push(Vertex v);
  void clear();
  [[nodiscard]] std::size_t size() const { return fifo_.size(); }
  [[nodiscard]] std::size_t capacity() const { return capacity_; }
  [[nodiscard]] const std::deque<Vertex>& entries() const { return fifo_; }

 private:
  std::deque<Vertex> fifo_;
  std::vector<char> member_;
  std::size_t capacity_;
};

std::size_t tabu_capacity(double gamma, std::size_t n, std::size_t k);

/// 1 for an improving move, otherwise exp(-delta * streak / max_streak).
double accept_prob(double delta, std::size_t streak, std::size_t max_streak);

struct MovePlan {
  Vertex added = -1;
  Vertex removed = -1;
  std::size_t value = 0;  ///< objective of S + added - removed
};

/// Add phase: uniform pick among non-tabu vertices outside S (the tabu
/// list is cleared if that set is empty). Remove phase: argmin over
/// S + {u} of the objective after dropping one vertex, random ties.
/// Returns nullopt only when every vertex is already in S.
std::optional<MovePlan> plan_move(const Problem& problem, const Separator& s, TabuList& tabu, RemovalEvaluator& eval,
                                  Rng& rng);

struct Move {
  Separator candidate;
  Vertex added;
  Vertex removed;
};

std::optional<Move> two_phase_move(const Problem& problem, const Separator& s, TabuList& tabu, Rng& rng);

struct TssaStats {
  std::size_t iterations = 0;
  std::size_t improving = 0;
  std::size_t accepted_worse = 0;
  std::size_t max_tabu_size = 0;
  std::size_t tabu_capacity = 0;
  bool timed_out = false;
};

/// Tabu-search simulated annealing at fixed size |s|. Returns the first
/// feasible candidate encountered (including s itself), otherwise the last
/// accepted candidate once the non-improving streak reaches max_streak.
Separator tssa(const Problem& problem, Separator s, const TssaParams& params, Rng& rng, TssaStats* stats = nullptr);

}  // namespace asep
