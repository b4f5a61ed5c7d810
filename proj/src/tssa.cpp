#include "asep/tssa.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace asep {

TabuList::TabuList(std::size_t num_vertices, std::size_t capacity)
    : member_(num_vertices, 0), capacity_(capacity) {}

void TabuList::push(Vertex v) {
  if (capacity_ == 0 || member_[v]) return;
  if (fifo_.size() == capacity_) {
    member_[fifo_.front()] = 0;
    fifo_.pop_front();
  }
  fifo_.push_back(v);
  member_[v] = 1;
}

void TabuList::clear() {
  for (Vertex v : fifo_) member_[v] = 0;
  fifo_.clear();
}

std::size_t tabu_capacity(double gamma, std::size_t n, std::size_t k) {
  if (k >= n || gamma <= 0.0) return 0;
  return static_cast<std::size_t>(std::floor(gamma * static_cast<double>(n - k) + 1e-9));
}

double accept_prob(double delta, std::size_t streak, std::size_t max_streak) {
  if (delta < 0.0) return 1.0;
  return std::exp(-delta * static_cast<double>(streak) / static_cast<double>(std::max<std::size_t>(max_streak, 1)));
}

namespace {

std::optional<Vertex> pick_addition(const Separator& s, const TabuList& tabu, Rng& rng, std::vector<Vertex>& scratch) {
  const std::size_t n = s.mask().size();
  auto allowed = [&](Vertex v) { return !s.contains(v) && !tabu.contains(v); };
  // Rejection sampling is uniform; fall back to an explicit list when the
  // allowed set is sparse.
  for (int attempt = 0; attempt < 32; ++attempt) {
    auto v = static_cast<Vertex>(rng.below(n));
    if (allowed(v)) return v;
  }
  scratch.clear();
  for (Vertex v = 0; v < static_cast<Vertex>(n); ++v) {
    if (allowed(v)) scratch.push_back(v);
  }
  if (scratch.empty()) return std::nullopt;
  return scratch[rng.below(scratch.size())];
}

}  // namespace

std::optional<MovePlan> plan_move(const Problem& problem, const Separator& s, TabuList& tabu, RemovalEvaluator& eval,
                                  Rng& rng) {
  struct Workspace {
    std::vector<Vertex> candidates;
    std::vector<Vertex> nodes;
    std::vector<char> mask;
    ComponentView view;
  };
  thread_local Workspace ws;
  auto u = pick_addition(s, tabu, rng, ws.candidates);
  if (!u) {
    tabu.clear();
    u = pick_addition(s, tabu, rng, ws.candidates);
    if (!u) return std::nullopt;
  }
  ws.mask.assign(s.mask().begin(), s.mask().end());
  ws.mask[*u] = 1;
  ws.view.rebuild(*problem.graph, ws.mask);
  ws.nodes.assign(s.nodes().begin(), s.nodes().end());
  ws.nodes.push_back(*u);
  MovePlan plan;
  plan.added = *u;
  plan.removed = best_removal(ws.nodes, ws.view, eval, rng, &plan.value);
  return plan;
}

std::optional<Move> two_phase_move(const Problem& problem, const Separator& s, TabuList& tabu, Rng& rng) {
  RemovalEvaluator eval(*problem.graph, problem.tau, problem.objective);
  auto plan = plan_move(problem, s, tabu, eval, rng);
  if (!plan) return std::nullopt;
  Separator candidate = s;
  candidate.swap_nodes(problem, plan->added, plan->removed);
  return Move{std::move(candidate), plan->added, plan->removed};
}

Separator tssa(const Problem& problem, Separator s, const TssaParams& params, Rng& rng, TssaStats* stats) {
  TssaStats local;
  TssaStats& st = stats != nullptr ? *stats : local;
  st = TssaStats{};
  if (s.feasible() || s.size() == 0 || s.size() >= problem.num_vertices()) return s;

  const std::size_t capacity =
      params.tabu_enabled ? tabu_capacity(params.gamma, problem.num_vertices(), s.size()) : 0;
  TabuList tabu(problem.num_vertices(), capacity);
  st.tabu_capacity = capacity;
  RemovalEvaluator eval(*problem.graph, problem.tau, problem.objective);

  std::size_t streak = 0;
  while (streak < params.max_streak) {
    if (params.deadline && (st.iterations & 63) == 0 && Clock::now() >= *params.deadline) {
      st.timed_out = true;
      break;
    }
    ++st.iterations;
    auto plan = plan_move(problem, s, tabu, eval, rng);
    if (!plan) break;
    if (plan->value == 0) {
      s.swap_nodes(problem, plan->added, plan->removed);
      return s;
    }
    const double delta = static_cast<double>(plan->value) - static_cast<double>(s.excess());
    if (delta < 0.0) {
      s.swap_nodes(problem, plan->added, plan->removed);
      streak = 0;
      ++st.improving;
    } else {
      if (rng.uniform() < accept_prob(delta, streak, params.max_streak)) {
        s.swap_nodes(problem, plan->added, plan->removed);
        ++st.accepted_worse;
      }
      ++streak;
      tabu.push(plan->added);
      st.max_tabu_size = std::max(st.max_tabu_size, tabu.size());
    }
  }
  return s;
}

}  // namespace asep
