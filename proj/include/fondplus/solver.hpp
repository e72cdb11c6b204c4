#pragma once

// Guess-and-check policy synthesis for FOND+ problems.

#include <cstdint>
#include <optional>

#include "fondplus/model.hpp"

namespace fondplus {

enum class ActionOrder {
  declaration,  // action id order
  degree,       // fewest successors first, ties by action id
};

struct SolveOptions {
  std::size_t max_states = 200000;
  ActionOrder action_order = ActionOrder::degree;
  /// Restart after a growing number of backtracks, rotating the order of
  /// equally ranked actions. The limit doubles on every restart, so the
  /// search stays complete.
  bool restart_on_conflict = false;
  std::optional<double> time_budget;  // seconds
  /// Cut branches that prune_hopeless proves dead. Off only for tests that
  /// compare against unpruned enumeration.
  bool prune = true;
};

enum class SolveStatus { solved, unsolvable, resource_limit };

const char* to_string(SolveStatus status);

struct SolveStats {
  std::uint64_t nodes_expanded = 0;  // action assignments tried
  std::uint64_t verifier_calls = 0;  // complete candidates checked
  std::uint64_t backtracks = 0;
  std::uint64_t restarts = 0;
  double elapsed_ms = 0;
};

struct SolveResult {
  SolveStatus status = SolveStatus::unsolvable;
  std::optional<Policy> policy;  // present iff solved
  SolveStats stats;
};

/// Depth-first search over policies grown along the reachable frontier: the
/// first unassigned reachable non-goal state in BFS order gets each of its
/// applicable actions in turn, with chronological backtracking. A policy
/// with no unassigned reachable state is returned iff verify_fondplus
/// accepts it. Deterministic for fixed options apart from elapsed time.
SolveResult solve(const FondPlusProblem& problem, const SolveOptions& options = {});

/// True when no completion of `policy` can solve the problem: a reachable
/// non-goal state has no applicable action, a reachable state cannot reach
/// any goal in the model at all, or a cycle runs through assigned states
/// whose actions belong to no A set (such states are never fair, so none of
/// them can be the first on the cycle to terminate). `goal_reachable` is
/// indexed by state and comes from goal_reachable_states.
bool prune_hopeless(const FondPlusProblem& problem, const PolicyGraph& graph, const std::vector<bool>& goal_reachable);

/// States from which some goal is reachable using any actions.
std::vector<bool> goal_reachable_states(const FondModel& model);

}  // namespace fondplus
