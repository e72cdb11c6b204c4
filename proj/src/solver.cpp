#include "fondplus/solver.hpp"

#include <algorithm>
#include <chrono>

#include "fondplus/termination.hpp"
#include "graph_util.hpp"

namespace fondplus {

const char* to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::solved:
      return "solved";
    case SolveStatus::unsolvable:
      return "unsolvable";
    case SolveStatus::resource_limit:
      return "resource_limit";
  }
  return "?";
}

std::vector<bool> goal_reachable_states(const FondModel& model) {
  detail::Adjacency adj(model.num_states());
  std::vector<bool> goal(model.num_states(), false);
  for (std::uint32_t s = 0; s < model.num_states(); ++s) {
    goal[s] = model.is_goal(StateId(s));
    for (const Outcome& o : model.outcomes(StateId(s)))
      for (StateId t : o.successors) adj[s].push_back(t.index());
  }
  return detail::can_reach(adj, goal);
}

bool prune_hopeless(const FondPlusProblem& problem, const PolicyGraph& g, const std::vector<bool>& goal_reachable) {
  const FondModel& model = problem.model();
  for (std::uint32_t u = 0; u < g.size(); ++u) {
    if (!goal_reachable[g.nodes[u].index()]) return true;
    if (g.dead_end[u] && model.outcomes(g.nodes[u]).empty()) return true;
  }
  detail::Adjacency adversarial(g.size());
  for (std::uint32_t u = 0; u < g.size(); ++u) {
    if (!g.action[u] || !problem.always_adversarial(*g.action[u])) continue;
    for (auto v : g.successors[u])
      if (g.action[v] && problem.always_adversarial(*g.action[v])) adversarial[u].push_back(v);
  }
  const auto cyc = detail::on_cycle(adversarial, detail::scc_ids(adversarial));
  return std::any_of(cyc.begin(), cyc.end(), [](bool b) { return b; });
}

namespace {

using Clock = std::chrono::steady_clock;

class Search {
 public:
  Search(const FondPlusProblem& problem, const SolveOptions& options, SolveStats& stats, Clock::time_point start)
      : problem_(problem),
        model_(problem.model()),
        options_(options),
        stats_(stats),
        start_(start),
        goal_reachable_(goal_reachable_states(model_)) {}

  enum class Outcome { solved, exhausted, limit, timeout };

  Outcome run(std::optional<std::uint64_t> backtrack_limit, std::size_t rotation) {
    policy_ = Policy(model_.num_states());
    frames_.clear();
    std::uint64_t local_backtracks = 0;
    bool descend = true;
    while (true) {
      if (out_of_time()) return Outcome::timeout;
      if (descend) {
        const PolicyGraph g = policy_graph(model_, policy_);
        if (!(options_.prune && prune_hopeless(problem_, g, goal_reachable_))) {
          const auto next = next_choice(g);
          if (!next) {
            ++stats_.verifier_calls;
            if (verify_fondplus(problem_, policy_).solves) return Outcome::solved;
          } else {
            frames_.push_back(Frame{*next, ordered_actions(*next, rotation), 0});
            policy_.assign(*next, frames_.back().choices.front());
            ++stats_.nodes_expanded;
            continue;
          }
        }
      }
      // Chronological backtracking to the deepest frame with an untried action.
      ++stats_.backtracks;
      if (backtrack_limit && ++local_backtracks > *backtrack_limit) return Outcome::limit;
      descend = false;
      while (!frames_.empty()) {
        Frame& f = frames_.back();
        if (++f.index < f.choices.size()) {
          policy_.assign(f.state, f.choices[f.index]);
          ++stats_.nodes_expanded;
          descend = true;
          break;
        }
        policy_.unassign(f.state);
        frames_.pop_back();
      }
      if (!descend) return Outcome::exhausted;
    }
  }

  const Policy& policy() const { return policy_; }

 private:
  struct Frame {
    StateId state;
    std::vector<ActionId> choices;
    std::size_t index;
  };

  bool out_of_time() {
    if (!options_.time_budget) return false;
    if (++clock_checks_ % 64 != 0) return false;
    const std::chrono::duration<double> spent = Clock::now() - start_;
    return spent.count() > *options_.time_budget;
  }

  // First reachable non-goal state without an action that has applicable
  // actions. Unassigned states with none stay dead ends for the verifier.
  std::optional<StateId> next_choice(const PolicyGraph& g) const {
    for (std::uint32_t u = 0; u < g.size(); ++u) {
      if (!g.dead_end[u]) continue;
      if (!policy_[g.nodes[u]] && !model_.outcomes(g.nodes[u]).empty()) return g.nodes[u];
    }
    return std::nullopt;
  }

  std::vector<ActionId> ordered_actions(StateId s, std::size_t rotation) const {
    std::vector<std::pair<std::size_t, ActionId>> ranked;
    for (const auto& o : model_.outcomes(s))
      ranked.emplace_back(options_.action_order == ActionOrder::degree ? o.successors.size() : 0, o.action);
    std::sort(ranked.begin(), ranked.end());
    std::vector<ActionId> out;
    for (std::size_t i = 0; i < ranked.size();) {
      std::size_t j = i;
      while (j < ranked.size() && ranked[j].first == ranked[i].first) ++j;
      const std::size_t len = j - i;
      for (std::size_t k = 0; k < len; ++k) out.push_back(ranked[i + (k + rotation) % len].second);
      i = j;
    }
    return out;
  }

  const FondPlusProblem& problem_;
  const FondModel& model_;
  const SolveOptions& options_;
  SolveStats& stats_;
  Clock::time_point start_;
  std::vector<bool> goal_reachable_;
  Policy policy_;
  std::vector<Frame> frames_;
  std::uint64_t clock_checks_ = 0;
};

}  // namespace

SolveResult solve(const FondPlusProblem& problem, const SolveOptions& options) {
  const auto start = Clock::now();
  SolveResult result;
  auto finish = [&](SolveStatus status) {
    result.status = status;
    result.stats.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return result;
  };
  if (problem.model().num_states() > options.max_states) return finish(SolveStatus::resource_limit);

  Search search(problem, options, result.stats, start);
  std::optional<std::uint64_t> limit;
  if (options.restart_on_conflict) limit = 64;
  for (std::size_t rotation = 0;; ++rotation) {
    switch (search.run(limit, rotation)) {
      case Search::Outcome::solved:
        result.policy = search.policy();
        return finish(SolveStatus::solved);
      case Search::Outcome::exhausted:
        return finish(SolveStatus::unsolvable);
      case Search::Outcome::timeout:
        return finish(SolveStatus::resource_limit);
      case Search::Outcome::limit:
        ++result.stats.restarts;
        *limit *= 2;
        break;
    }
  }
}

}  // namespace fondplus
