#include "fondplus/termination.hpp"

#include <algorithm>
#include <numeric>

#include "graph_util.hpp"

namespace fondplus {

NodeRelation compute_connected(const PolicyGraph& g) {
  const std::size_t n = g.size();
  NodeRelation conn(n);
  std::vector<bool> seen;
  std::vector<std::uint32_t> work;
  for (std::uint32_t s = 0; s < n; ++s) {
    seen.assign(n, false);
    work.clear();
    for (auto v : g.successors[s]) {
      if (seen[v]) continue;
      seen[v] = true;
      conn.set(s, v);
      work.push_back(v);
    }
    while (!work.empty()) {
      const auto x = work.back();
      work.pop_back();
      if (x == s) continue;  // s may end a path but not pass through it
      for (auto y : g.successors[x]) {
        if (seen[y]) continue;
        seen[y] = true;
        conn.set(s, y);
        work.push_back(y);
      }
    }
  }
  return conn;
}

NodeRelation compute_blocked(const PolicyGraph& g, const std::vector<bool>& terminate) {
  const std::size_t n = g.size();
  NodeRelation open(n);  // a path from s to t avoiding terminating states
  std::vector<std::uint32_t> work;
  for (std::uint32_t s = 0; s < n; ++s) {
    if (terminate[s]) continue;
    work.clear();
    for (auto v : g.successors[s])
      if (!terminate[v] && !open(s, v)) {
        open.set(s, v);
        work.push_back(v);
      }
    while (!work.empty()) {
      const auto x = work.back();
      work.pop_back();
      for (auto y : g.successors[x])
        if (!terminate[y] && !open(s, y)) {
          open.set(s, y);
          work.push_back(y);
        }
    }
  }
  NodeRelation blocked(n);
  for (std::uint32_t s = 0; s < n; ++s)
    for (std::uint32_t t = 0; t < n; ++t)
      if (!open(s, t)) blocked.set(s, t);
  return blocked;
}

NodeRelation compute_blocked_rules(const PolicyGraph& g, const NodeRelation& conn,
                                   const std::vector<bool>& terminate) {
  const std::size_t n = g.size();
  NodeRelation blocked(n);
  const auto preds = detail::reverse(g.successors);
  std::vector<std::uint32_t> pending(n);
  std::vector<std::uint32_t> work;

  for (std::uint32_t t = 0; t < n; ++t) {
    if (terminate[t]) {
      for (std::uint32_t s = 0; s < n; ++s) blocked.set(s, t);
      continue;
    }
    // Open pairs (s,t): connected with s not terminating. Each keeps a count
    // of successors x whose pair (x,t) is still open; at zero it closes.
    auto open = [&](std::uint32_t s) { return conn(s, t) && !terminate[s]; };
    work.clear();
    for (std::uint32_t s = 0; s < n; ++s) {
      if (!open(s)) {
        blocked.set(s, t);
        continue;
      }
      pending[s] = static_cast<std::uint32_t>(
          std::count_if(g.successors[s].begin(), g.successors[s].end(), [&](std::uint32_t x) { return open(x); }));
      if (pending[s] == 0) {
        blocked.set(s, t);
        work.push_back(s);
      }
    }
    while (!work.empty()) {
      const auto x = work.back();
      work.pop_back();
      for (auto p : preds[x]) {
        if (!open(p) || blocked(p, t)) continue;
        if (--pending[p] == 0) {
          blocked.set(p, t);
          work.push_back(p);
        }
      }
    }
  }
  return blocked;
}

bool state_fair(const FondPlusProblem& problem, const PolicyGraph& g, const NodeRelation& blocked, std::uint32_t s) {
  const auto a = g.action[s];
  if (!a) return false;
  for (auto i : problem.in_a_sets(*a)) {
    const auto& b_set = problem.constraints()[i].b_set;
    bool ok = true;
    for (std::uint32_t x = 0; x < g.size() && ok; ++x) {
      const auto bx = g.action[x];
      if (!bx || !std::binary_search(b_set.begin(), b_set.end(), *bx)) continue;
      if (!blocked(s, x) && !blocked(x, s)) ok = false;
    }
    if (ok) return true;
  }
  return false;
}

bool TerminationLabels::terminates(StateId s) const {
  const auto u = graph.local(s);
  return u && terminate[*u];
}

namespace {

class Fixpoint {
 public:
  Fixpoint(const FondPlusProblem& problem, const Policy& policy)
      : problem_(problem), labels_{policy_graph(problem, policy), {}, {}, {}} {
    const PolicyGraph& g = labels_.graph;
    labels_.terminate.assign(g.size(), false);
    labels_.fair.assign(g.size(), false);
    std::vector<std::uint32_t> goals;
    for (std::uint32_t u = 0; u < g.size(); ++u)
      if (g.goal[u]) {
        labels_.terminate[u] = true;
        goals.push_back(u);
      }
    labels_.rounds.push_back(std::move(goals));
    refresh();
  }

  void refresh() {
    const PolicyGraph& g = labels_.graph;
    blocked_ = compute_blocked(g, labels_.terminate);
    for (std::uint32_t u = 0; u < g.size(); ++u) labels_.fair[u] = state_fair(problem_, g, blocked_, u);
  }

  [[nodiscard]] bool eligible(std::uint32_t u) const {
    const PolicyGraph& g = labels_.graph;
    if (labels_.terminate[u] || !g.action[u]) return false;
    const auto& succ = g.successors[u];
    auto done = [&](std::uint32_t v) { return static_cast<bool>(labels_.terminate[v]); };
    if (labels_.fair[u]) return std::any_of(succ.begin(), succ.end(), done);
    return !succ.empty() && std::all_of(succ.begin(), succ.end(), done);
  }

  void run_rounds() {
    while (true) {
      std::vector<std::uint32_t> added;
      for (std::uint32_t u = 0; u < labels_.graph.size(); ++u)
        if (eligible(u)) added.push_back(u);
      if (added.empty()) return;
      for (auto u : added) labels_.terminate[u] = true;
      labels_.rounds.push_back(std::move(added));
      refresh();
    }
  }

  void run_sequential(std::uint64_t seed) {
    std::vector<std::uint32_t> order(labels_.graph.size());
    std::iota(order.begin(), order.end(), 0U);
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<std::uint32_t> added;
      for (auto u : order) {
        if (!eligible(u)) continue;
        labels_.terminate[u] = true;
        added.push_back(u);
        changed = true;
        refresh();
      }
      if (!added.empty()) labels_.rounds.push_back(std::move(added));
    }
  }

  TerminationLabels take() { return std::move(labels_); }

 private:
  const FondPlusProblem& problem_;
  TerminationLabels labels_;
  NodeRelation blocked_;
};

}  // namespace

TerminationLabels terminate_fixpoint(const FondPlusProblem& problem, const Policy& policy, const FixpointOrder& order) {
  Fixpoint fp(problem, policy);
  if (order.kind == FixpointOrder::Kind::rounds)
    fp.run_rounds();
  else
    fp.run_sequential(order.seed);
  return fp.take();
}

Verdict verify_fondplus(const FondPlusProblem& problem, const Policy& policy, const FixpointOrder& order) {
  const TerminationLabels labels = terminate_fixpoint(problem, policy, order);
  const PolicyGraph& g = labels.graph;
  Witness dead{WitnessKind::dead_end, {}, 0};
  for (std::uint32_t u = 0; u < g.size(); ++u)
    if (g.dead_end[u]) dead.states.push_back(g.nodes[u]);
  if (!dead.states.empty()) return Verdict{false, std::move(dead)};
  for (std::uint32_t u = 0; u < g.size(); ++u)
    if (!labels.terminate[u])
      return Verdict{false, Witness{WitnessKind::non_terminating, {g.nodes[u]}, labels.rounds.size()}};
  return Verdict{true, std::nullopt};
}

}  // namespace fondplus
