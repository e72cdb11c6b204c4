#include "fondplus/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace fondplus {

namespace {

using Mask = std::uint32_t;

// Strong connectivity of `r` using only edges that stay inside `r`.
bool strongly_connected(Mask r, const std::vector<Mask>& succ_mask, const std::vector<Mask>& pred_mask) {
  const int root = std::countr_zero(r);
  auto closure = [&](const std::vector<Mask>& adj) {
    Mask seen = Mask{1} << root;
    Mask frontier = seen;
    while (frontier != 0) {
      const int u = std::countr_zero(frontier);
      frontier &= frontier - 1;
      const Mask next = adj[static_cast<std::size_t>(u)] & r & ~seen;
      seen |= next;
      frontier |= next;
    }
    return seen;
  };
  if (closure(succ_mask) != r || closure(pred_mask) != r) return false;
  // A single state needs a self-loop to recur.
  if (std::popcount(r) == 1) return (succ_mask[static_cast<std::size_t>(root)] & r) != 0;
  return true;
}

}  // namespace

Verdict fair_lasso_oracle(const FondPlusProblem& problem, const Policy& policy, std::size_t max_nodes) {
  const FondModel& model = problem.model();
  const PolicyGraph g = policy_graph(model, policy);

  for (std::size_t u = 0; u < g.size(); ++u)
    if (g.dead_end[u]) return Verdict{false, Witness{WitnessKind::dead_end, {g.nodes[u]}}};

  // Candidate recurrent states: reachable, non-goal (hence expanded).
  std::vector<std::uint32_t> cand;
  for (std::uint32_t u = 0; u < g.size(); ++u)
    if (!g.goal[u]) cand.push_back(u);
  if (cand.size() > max_nodes || cand.size() > 31)
    throw SizeLimitError("lasso oracle: " + std::to_string(cand.size()) +
                         " reachable non-goal states exceed the bound of " + std::to_string(max_nodes));

  const std::size_t k = cand.size();
  std::vector<std::int32_t> pos(g.size(), -1);
  for (std::size_t i = 0; i < k; ++i) pos[cand[i]] = static_cast<std::int32_t>(i);

  // succ_mask: successors among candidates; leaves_mask: set when some
  // successor is a goal (never recurrent).
  std::vector<Mask> succ_mask(k, 0), pred_mask(k, 0);
  std::vector<bool> has_goal_succ(k, false);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::uint32_t v : g.successors[cand[i]]) {
      if (pos[v] < 0) {
        has_goal_succ[i] = true;
        continue;
      }
      succ_mask[i] |= Mask{1} << pos[v];
      pred_mask[static_cast<std::size_t>(pos[v])] |= Mask{1} << i;
    }
  }

  // Actions used by each candidate, for the B-occurrence test.
  std::vector<ActionId> act(k);
  for (std::size_t i = 0; i < k; ++i) act[i] = *g.action[cand[i]];

  const Mask full = k == 32 ? ~Mask{0} : (Mask{1} << k) - 1;
  for (Mask r = 1; r != 0 && r <= full; ++r) {
    if (!strongly_connected(r, succ_mask, pred_mask)) continue;

    bool fair_trajectory = true;
    for (Mask rest = r; rest != 0 && fair_trajectory; rest &= rest - 1) {
      const auto i = static_cast<std::size_t>(std::countr_zero(rest));
      bool occurrence_fair = false;
      for (std::uint32_t c : problem.in_a_sets(act[i])) {
        const auto& b_set = problem.constraints()[c].b_set;
        bool b_recurs = false;
        for (Mask other = r; other != 0 && !b_recurs; other &= other - 1) {
          const auto j = static_cast<std::size_t>(std::countr_zero(other));
          b_recurs = std::binary_search(b_set.begin(), b_set.end(), act[j]);
        }
        if (!b_recurs) {
          occurrence_fair = true;
          break;
        }
      }
      // A fair occurrence must be followed by every outcome infinitely often.
      if (occurrence_fair && (has_goal_succ[i] || (succ_mask[i] & ~r) != 0)) fair_trajectory = false;
    }
    if (!fair_trajectory) continue;

    Witness w{WitnessKind::recurrent_set, {}};
    for (Mask rest = r; rest != 0; rest &= rest - 1)
      w.states.push_back(g.nodes[cand[static_cast<std::size_t>(std::countr_zero(rest))]]);
    return Verdict{false, std::move(w)};
  }
  return Verdict{true, std::nullopt};
}

}  // namespace fondplus
