#include <deque>

#include "fondplus/model.hpp"

namespace fondplus {

std::optional<std::uint32_t> PolicyGraph::local(StateId s) const {
  if (s.index() >= local_index.size() || local_index[s.index()] < 0) return std::nullopt;
  return static_cast<std::uint32_t>(local_index[s.index()]);
}

std::vector<std::pair<StateId, StateId>> PolicyGraph::edges() const {
  std::vector<std::pair<StateId, StateId>> out;
  for (std::size_t u = 0; u < nodes.size(); ++u)
    for (std::uint32_t v : successors[u]) out.emplace_back(nodes[u], nodes[v]);
  return out;
}

PolicyGraph policy_graph(const FondModel& model, const Policy& policy) {
  PolicyGraph g;
  g.local_index.assign(model.num_states(), -1);

  auto add_node = [&](StateId s) {
    g.local_index[s.index()] = static_cast<std::int32_t>(g.nodes.size());
    g.nodes.push_back(s);
    g.successors.emplace_back();
    g.action.emplace_back();
    g.goal.push_back(model.is_goal(s));
    g.dead_end.push_back(false);
  };

  add_node(model.initial());
  for (std::size_t u = 0; u < g.nodes.size(); ++u) {
    const StateId s = g.nodes[u];
    if (g.goal[u]) continue;
    const auto a = s.index() < policy.num_states() ? policy[s] : std::nullopt;
    if (!a || !model.applicable(s, *a)) {
      g.dead_end[u] = true;
      continue;
    }
    g.action[u] = *a;
    for (StateId t : model.successors(s, *a)) {
      if (g.local_index[t.index()] < 0) add_node(t);
      g.successors[u].push_back(static_cast<std::uint32_t>(g.local_index[t.index()]));
    }
  }
  return g;
}

}  // namespace fondplus
