#include "fondplus/termination.hpp"

#include <algorithm>

#include "graph_util.hpp"

namespace fondplus {

bool dual_terminates(const DualFond& dual, const Policy& policy) {
  const PolicyGraph g = policy_graph(dual.model, policy);
  if (std::any_of(g.dead_end.begin(), g.dead_end.end(), [](bool b) { return b; })) return false;
  std::vector<bool> terminate = g.goal;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::uint32_t u = 0; u < g.size(); ++u) {
      if (terminate[u] || !g.action[u]) continue;
      const auto& succ = g.successors[u];
      auto done = [&](std::uint32_t v) { return static_cast<bool>(terminate[v]); };
      const bool ok = dual.fair[g.action[u]->index()] ? std::any_of(succ.begin(), succ.end(), done)
                                                      : !succ.empty() && std::all_of(succ.begin(), succ.end(), done);
      if (ok) {
        terminate[u] = true;
        changed = true;
      }
    }
  }
  return std::all_of(terminate.begin(), terminate.end(), [](bool b) { return b; });
}

bool verify_strong(const FondModel& model, const Policy& policy) {
  const PolicyGraph g = policy_graph(model, policy);
  if (std::any_of(g.dead_end.begin(), g.dead_end.end(), [](bool b) { return b; })) return false;
  const auto cyc = detail::on_cycle(g.successors, detail::scc_ids(g.successors));
  return std::none_of(cyc.begin(), cyc.end(), [](bool b) { return b; });
}

bool verify_strong_cyclic(const FondModel& model, const Policy& policy) {
  const PolicyGraph g = policy_graph(model, policy);
  if (std::any_of(g.dead_end.begin(), g.dead_end.end(), [](bool b) { return b; })) return false;
  const auto reach = detail::can_reach(g.successors, g.goal);
  return std::all_of(reach.begin(), reach.end(), [](bool b) { return b; });
}

}  // namespace fondplus
