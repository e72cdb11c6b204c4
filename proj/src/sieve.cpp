#include "fondplus/termination.hpp"

#include <algorithm>

#include "graph_util.hpp"

namespace fondplus {

namespace {

/// Per-node variable masks of the assigned actions.
struct QnpMarks {
  std::vector<std::vector<bool>> dec, inc;  // [node][variable]
};

QnpMarks qnp_marks(const PolicyGraph& g, const QnpAnnotation& ann) {
  const std::size_t vars = ann.variables.size();
  QnpMarks m{std::vector<std::vector<bool>>(g.size(), std::vector<bool>(vars, false)),
             std::vector<std::vector<bool>>(g.size(), std::vector<bool>(vars, false))};
  for (std::uint32_t u = 0; u < g.size(); ++u) {
    if (!g.action[u]) continue;
    for (std::size_t x = 0; x < vars; ++x) {
      m.dec[u][x] = ann.decrements(*g.action[u], x);
      m.inc[u][x] = ann.increments(*g.action[u], x);
    }
  }
  return m;
}

/// Variables incremented by some node of each component.
std::vector<std::vector<bool>> component_increments(const std::vector<std::uint32_t>& scc, const QnpMarks& marks,
                                                    std::size_t vars, const std::vector<bool>* include = nullptr) {
  std::vector<std::vector<bool>> out(scc.size(), std::vector<bool>(vars, false));
  for (std::uint32_t u = 0; u < scc.size(); ++u) {
    if (include && !(*include)[u]) continue;
    for (std::size_t x = 0; x < vars; ++x)
      if (marks.inc[u][x]) out[scc[u]][x] = true;
  }
  return out;
}

}  // namespace

bool sieve_qnp(const FondModel& model, const QnpAnnotation& annotation, const Policy& policy, const SieveOrder& order) {
  const PolicyGraph g = policy_graph(model, policy);
  const QnpMarks marks = qnp_marks(g, annotation);
  const std::size_t vars = annotation.variables.size();
  detail::Adjacency adj = g.successors;
  std::mt19937_64 rng(order.seed);

  while (true) {
    const auto scc = detail::scc_ids(adj);
    const auto comp_inc = component_increments(scc, marks, vars);
    // A path from v back to u exists iff both lie in one component, and then
    // every node of that component lies on such a path.
    auto removable = [&](std::uint32_t u, std::uint32_t v) {
      for (std::size_t x = 0; x < vars; ++x)
        if (marks.dec[u][x] && (scc[u] != scc[v] || !comp_inc[scc[u]][x])) return true;
      return false;
    };
    std::vector<std::pair<std::uint32_t, std::size_t>> candidates;
    for (std::uint32_t u = 0; u < adj.size(); ++u)
      for (std::size_t k = 0; k < adj[u].size(); ++k)
        if (removable(u, adj[u][k])) candidates.emplace_back(u, k);
    if (candidates.empty()) break;

    if (order.kind == SieveOrder::Kind::random) {
      std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
      const auto [u, k] = candidates[pick(rng)];
      adj[u].erase(adj[u].begin() + static_cast<std::ptrdiff_t>(k));
    } else {
      // Positions within a row shrink as we erase, so go back to front.
      for (auto it = candidates.rbegin(); it != candidates.rend(); ++it)
        adj[it->first].erase(adj[it->first].begin() + static_cast<std::ptrdiff_t>(it->second));
    }
  }
  const auto cyc = detail::on_cycle(adj, detail::scc_ids(adj));
  return std::none_of(cyc.begin(), cyc.end(), [](bool b) { return b; });
}

bool qnp_terminates(const FondModel& model, const QnpAnnotation& annotation, const Policy& policy) {
  const PolicyGraph g = policy_graph(model, policy);
  const QnpMarks marks = qnp_marks(g, annotation);
  const std::size_t vars = annotation.variables.size();
  const std::size_t n = g.size();
  std::vector<bool> terminate(n, false);

  while (true) {
    // Cycles avoiding terminating states live in the subgraph of the others.
    std::vector<bool> alive(n);
    for (std::size_t u = 0; u < n; ++u) alive[u] = !terminate[u];
    detail::Adjacency sub(n);
    for (std::uint32_t u = 0; u < n; ++u) {
      if (!alive[u]) continue;
      for (auto v : g.successors[u])
        if (alive[v]) sub[u].push_back(v);
    }
    const auto scc = detail::scc_ids(sub);
    const auto cyc = detail::on_cycle(sub, scc);
    const auto comp_inc = component_increments(scc, marks, vars, &alive);

    std::vector<std::uint32_t> added;
    for (std::uint32_t u = 0; u < n; ++u) {
      if (!alive[u]) continue;
      bool ok = !cyc[u];
      for (std::size_t x = 0; x < vars && !ok; ++x)
        if (marks.dec[u][x] && !comp_inc[scc[u]][x]) ok = true;
      if (ok) added.push_back(u);
    }
    if (added.empty()) break;
    for (auto u : added) terminate[u] = true;
  }
  return std::all_of(terminate.begin(), terminate.end(), [](bool b) { return b; });
}

}  // namespace fondplus
