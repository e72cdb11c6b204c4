#include "graph_util.hpp"

#include <algorithm>
#include <limits>

namespace fondplus::detail {

std::vector<std::uint32_t> scc_ids(const Adjacency& adj) {
  constexpr auto kUnset = std::numeric_limits<std::uint32_t>::max();
  const std::size_t n = adj.size();
  std::vector<std::uint32_t> index(n, kUnset), low(n, 0), comp(n, kUnset);
  std::vector<std::uint32_t> stack;
  std::vector<bool> on_stack(n, false);
  std::vector<std::pair<std::uint32_t, std::size_t>> call;  // node, next edge
  std::uint32_t counter = 0, components = 0;

  for (std::uint32_t root = 0; root < n; ++root) {
    if (index[root] != kUnset) continue;
    call.emplace_back(root, 0);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      auto& [u, next] = call.back();
      if (next < adj[u].size()) {
        const std::uint32_t v = adj[u][next++];
        if (index[v] == kUnset) {
          index[v] = low[v] = counter++;
          stack.push_back(v);
          on_stack[v] = true;
          call.emplace_back(v, 0);
        } else if (on_stack[v]) {
          low[u] = std::min(low[u], index[v]);
        }
        continue;
      }
      const std::uint32_t done = u;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
      if (low[done] == index[done]) {
        std::uint32_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = components;
        } while (w != done);
        ++components;
      }
    }
  }
  return comp;
}

std::vector<bool> on_cycle(const Adjacency& adj, const std::vector<std::uint32_t>& scc) {
  std::vector<std::size_t> comp_size(adj.size(), 0);
  for (auto c : scc) ++comp_size[c];
  std::vector<bool> out(adj.size(), false);
  for (std::uint32_t u = 0; u < adj.size(); ++u) {
    if (comp_size[scc[u]] > 1) out[u] = true;
    for (auto v : adj[u])
      if (v == u) out[u] = true;
  }
  return out;
}

Adjacency reverse(const Adjacency& adj) {
  Adjacency rev(adj.size());
  for (std::uint32_t u = 0; u < adj.size(); ++u)
    for (auto v : adj[u]) rev[v].push_back(u);
  return rev;
}

std::vector<bool> can_reach(const Adjacency& adj, const std::vector<bool>& targets) {
  const Adjacency rev = reverse(adj);
  std::vector<bool> seen = targets;
  std::vector<std::uint32_t> work;
  for (std::uint32_t u = 0; u < adj.size(); ++u)
    if (targets[u]) work.push_back(u);
  while (!work.empty()) {
    const auto u = work.back();
    work.pop_back();
    for (auto p : rev[u])
      if (!seen[p]) {
        seen[p] = true;
        work.push_back(p);
      }
  }
  return seen;
}

}  // namespace fondplus::detail
