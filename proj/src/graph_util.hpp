#pragma once

// Small graph helpers over adjacency lists of local node indices.

#include <cstdint>
#include <vector>

namespace fondplus::detail {

using Adjacency = std::vector<std::vector<std::uint32_t>>;

/// Strongly connected component id of every node (Tarjan, iterative).
/// Components are numbered in reverse topological order.
std::vector<std::uint32_t> scc_ids(const Adjacency& adj);

/// Nodes lying on some cycle: members of a component with two or more nodes,
/// or nodes with a self-loop.
std::vector<bool> on_cycle(const Adjacency& adj, const std::vector<std::uint32_t>& scc);

Adjacency reverse(const Adjacency& adj);

/// Nodes from which some node in `targets` can be reached (targets included).
std::vector<bool> can_reach(const Adjacency& adj, const std::vector<bool>& targets);

}  // namespace fondplus::detail
