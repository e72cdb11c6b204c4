#pragma once

#include "fondplus/model.hpp"

namespace fondplus {

/// Largest number of reachable non-goal states the lasso oracle will enumerate.
inline constexpr std::size_t kLassoOracleMaxNodes = 16;

/// Ground-truth check of "every fair maximal trajectory reaches the goal",
/// working directly from the trajectory-level fairness definitions.
///
/// A policy fails iff a reachable non-goal state is a dead end, or some set R
/// of reachable non-goal states can be the recurrent set of a fair infinite
/// trajectory: R is strongly connected through policy edges inside R, and
/// every s in R whose action is fair in R (it belongs to some A_i while no
/// state of R uses an action of B_i) has all of F(pi(s), s) inside R.
///
/// Enumerates subsets of the reachable states, so it refuses graphs with more
/// than `max_nodes` reachable non-goal states (SizeLimitError).
Verdict fair_lasso_oracle(const FondPlusProblem& problem, const Policy& policy,
                          std::size_t max_nodes = kLassoOracleMaxNodes);

}  // namespace fondplus
