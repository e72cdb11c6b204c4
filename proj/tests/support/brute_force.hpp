#pragma once

// Independent reference checks used as test oracles. They work from the
// model and policy directly and share no code with the library verifiers.

#include <cstddef>

#include "fondplus/frontend.hpp"
#include "fondplus/model.hpp"
#include "fondplus/translate.hpp"

namespace fondplus::testing {

/// Every maximal path from the initial state under `policy` is finite and
/// ends in a goal.
bool brute_strong(const FondModel& model, const Policy& policy);

/// No reachable non-goal state lacks an applicable policy action, and every
/// reachable state has a policy path to a goal.
bool brute_strong_cyclic(const FondModel& model, const Policy& policy);

/// Trajectory check for Dual-FOND: fails iff a dead end is reachable, or a
/// set R of reachable non-goal states is strongly connected inside R and
/// every state of R whose action is labeled fair keeps all its successors
/// in R. At most 20 reachable states.
bool brute_dual(const DualFond& dual, const Policy& policy);

/// True iff some policy satisfies `check`.
template <class Check>
bool exists_policy(const FondModel& model, Check check);

/// Reachable states of the QNP under its own abstract semantics (valuations
/// of the atoms and of X=0 for each variable), expanding every applicable
/// action, goals included.
std::size_t qnp_abstract_state_count(const Qnp& q);

}  // namespace fondplus::testing

#include "random_models.hpp"

template <class Check>
bool fondplus::testing::exists_policy(const FondModel& model, Check check) {
  bool found = false;
  for_each_policy(model, [&](const Policy& p) {
    found = check(p);
    return !found;
  });
  return found;
}
