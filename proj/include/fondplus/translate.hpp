#pragma once

// Reductions into FOND+: strong, strong-cyclic, QNP, and Dual-FOND planning,
// plus the direct QNP-to-FOND translation.

#include <vector>

#include "fondplus/frontend.hpp"
#include "fondplus/model.hpp"

namespace fondplus {

/// Which actions decrement and increment each numeric variable. Action ids
/// index the compact actions of the translated problem, which are also the
/// ground action ids.
struct QnpAnnotation {
  std::vector<std::string> variables;
  std::vector<std::vector<ActionId>> dec_actions;  // by variable, sorted
  std::vector<std::vector<ActionId>> inc_actions;  // by variable, sorted

  [[nodiscard]] bool decrements(ActionId a, std::size_t variable) const;
  [[nodiscard]] bool increments(ActionId a, std::size_t variable) const;

  friend bool operator==(const QnpAnnotation&, const QnpAnnotation&) = default;
};

struct DirectTranslation {
  CompactFond fond;
  QnpAnnotation annotation;
};

/// Replaces each variable X by a fresh atom p_X standing for X=0 (suffixed
/// with '_' if the name is taken). Inc(X) becomes -p_X; Dec(X) becomes the
/// choice between p_X and -p_X, and several Decs in one action multiply out.
DirectTranslation t_direct(const Qnp& q);

/// <P, {}>: every action adversarial.
FondPlusProblem strong_to_fondplus(const FondModel& model);

/// <P, {A/{}}> with A the non-deterministic actions; no constraint at all
/// when the model is deterministic.
FondPlusProblem strong_cyclic_to_fondplus(const FondModel& model);

struct QnpTranslation {
  FondPlusProblem problem;
  QnpAnnotation annotation;
  DirectTranslation direct;
  std::vector<std::vector<std::uint32_t>> state_atoms;
};

/// Grounds t_direct(q) and adds A_i/B_i per variable, with A_i the actions
/// decrementing x_i and B_i those incrementing it. Variables nobody
/// decrements contribute nothing. SizeLimitError propagates from grounding.
QnpTranslation qnp_to_fondplus(const Qnp& q, const GroundOptions& options = {});

/// FOND model whose non-deterministic actions are labeled fair or
/// adversarial. Deterministic actions behave the same under either label.
struct DualFond {
  FondModel model;
  std::vector<bool> fair;  // by action

  friend bool operator==(const DualFond&, const DualFond&) = default;
};

/// Throws ModelError when a label names an unknown action or a
/// non-deterministic action is left unlabeled.
DualFond make_dual_fond(FondModel model, const std::vector<LabelEntry>& labels);

/// <P, {A/{}}> with A the non-deterministic fair actions; no constraint when
/// there are none.
FondPlusProblem dual_to_fondplus(const DualFond& dual);

}  // namespace fondplus
