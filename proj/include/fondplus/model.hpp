#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "fondplus/errors.hpp"
#include "fondplus/ids.hpp"

namespace fondplus {

struct Transition {
  StateId from;
  ActionId action;
  StateId to;

  friend bool operator==(const Transition&, const Transition&) = default;
};

/// Unvalidated description of an explicit FOND model. Turned into a FondModel
/// once validate_model accepts it.
struct ModelData {
  std::vector<std::string> state_labels;
  std::vector<std::string> action_names;
  StateId initial;
  std::vector<StateId> goals;
  std::vector<Transition> transitions;
};

/// Throws ModelError naming the first violated invariant.
void validate_model(const ModelData& data);

/// Successor set of one applicable action in one state.
struct Outcome {
  ActionId action;
  std::vector<StateId> successors;  // sorted, non-empty

  friend bool operator==(const Outcome&, const Outcome&) = default;
};

/// Explicit state-transition system <S, s0, S_G, Act, A, F>. Immutable once
/// constructed; an action is applicable in s iff F(a, s) is non-empty.
class FondModel {
 public:
  explicit FondModel(ModelData data);

  [[nodiscard]] std::size_t num_states() const { return labels_.size(); }
  [[nodiscard]] std::size_t num_actions() const { return action_names_.size(); }

  [[nodiscard]] StateId initial() const { return initial_; }
  [[nodiscard]] bool is_goal(StateId s) const { return goal_flags_[s.index()]; }
  [[nodiscard]] const std::vector<StateId>& goals() const { return goals_; }

  [[nodiscard]] const std::string& label(StateId s) const { return labels_[s.index()]; }
  [[nodiscard]] const std::string& action_name(ActionId a) const {
    return action_names_[a.index()];
  }
  [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
  [[nodiscard]] const std::vector<std::string>& action_names() const { return action_names_; }

  [[nodiscard]] std::optional<StateId> find_state(std::string_view label) const;
  [[nodiscard]] std::optional<ActionId> find_action(std::string_view name) const;

  /// Applicable actions of `s` with their successor sets, ordered by action id.
  [[nodiscard]] std::span<const Outcome> outcomes(StateId s) const {
    return outcomes_[s.index()];
  }
  [[nodiscard]] bool applicable(StateId s, ActionId a) const;

  /// F(a, s). Throws ModelError when `a` is not applicable in `s`.
  [[nodiscard]] std::span<const StateId> successors(StateId s, ActionId a) const;

  /// True iff |F(a, s)| >= 2 for some state s.
  [[nodiscard]] bool is_nondeterministic(ActionId a) const {
    return nondeterministic_[a.index()];
  }

  /// All transitions, sorted by (from, action, to).
  [[nodiscard]] std::vector<Transition> transitions() const;

  friend bool operator==(const FondModel&, const FondModel&);

 private:
  const Outcome* find_outcome(StateId s, ActionId a) const;

  std::vector<std::string> labels_;
  std::vector<std::string> action_names_;
  StateId initial_;
  std::vector<StateId> goals_;
  std::vector<bool> goal_flags_;
  std::vector<std::vector<Outcome>> outcomes_;
  std::vector<bool> nondeterministic_;
  std::unordered_map<std::string, StateId> state_index_;
  std::unordered_map<std::string, ActionId> action_index_;
};

/// Conditional fairness assumption A/B. Both sets are kept sorted and unique.
struct FairnessAssumption {
  std::vector<ActionId> a_set;
  std::vector<ActionId> b_set;

  friend bool operator==(const FairnessAssumption&, const FairnessAssumption&) = default;
};

/// Throws ModelError unless every assumption has a non-empty A of
/// non-deterministic actions, disjoint from B, over actions of `model`.
void validate_constraints(const FondModel& model, const std::vector<FairnessAssumption>& constraints);

/// A FOND model extended with a list of fairness assumptions.
class FondPlusProblem {
 public:
  FondPlusProblem(FondModel model, std::vector<FairnessAssumption> constraints);

  [[nodiscard]] const FondModel& model() const { return model_; }
  [[nodiscard]] const std::vector<FairnessAssumption>& constraints() const { return constraints_; }

  /// Indices of the constraints whose A (resp. B) set contains `a`.
  [[nodiscard]] std::span<const std::uint32_t> in_a_sets(ActionId a) const {
    return a_membership_[a.index()];
  }
  [[nodiscard]] std::span<const std::uint32_t> in_b_sets(ActionId a) const {
    return b_membership_[a.index()];
  }
  /// True iff `a` belongs to no A set, i.e. it is adversarial everywhere.
  [[nodiscard]] bool always_adversarial(ActionId a) const {
    return a_membership_[a.index()].empty();
  }

  friend bool operator==(const FondPlusProblem& x, const FondPlusProblem& y) {
    return x.model_ == y.model_ && x.constraints_ == y.constraints_;
  }

 private:
  FondModel model_;
  std::vector<FairnessAssumption> constraints_;
  std::vector<std::vector<std::uint32_t>> a_membership_;
  std::vector<std::vector<std::uint32_t>> b_membership_;
};

/// Partial map from states to actions.
class Policy {
 public:
  Policy() = default;
  explicit Policy(std::size_t num_states) : assignment_(num_states) {}

  [[nodiscard]] std::size_t num_states() const { return assignment_.size(); }
  [[nodiscard]] std::optional<ActionId> operator[](StateId s) const { return assignment_[s.index()]; }

  void assign(StateId s, ActionId a) { assignment_[s.index()] = a; }
  void unassign(StateId s) { assignment_[s.index()].reset(); }

  [[nodiscard]] std::size_t assigned_count() const;

  friend bool operator==(const Policy&, const Policy&) = default;

 private:
  std::vector<std::optional<ActionId>> assignment_;
};

/// Throws ModelError if the policy is sized for another model, names an
/// unknown action, or assigns an action to a goal state.
void validate_policy(const FondModel& model, const Policy& policy);

/// Warnings for assignments that are legal but suspicious: inapplicable
/// actions on states the policy never reaches.
std::vector<std::string> lint_policy(const FondModel& model, const Policy& policy);

/// Graph of the states reachable from the initial state under a policy.
/// Nodes are numbered locally in BFS order (node 0 is the initial state).
struct PolicyGraph {
  std::vector<StateId> nodes;
  std::vector<std::vector<std::uint32_t>> successors;
  /// Assigned action of each expanded node; empty for goals and dead ends.
  std::vector<std::optional<ActionId>> action;
  std::vector<bool> goal;
  /// Non-goal node with no assigned or no applicable assigned action.
  std::vector<bool> dead_end;

  [[nodiscard]] std::size_t size() const { return nodes.size(); }
  [[nodiscard]] std::optional<std::uint32_t> local(StateId s) const;
  [[nodiscard]] std::vector<std::pair<StateId, StateId>> edges() const;

  std::vector<std::int32_t> local_index;  // by StateId, -1 when unreachable
};

PolicyGraph policy_graph(const FondModel& model, const Policy& policy);
inline PolicyGraph policy_graph(const FondPlusProblem& problem, const Policy& policy) {
  return policy_graph(problem.model(), policy);
}

enum class WitnessKind {
  dead_end,         // reachable non-goal state without an applicable assigned action
  recurrent_set,    // states visited forever by a fair non-goal trajectory
  non_terminating,  // reachable state the termination fixpoint never labels
};

struct Witness {
  WitnessKind kind;
  std::vector<StateId> states;
  std::size_t rounds = 0;  // fixpoint rounds run before giving up (non_terminating only)
};

struct Verdict {
  bool solves = false;
  std::optional<Witness> witness;
};

const char* to_string(WitnessKind kind);

}  // namespace fondplus
