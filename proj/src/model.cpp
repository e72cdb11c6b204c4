#include "fondplus/model.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_set>

namespace fondplus {

namespace {

template <class... Parts>
[[noreturn]] void fail(const Parts&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  throw ModelError(os.str());
}

void sort_unique(std::vector<ActionId>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

void validate_model(const ModelData& data) {
  const std::size_t n = data.state_labels.size();
  const std::size_t m = data.action_names.size();
  if (n == 0) fail("model has no states");

  std::unordered_set<std::string_view> seen;
  for (std::size_t i = 0; i < n; ++i) {
    if (data.state_labels[i].empty()) fail("state ", i, " has an empty label");
    if (!seen.insert(data.state_labels[i]).second)
      fail("duplicate state label '", data.state_labels[i], "'");
  }
  seen.clear();
  for (std::size_t i = 0; i < m; ++i) {
    if (data.action_names[i].empty()) fail("action ", i, " has an empty name");
    if (!seen.insert(data.action_names[i]).second)
      fail("duplicate action name '", data.action_names[i], "'");
  }

  if (data.initial.index() >= n) fail("initial state ", data.initial, " does not exist");
  if (data.goals.empty()) fail("goals empty");
  for (StateId g : data.goals)
    if (g.index() >= n) fail("goal state ", g, " does not exist");

  for (const Transition& t : data.transitions) {
    if (t.from.index() >= n) fail("transition from unknown state ", t.from);
    if (t.to.index() >= n)
      fail("transition (", data.state_labels[t.from.index()], ", ", t.action, ") to unknown state ", t.to);
    if (t.action.index() >= m)
      fail("transition from '", data.state_labels[t.from.index()], "' uses unknown action ", t.action);
  }
}

FondModel::FondModel(ModelData data) {
  validate_model(data);
  labels_ = std::move(data.state_labels);
  action_names_ = std::move(data.action_names);
  initial_ = data.initial;

  goals_ = std::move(data.goals);
  std::sort(goals_.begin(), goals_.end());
  goals_.erase(std::unique(goals_.begin(), goals_.end()), goals_.end());
  goal_flags_.assign(labels_.size(), false);
  for (StateId g : goals_) goal_flags_[g.index()] = true;

  auto& ts = data.transitions;
  std::sort(ts.begin(), ts.end(), [](const Transition& x, const Transition& y) {
    return std::tie(x.from, x.action, x.to) < std::tie(y.from, y.action, y.to);
  });
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

  outcomes_.resize(labels_.size());
  for (const Transition& t : ts) {
    auto& row = outcomes_[t.from.index()];
    if (row.empty() || row.back().action != t.action) row.push_back(Outcome{t.action, {}});
    row.back().successors.push_back(t.to);
  }

  nondeterministic_.assign(action_names_.size(), false);
  for (const auto& row : outcomes_)
    for (const Outcome& o : row)
      if (o.successors.size() >= 2) nondeterministic_[o.action.index()] = true;

  for (std::size_t i = 0; i < labels_.size(); ++i)
    state_index_.emplace(labels_[i], StateId(static_cast<std::uint32_t>(i)));
  for (std::size_t i = 0; i < action_names_.size(); ++i)
    action_index_.emplace(action_names_[i], ActionId(static_cast<std::uint32_t>(i)));
}

std::optional<StateId> FondModel::find_state(std::string_view label) const {
  auto it = state_index_.find(std::string(label));
  if (it == state_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<ActionId> FondModel::find_action(std::string_view name) const {
  auto it = action_index_.find(std::string(name));
  if (it == action_index_.end()) return std::nullopt;
  return it->second;
}

const Outcome* FondModel::find_outcome(StateId s, ActionId a) const {
  const auto& row = outcomes_[s.index()];
  auto it = std::lower_bound(row.begin(), row.end(), a,
                             [](const Outcome& o, ActionId x) { return o.action < x; });
  if (it == row.end() || it->action != a) return nullptr;
  return &*it;
}

bool FondModel::applicable(StateId s, ActionId a) const {
  return s.index() < num_states() && find_outcome(s, a) != nullptr;
}

std::span<const StateId> FondModel::successors(StateId s, ActionId a) const {
  if (s.index() >= num_states() || a.index() >= num_actions())
    fail("successors: unknown state ", s, " or action ", a);
  const Outcome* o = find_outcome(s, a);
  if (o == nullptr)
    fail("action '", action_name(a), "' is not applicable in state '", label(s), "'");
  return o->successors;
}

std::vector<Transition> FondModel::transitions() const {
  std::vector<Transition> out;
  for (std::size_t s = 0; s < outcomes_.size(); ++s)
    for (const Outcome& o : outcomes_[s])
      for (StateId t : o.successors)
        out.push_back(Transition{StateId(static_cast<std::uint32_t>(s)), o.action, t});
  return out;
}

bool operator==(const FondModel& x, const FondModel& y) {
  return x.labels_ == y.labels_ && x.action_names_ == y.action_names_ && x.initial_ == y.initial_ &&
         x.goals_ == y.goals_ && x.outcomes_ == y.outcomes_;
}

void validate_constraints(const FondModel& model, const std::vector<FairnessAssumption>& constraints) {
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    const auto& c = constraints[i];
    if (c.a_set.empty()) fail("constraint ", i + 1, ": A set is empty");
    for (ActionId a : c.a_set) {
      if (a.index() >= model.num_actions()) fail("constraint ", i + 1, ": unknown action ", a);
      if (!model.is_nondeterministic(a))
        fail("constraint ", i + 1, ": action '", model.action_name(a), "' in A is deterministic");
    }
    for (ActionId b : c.b_set) {
      if (b.index() >= model.num_actions()) fail("constraint ", i + 1, ": unknown action ", b);
      if (std::binary_search(c.a_set.begin(), c.a_set.end(), b))
        fail("constraint ", i + 1, ": A/B not disjoint (action '", model.action_name(b), "')");
    }
  }
}

FondPlusProblem::FondPlusProblem(FondModel model, std::vector<FairnessAssumption> constraints)
    : model_(std::move(model)), constraints_(std::move(constraints)) {
  for (auto& c : constraints_) {
    sort_unique(c.a_set);
    sort_unique(c.b_set);
  }
  validate_constraints(model_, constraints_);
  a_membership_.resize(model_.num_actions());
  b_membership_.resize(model_.num_actions());
  for (std::uint32_t i = 0; i < constraints_.size(); ++i) {
    for (ActionId a : constraints_[i].a_set) a_membership_[a.index()].push_back(i);
    for (ActionId b : constraints_[i].b_set) b_membership_[b.index()].push_back(i);
  }
}

std::size_t Policy::assigned_count() const {
  return static_cast<std::size_t>(
      std::count_if(assignment_.begin(), assignment_.end(), [](const auto& a) { return a.has_value(); }));
}

void validate_policy(const FondModel& model, const Policy& policy) {
  if (policy.num_states() != model.num_states())
    fail("policy covers ", policy.num_states(), " states but the model has ", model.num_states());
  for (std::uint32_t i = 0; i < model.num_states(); ++i) {
    StateId s(i);
    auto a = policy[s];
    if (!a) continue;
    if (a->index() >= model.num_actions()) fail("policy uses unknown action ", *a);
    if (model.is_goal(s)) fail("policy assigns an action to goal state '", model.label(s), "'");
  }
}

std::vector<std::string> lint_policy(const FondModel& model, const Policy& policy) {
  std::vector<std::string> warnings;
  const PolicyGraph g = policy_graph(model, policy);
  for (std::uint32_t i = 0; i < model.num_states(); ++i) {
    StateId s(i);
    auto a = policy[s];
    if (!a || g.local(s) || model.applicable(s, *a)) continue;
    warnings.push_back("unreachable state '" + model.label(s) + "' is assigned inapplicable action '" +
                       model.action_name(*a) + "'");
  }
  return warnings;
}

const char* to_string(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::dead_end: return "dead-end";
    case WitnessKind::recurrent_set: return "recurrent-set";
    case WitnessKind::non_terminating: return "non-terminating";
  }
  return "?";
}

}  // namespace fondplus
