#include "fondplus/translate.hpp"

#include <algorithm>
#include <set>

namespace fondplus {

namespace {

bool contains(const std::vector<ActionId>& sorted, ActionId a) {
  return std::binary_search(sorted.begin(), sorted.end(), a);
}

std::vector<ActionId> nondeterministic_actions(const FondModel& model) {
  std::vector<ActionId> out;
  for (std::uint32_t a = 0; a < model.num_actions(); ++a)
    if (model.is_nondeterministic(ActionId(a))) out.push_back(ActionId(a));
  return out;
}

std::vector<FairnessAssumption> single_constraint(std::vector<ActionId> a_set) {
  if (a_set.empty()) return {};
  return {FairnessAssumption{std::move(a_set), {}}};
}

}  // namespace

bool QnpAnnotation::decrements(ActionId a, std::size_t variable) const {
  return contains(dec_actions[variable], a);
}

bool QnpAnnotation::increments(ActionId a, std::size_t variable) const {
  return contains(inc_actions[variable], a);
}

DirectTranslation t_direct(const Qnp& q) {
  validate_qnp(q);
  DirectTranslation out;
  CompactFond& f = out.fond;
  f.atoms = q.atoms;

  std::set<std::string> taken(q.atoms.begin(), q.atoms.end());
  taken.insert(q.variables.begin(), q.variables.end());
  std::vector<std::uint32_t> zero_atom;
  for (const auto& v : q.variables) {
    std::string name = "p_" + v;
    while (taken.count(name)) name += '_';
    taken.insert(name);
    zero_atom.push_back(static_cast<std::uint32_t>(f.atoms.size()));
    f.atoms.push_back(std::move(name));
  }
  auto as_literal = [&](const NumericCondition& c) { return Literal{zero_atom[c.variable], c.zero}; };
  auto merged = [&](std::vector<Literal> lits, const std::vector<NumericCondition>& nums) {
    for (const auto& c : nums) lits.push_back(as_literal(c));
    std::sort(lits.begin(), lits.end());
    return lits;
  };

  f.init = q.init;
  for (const auto& c : q.init_numeric)
    if (c.zero) f.init.push_back(zero_atom[c.variable]);
  std::sort(f.init.begin(), f.init.end());
  f.goal = merged(q.goal, q.goal_numeric);

  QnpAnnotation& ann = out.annotation;
  ann.variables = q.variables;
  ann.dec_actions.resize(q.variables.size());
  ann.inc_actions.resize(q.variables.size());

  for (std::uint32_t ai = 0; ai < q.actions.size(); ++ai) {
    const QnpAction& qa = q.actions[ai];
    CompactAction act;
    act.name = qa.name;
    act.pre = merged(qa.pre, qa.numeric_pre);

    std::vector<Literal> base = qa.effects;
    for (auto v : qa.inc) {
      base.push_back(Literal{zero_atom[v], false});
      ann.inc_actions[v].push_back(ActionId(ai));
    }
    act.effects.push_back(std::move(base));
    for (auto v : qa.dec) {
      ann.dec_actions[v].push_back(ActionId(ai));
      std::vector<std::vector<Literal>> next;
      for (const auto& alt : act.effects)
        for (bool zero : {true, false}) {
          auto extended = alt;
          extended.push_back(Literal{zero_atom[v], zero});
          next.push_back(std::move(extended));
        }
      act.effects = std::move(next);
    }
    for (auto& alt : act.effects) std::sort(alt.begin(), alt.end());
    f.actions.push_back(std::move(act));
  }
  return out;
}

FondPlusProblem strong_to_fondplus(const FondModel& model) { return FondPlusProblem(model, {}); }

FondPlusProblem strong_cyclic_to_fondplus(const FondModel& model) {
  return FondPlusProblem(model, single_constraint(nondeterministic_actions(model)));
}

QnpTranslation qnp_to_fondplus(const Qnp& q, const GroundOptions& options) {
  DirectTranslation direct = t_direct(q);
  std::vector<NamedConstraint> named;
  for (std::size_t v = 0; v < q.variables.size(); ++v) {
    if (direct.annotation.dec_actions[v].empty()) continue;
    NamedConstraint c;
    for (ActionId a : direct.annotation.dec_actions[v]) c.a_set.push_back(q.actions[a.index()].name);
    for (ActionId a : direct.annotation.inc_actions[v]) c.b_set.push_back(q.actions[a.index()].name);
    named.push_back(std::move(c));
  }
  GroundingResult g = ground(direct.fond, named, options);
  QnpAnnotation annotation = direct.annotation;
  return QnpTranslation{std::move(g.problem), std::move(annotation), std::move(direct), std::move(g.state_atoms)};
}

DualFond make_dual_fond(FondModel model, const std::vector<LabelEntry>& labels) {
  std::vector<bool> fair(model.num_actions(), false);
  std::vector<bool> labeled(model.num_actions(), false);
  for (const auto& l : labels) {
    const auto a = model.find_action(l.action);
    if (!a) throw ModelError("label for unknown action '" + l.action + "'");
    fair[a->index()] = l.label == ActionLabel::fair;
    labeled[a->index()] = true;
  }
  for (std::uint32_t a = 0; a < model.num_actions(); ++a)
    if (model.is_nondeterministic(ActionId(a)) && !labeled[a])
      throw ModelError("non-deterministic action '" + model.action_name(ActionId(a)) +
                       "' needs a fair or adversarial label");
  return DualFond{std::move(model), std::move(fair)};
}

FondPlusProblem dual_to_fondplus(const DualFond& dual) {
  std::vector<ActionId> a_set;
  for (ActionId a : nondeterministic_actions(dual.model))
    if (dual.fair[a.index()]) a_set.push_back(a);
  return FondPlusProblem(dual.model, single_constraint(std::move(a_set)));
}

}  // namespace fondplus
