#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <deque>
#include <unordered_map>

#include "fondplus/frontend.hpp"

namespace fondplus {

namespace {

/// Truth assignment packed one bit per atom; doubles as a hash key.
class AtomSet {
 public:
  explicit AtomSet(std::size_t num_atoms) : bits_((num_atoms + 7) / 8, '\0') {}

  bool test(std::uint32_t a) const { return (static_cast<unsigned char>(bits_[a / 8]) >> (a % 8)) & 1U; }
  void set(std::uint32_t a, bool value) {
    auto byte = static_cast<unsigned char>(bits_[a / 8]);
    const auto mask = static_cast<unsigned char>(1U << (a % 8));
    bits_[a / 8] = static_cast<char>(value ? (byte | mask) : (byte & ~mask));
  }
  bool satisfies(const std::vector<Literal>& lits) const {
    return std::all_of(lits.begin(), lits.end(), [&](const Literal& l) { return test(l.atom) == l.positive; });
  }
  const std::string& key() const { return bits_; }

 private:
  std::string bits_;
};

}  // namespace

std::size_t default_max_states() {
  if (const char* env = std::getenv("FONDP_MAX_STATES")) {
    std::size_t value = 0;
    const char* end = env + std::char_traits<char>::length(env);
    auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec == std::errc() && ptr == end && value > 0) return value;
  }
  return GroundOptions{}.max_states;
}

std::string state_label(const std::vector<std::string>& atom_names, const std::vector<std::uint32_t>& true_atoms) {
  std::string out = "[";
  for (std::size_t i = 0; i < true_atoms.size(); ++i) {
    if (i) out += '+';
    out += atom_names[true_atoms[i]];
  }
  out += ']';
  return out;
}

GroundingResult ground(const CompactFond& fond, const std::vector<NamedConstraint>& constraints,
                       const GroundOptions& options) {
  validate_compact(fond);
  const std::size_t num_atoms = fond.atoms.size();

  std::vector<AtomSet> states;
  std::unordered_map<std::string, std::uint32_t> index;
  std::deque<std::uint32_t> queue;
  auto intern = [&](AtomSet s) -> std::uint32_t {
    auto [it, fresh] = index.emplace(s.key(), static_cast<std::uint32_t>(states.size()));
    if (fresh) {
      if (states.size() >= options.max_states)
        throw SizeLimitError("grounding exceeds " + std::to_string(options.max_states) + " reachable states");
      states.push_back(std::move(s));
      queue.push_back(it->second);
    }
    return it->second;
  };

  {
    AtomSet init(num_atoms);
    for (auto a : fond.init) init.set(a, true);
    intern(std::move(init));
  }

  ModelData data;
  for (const auto& act : fond.actions) data.action_names.push_back(act.name);

  // Goal states are expanded too: the explicit model describes every state
  // reachable by any action, independent of any policy.
  while (!queue.empty()) {
    const std::uint32_t id = queue.front();
    queue.pop_front();
    for (std::uint32_t ai = 0; ai < fond.actions.size(); ++ai) {
      const CompactAction& act = fond.actions[ai];
      if (!states[id].satisfies(act.pre)) continue;
      for (const auto& alt : act.effects) {
        AtomSet next = states[id];
        for (const Literal& l : alt) next.set(l.atom, l.positive);
        const std::uint32_t to = intern(std::move(next));
        data.transitions.push_back(Transition{StateId(id), ActionId(ai), StateId(to)});
      }
    }
  }

  std::vector<std::vector<std::uint32_t>> state_atoms(states.size());
  for (std::uint32_t i = 0; i < states.size(); ++i) {
    for (std::uint32_t a = 0; a < num_atoms; ++a)
      if (states[i].test(a)) state_atoms[i].push_back(a);
    data.state_labels.push_back(state_label(fond.atoms, state_atoms[i]));
    if (states[i].satisfies(fond.goal)) data.goals.push_back(StateId(i));
  }
  if (data.goals.empty()) throw GoalUnreachableError("no reachable state satisfies the goal");
  data.initial = StateId(0);

  FondModel model(std::move(data));

  auto action_of = [&](const std::string& name) {
    const auto a = model.find_action(name);
    if (!a) throw ModelError("constraint mentions unknown action '" + name + "'");
    return *a;
  };
  std::vector<FairnessAssumption> resolved;
  for (const auto& c : constraints) {
    FairnessAssumption fa;
    for (const auto& name : c.a_set) {
      const ActionId a = action_of(name);
      if (fond.actions[a.index()].effects.size() < 2)
        throw ModelError("deterministic action '" + name + "' cannot be in an A set");
      if (model.is_nondeterministic(a)) fa.a_set.push_back(a);
    }
    for (const auto& name : c.b_set) fa.b_set.push_back(action_of(name));
    if (!fa.a_set.empty()) resolved.push_back(std::move(fa));
  }

  std::vector<std::size_t> origin(fond.actions.size());
  for (std::size_t i = 0; i < origin.size(); ++i) origin[i] = i;
  return GroundingResult{FondPlusProblem(std::move(model), std::move(resolved)), std::move(state_atoms),
                         std::move(origin)};
}

}  // namespace fondplus
