#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

#include "fondplus/frontend.hpp"
#include "formats_common.hpp"
#include "text.hpp"

namespace fondplus {

const char* to_string(ActionLabel label) {
  return label == ActionLabel::fair ? "fair" : "adversarial";
}

namespace detail {

NamedConstraint parse_constraint_line(const text::Line& line) {
  text::Scanner sc(line.text, line.number);
  NamedConstraint c;
  sc.expect("A");
  sc.expect("=");
  c.a_set = sc.brace_group();
  if (sc.accept("/")) {
    sc.expect("B");
    sc.expect("=");
    c.b_set = sc.brace_group();
  }
  if (!sc.at_end()) sc.error("unexpected trailing text");
  for (const auto& names : {c.a_set, c.b_set})
    for (const auto& n : names)
      if (!text::valid_name(n)) throw ParseError(line.number, "invalid action name '" + n + "'");
  return c;
}

std::vector<NamedConstraint> parse_constraints(const text::Section& section) {
  std::vector<NamedConstraint> out;
  for (const auto& line : section.body) out.push_back(parse_constraint_line(line));
  return out;
}

std::vector<LabelEntry> parse_labels(const text::Section& section) {
  std::vector<LabelEntry> out;
  for (const auto& line : section.body) {
    const auto toks = text::list_tokens(line.text, line.number);
    if (toks.size() != 2) throw ParseError(line.number, "label lines have the form '<action> fair|adversarial'");
    ActionLabel label;
    if (toks[1] == "fair")
      label = ActionLabel::fair;
    else if (toks[1] == "adversarial")
      label = ActionLabel::adversarial;
    else
      throw ParseError(line.number, "unknown label '" + toks[1] + "'");
    if (std::any_of(out.begin(), out.end(), [&](const LabelEntry& e) { return e.action == toks[0]; }))
      throw ParseError(line.number, "action '" + toks[0] + "' labeled twice");
    out.push_back(LabelEntry{toks[0], label});
  }
  return out;
}

void write_set(std::ostream& os, const std::vector<std::string>& names) {
  os << '{';
  for (std::size_t i = 0; i < names.size(); ++i) os << (i ? "," : "") << names[i];
  os << '}';
}

void write_constraints(std::ostream& os, const std::vector<NamedConstraint>& constraints) {
  os << "constraints:\n";
  for (const auto& c : constraints) {
    os << "  A = ";
    write_set(os, c.a_set);
    os << " / B = ";
    write_set(os, c.b_set);
    os << '\n';
  }
}

void write_labels(std::ostream& os, const std::vector<LabelEntry>& labels) {
  if (labels.empty()) return;
  os << "labels:\n";
  for (const auto& l : labels) os << "  " << l.action << ' ' << to_string(l.label) << '\n';
}

const text::Section* single(const std::vector<text::Section>& sections, std::string_view name, bool required) {
  const text::Section* found = nullptr;
  for (const auto& s : sections) {
    if (s.name != name) continue;
    if (found) throw ParseError(s.line, "duplicate section '" + std::string(name) + ":'");
    found = &s;
  }
  if (!found && required) throw ParseError(0, "missing section '" + std::string(name) + ":'");
  return found;
}

}  // namespace detail

ExplicitDocument parse_explicit_document(std::string_view text) {
  using detail::single;
  const auto sections =
      text::read_sections(text, {"states", "initial", "goals", "actions", "transitions", "constraints", "labels"},
                          false);

  ModelData data;
  data.state_labels = text::list_tokens(*single(sections, "states", true));
  data.action_names = text::list_tokens(*single(sections, "actions", true));

  std::unordered_map<std::string, std::uint32_t> state_ix, action_ix;
  for (std::uint32_t i = 0; i < data.state_labels.size(); ++i)
    if (!state_ix.emplace(data.state_labels[i], i).second)
      throw ParseError(single(sections, "states", true)->line, "duplicate state '" + data.state_labels[i] + "'");
  for (std::uint32_t i = 0; i < data.action_names.size(); ++i)
    if (!action_ix.emplace(data.action_names[i], i).second)
      throw ParseError(single(sections, "actions", true)->line,
                       "duplicate action '" + data.action_names[i] + "'");

  auto state_of = [&](const std::string& name, std::size_t line) {
    auto it = state_ix.find(name);
    if (it == state_ix.end()) throw ParseError(line, "unknown state '" + name + "'");
    return StateId(it->second);
  };
  auto action_of = [&](const std::string& name, std::size_t line) {
    auto it = action_ix.find(name);
    if (it == action_ix.end()) throw ParseError(line, "unknown action '" + name + "'");
    return ActionId(it->second);
  };

  const auto* initial = single(sections, "initial", true);
  const auto init_toks = text::list_tokens(*initial);
  if (init_toks.size() != 1) throw ParseError(initial->line, "exactly one initial state expected");
  data.initial = state_of(init_toks[0], initial->line);

  const auto* goals = single(sections, "goals", true);
  for (const auto& g : text::list_tokens(*goals)) data.goals.push_back(state_of(g, goals->line));
  if (data.goals.empty()) throw ParseError(goals->line, "goals empty");

  if (const auto* tr = single(sections, "transitions", false)) {
    for (const auto& line : tr->body) {
      const auto toks = text::list_tokens(line.text, line.number);
      if (toks.size() != 3) throw ParseError(line.number, "transition lines have the form '<state> <action> <state>'");
      data.transitions.push_back(Transition{state_of(toks[0], line.number), action_of(toks[1], line.number),
                                            state_of(toks[2], line.number)});
    }
  }

  std::vector<FairnessAssumption> constraints;
  if (const auto* cs = single(sections, "constraints", false)) {
    for (const auto& line : cs->body) {
      const auto named = detail::parse_constraint_line(line);
      FairnessAssumption fa;
      for (const auto& a : named.a_set) fa.a_set.push_back(action_of(a, line.number));
      for (const auto& b : named.b_set) fa.b_set.push_back(action_of(b, line.number));
      constraints.push_back(std::move(fa));
    }
  }

  std::vector<LabelEntry> labels;
  if (const auto* ls = single(sections, "labels", false)) {
    labels = detail::parse_labels(*ls);
    for (const auto& l : labels) action_of(l.action, ls->line);
  }

  try {
    FondModel model(std::move(data));
    return ExplicitDocument{FondPlusProblem(std::move(model), std::move(constraints)), std::move(labels)};
  } catch (const ModelError& e) {
    throw ParseError(0, e.what());
  }
}

FondPlusProblem parse_explicit(std::string_view text) { return parse_explicit_document(text).problem; }

std::string serialize_explicit(const FondPlusProblem& problem, const std::vector<LabelEntry>& labels) {
  const FondModel& m = problem.model();
  std::ostringstream os;
  os << "format: " << text::kFormatTag << '\n';
  os << "states:";
  for (const auto& l : m.labels()) os << ' ' << l;
  os << "\ninitial: " << m.label(m.initial()) << "\ngoals:";
  for (StateId g : m.goals()) os << ' ' << m.label(g);
  os << "\nactions:";
  for (const auto& a : m.action_names()) os << ' ' << a;
  os << "\ntransitions:\n";
  for (const Transition& t : m.transitions())
    os << "  " << m.label(t.from) << ' ' << m.action_name(t.action) << ' ' << m.label(t.to) << '\n';

  std::vector<NamedConstraint> named;
  for (const auto& c : problem.constraints()) {
    NamedConstraint nc;
    for (ActionId a : c.a_set) nc.a_set.push_back(m.action_name(a));
    for (ActionId b : c.b_set) nc.b_set.push_back(m.action_name(b));
    named.push_back(std::move(nc));
  }
  detail::write_constraints(os, named);
  detail::write_labels(os, labels);
  return os.str();
}

FileKind detect_kind(std::string_view text) {
  // Cheap header scan; the real parser reports any remaining problems.
  std::istringstream is{std::string(text)};
  std::string line;
  bool atoms = false;
  while (std::getline(is, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    const auto t = text::trim(line);
    if (t.starts_with("vars:") || t.starts_with("vars :")) return FileKind::qnp;
    if (t.starts_with("states:") || t.starts_with("states :")) return FileKind::explicit_fond;
    if (t.starts_with("atoms:") || t.starts_with("atoms :")) atoms = true;
  }
  return atoms ? FileKind::compact_fond : FileKind::explicit_fond;
}

}  // namespace fondplus
