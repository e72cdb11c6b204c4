#include "fondplus/asp.hpp"

#include <cctype>
#include <sstream>
#include <unordered_map>

namespace fondplus {

namespace {

constexpr std::string_view kRules =
    "{ pi(S,A) : ACTION(A) } = 1 :- STATE(S), not GOAL(S).\n"
    "edge(S,T) :- pi(S,A), TRANSITION(S,A,T).\n"
    "connected(S,T) :- edge(S,T).\n"
    "connected(S,T) :- connected(S,X), edge(X,T), S != X.\n"
    "blocked(S,T) :- STATE(S), STATE(T), not connected(S,T).\n"
    "blocked(S,T) :- connected(S,T), terminate(S).\n"
    "blocked(S,T) :- connected(S,T), terminate(T).\n"
    "blocked(S,T) :- connected(S,T), blocked(X,T) : edge(S,X), connected(X,T).\n"
    "fair(S) :- pi(S,A), ASET(I,A), blocked(X,S) : pi(X,B), BSET(I,B), not blocked(S,X).\n"
    "terminate(S) :- GOAL(S).\n"
    "terminate(S) :- fair(S), edge(S,T), terminate(T).\n"
    "terminate(S) :- not fair(S), edge(S,_), terminate(T) : edge(S,T).\n"
    ":- reachable(S), not terminate(S).\n"
    "reachable(S) :- INITIAL(S).\n"
    "reachable(S) :- reachable(X), not GOAL(X), edge(X,S).\n";

constexpr std::string_view kInputPredicates[] = {"STATE", "ACTION", "INITIAL", "GOAL", "TRANSITION", "ASET", "BSET"};

bool asp_identifier(std::string_view s) {
  if (s.empty() || !std::islower(static_cast<unsigned char>(s.front()))) return false;
  if (s == "not") return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

bool all_identifiers(const std::vector<std::string>& names) {
  for (const auto& n : names)
    if (!asp_identifier(n)) return false;
  return true;
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string rules(AspDialect dialect) {
  std::string out(kRules);
  if (dialect == AspDialect::uppercase) return out;
  for (auto pred : kInputPredicates) {
    const std::string from = std::string(pred) + "(";
    const std::string to = lower(pred) + "(";
    for (std::size_t pos = out.find(from); pos != std::string::npos; pos = out.find(from, pos + to.size()))
      out.replace(pos, from.size(), to);
  }
  return out + "#show pi/2.\n";
}

}  // namespace

std::string asp_state_token(const FondModel& model, StateId s) {
  if (all_identifiers(model.labels())) return model.label(s);
  return "s" + std::to_string(s.index());
}

std::string asp_action_token(const FondModel& model, ActionId a) {
  if (all_identifiers(model.action_names())) return model.action_name(a);
  return "a" + std::to_string(a.index());
}

std::string emit_asp(const FondPlusProblem& problem, AspDialect dialect) {
  const FondModel& m = problem.model();
  auto pred = [&](std::string_view name) { return dialect == AspDialect::uppercase ? std::string(name) : lower(name); };
  const bool plain_states = all_identifiers(m.labels());
  const bool plain_actions = all_identifiers(m.action_names());
  auto st = [&](StateId s) { return plain_states ? m.label(s) : "s" + std::to_string(s.index()); };
  auto act = [&](ActionId a) { return plain_actions ? m.action_name(a) : "a" + std::to_string(a.index()); };

  std::ostringstream os;
  for (std::uint32_t s = 0; s < m.num_states(); ++s) os << pred("STATE") << '(' << st(StateId(s)) << ").\n";
  for (std::uint32_t a = 0; a < m.num_actions(); ++a) os << pred("ACTION") << '(' << act(ActionId(a)) << ").\n";
  os << pred("INITIAL") << '(' << st(m.initial()) << ").\n";
  for (StateId g : m.goals()) os << pred("GOAL") << '(' << st(g) << ").\n";
  for (const Transition& t : m.transitions())
    os << pred("TRANSITION") << '(' << st(t.from) << ',' << act(t.action) << ',' << st(t.to) << ").\n";
  for (std::size_t i = 0; i < problem.constraints().size(); ++i) {
    const auto& c = problem.constraints()[i];
    for (ActionId a : c.a_set) os << pred("ASET") << '(' << i + 1 << ',' << act(a) << ").\n";
    for (ActionId b : c.b_set) os << pred("BSET") << '(' << i + 1 << ',' << act(b) << ").\n";
  }
  os << '\n' << rules(dialect);
  return os.str();
}

Policy extract_policy(const FondModel& model, std::string_view answer_set) {
  std::unordered_map<std::string, StateId> states;
  std::unordered_map<std::string, ActionId> actions;
  for (std::uint32_t s = 0; s < model.num_states(); ++s)
    states.emplace(asp_state_token(model, StateId(s)), StateId(s));
  for (std::uint32_t a = 0; a < model.num_actions(); ++a)
    actions.emplace(asp_action_token(model, ActionId(a)), ActionId(a));

  Policy policy(model.num_states());
  std::size_t pos = 0;
  while ((pos = answer_set.find("pi(", pos)) != std::string_view::npos) {
    // Skip matches inside longer predicate names such as "api(".
    if (pos > 0 && (std::isalnum(static_cast<unsigned char>(answer_set[pos - 1])) || answer_set[pos - 1] == '_')) {
      pos += 3;
      continue;
    }
    const auto close = answer_set.find(')', pos);
    if (close == std::string_view::npos) throw ParseError(0, "unterminated pi atom");
    const std::string_view args = answer_set.substr(pos + 3, close - pos - 3);
    const auto comma = args.find(',');
    if (comma == std::string_view::npos || args.find(',', comma + 1) != std::string_view::npos)
      throw ParseError(0, "pi atom needs two arguments: pi(" + std::string(args) + ")");
    const std::string s(args.substr(0, comma)), a(args.substr(comma + 1));
    const auto si = states.find(s);
    if (si == states.end()) throw ParseError(0, "pi atom names unknown state '" + s + "'");
    const auto ai = actions.find(a);
    if (ai == actions.end()) throw ParseError(0, "pi atom names unknown action '" + a + "'");
    policy.assign(si->second, ai->second);
    pos = close + 1;
  }
  return policy;
}

}  // namespace fondplus
