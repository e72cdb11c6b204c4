#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_map>
#include <utility>

#include "fondplus/frontend.hpp"
#include "formats_common.hpp"
#include "text.hpp"

namespace fondplus {

namespace {

[[noreturn]] void invalid(const std::string& message) { throw ModelError(message); }

bool valid_variable(std::string_view v) {
  return text::valid_name(v) && v.find_first_of("<>-") == std::string_view::npos;
}

template <class T>
void sort_unique(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

class Symbols {
 public:
  Symbols(const std::vector<std::string>& atoms, const std::vector<std::string>& vars) {
    for (std::uint32_t i = 0; i < atoms.size(); ++i) atoms_.emplace(atoms[i], i);
    for (std::uint32_t i = 0; i < vars.size(); ++i) vars_.emplace(vars[i], i);
  }

  std::uint32_t variable(std::string_view name, std::size_t line) const {
    auto it = vars_.find(std::string(name));
    if (it == vars_.end()) throw ParseError(line, "unknown variable '" + std::string(name) + "'");
    return it->second;
  }

  std::uint32_t atom(std::string_view name, std::size_t line) const {
    auto it = atoms_.find(std::string(name));
    if (it == atoms_.end()) throw ParseError(line, "unknown atom '" + std::string(name) + "'");
    return it->second;
  }

  /// `X=0` / `X>0`, or nullopt when `tok` is not a condition.
  std::optional<NumericCondition> condition(std::string_view tok, std::size_t line) const {
    if (tok.size() < 3) return std::nullopt;
    const auto tail = tok.substr(tok.size() - 2);
    if (tail != "=0" && tail != ">0") return std::nullopt;
    return NumericCondition{variable(text::trim(tok.substr(0, tok.size() - 2)), line), tail == "=0"};
  }

  Literal literal(std::string_view tok, std::size_t line) const {
    Literal l;
    if (!tok.empty() && tok.front() == '-') {
      l.positive = false;
      tok.remove_prefix(1);
    }
    l.atom = atom(tok, line);
    return l;
  }

 private:
  std::unordered_map<std::string, std::uint32_t> atoms_;
  std::unordered_map<std::string, std::uint32_t> vars_;
};

/// Splits a mixed list of literals and numeric conditions.
void conditions(const Symbols& sym, const std::vector<std::string>& toks, std::size_t line,
                std::vector<Literal>& lits, std::vector<NumericCondition>& nums) {
  for (const auto& t : toks) {
    if (auto c = sym.condition(t, line))
      nums.push_back(*c);
    else
      lits.push_back(sym.literal(t, line));
  }
  sort_unique(lits);
  sort_unique(nums);
}

std::optional<std::string_view> call_argument(std::string_view tok, std::string_view fn) {
  if (tok.size() <= fn.size() + 2 || tok.substr(0, fn.size()) != fn || tok[fn.size()] != '(' || tok.back() != ')')
    return std::nullopt;
  return text::trim(tok.substr(fn.size() + 1, tok.size() - fn.size() - 2));
}

void write_condition(std::ostream& os, const std::vector<std::string>& vars, const NumericCondition& c) {
  os << vars[c.variable] << (c.zero ? "=0" : ">0");
}

void write_literal(std::ostream& os, const std::vector<std::string>& atoms, const Literal& l) {
  os << (l.positive ? "" : "-") << atoms[l.atom];
}

}  // namespace

void validate_qnp(const Qnp& q) {
  std::set<std::string_view> names;
  for (const auto& a : q.atoms) {
    if (!text::valid_name(a) || a.front() == '-') invalid("invalid atom name '" + a + "'");
    if (!names.insert(a).second) invalid("duplicate atom or variable name '" + a + "'");
  }
  for (const auto& v : q.variables) {
    if (!valid_variable(v)) invalid("invalid variable name '" + v + "'");
    if (!names.insert(v).second) invalid("duplicate atom or variable name '" + v + "'");
  }

  auto check_lits = [&](std::vector<Literal> lits, const std::string& where) {
    for (const auto& l : lits)
      if (l.atom >= q.atoms.size()) invalid(where + " mentions an unknown atom");
    sort_unique(lits);
    for (std::size_t i = 1; i < lits.size(); ++i)
      if (lits[i].atom == lits[i - 1].atom) invalid(where + " contains complementary literals");
  };
  auto check_nums = [&](std::vector<NumericCondition> nums, const std::string& where) {
    for (const auto& c : nums)
      if (c.variable >= q.variables.size()) invalid(where + " mentions an unknown variable");
    sort_unique(nums);
    for (std::size_t i = 1; i < nums.size(); ++i)
      if (nums[i].variable == nums[i - 1].variable) invalid(where + " requires both X=0 and X>0");
  };

  for (auto a : q.init)
    if (a >= q.atoms.size()) invalid("init mentions an unknown atom");
  check_nums(q.init_numeric, "init");
  {
    std::vector<bool> seen(q.variables.size(), false);
    for (const auto& c : q.init_numeric) seen[c.variable] = true;
    for (std::size_t v = 0; v < q.variables.size(); ++v)
      if (!seen[v]) invalid("init gives no value for variable '" + q.variables[v] + "'");
  }
  check_lits(q.goal, "goal");
  check_nums(q.goal_numeric, "goal");

  names.clear();
  for (const auto& act : q.actions) {
    const std::string where = "action '" + act.name + "'";
    if (!text::valid_name(act.name)) invalid("invalid action name '" + act.name + "'");
    if (!names.insert(act.name).second) invalid("duplicate action '" + act.name + "'");
    check_lits(act.pre, "precondition of " + where);
    check_nums(act.numeric_pre, "precondition of " + where);
    check_lits(act.effects, "effect of " + where);
    for (auto v : act.inc)
      if (v >= q.variables.size()) invalid(where + " increments an unknown variable");
    for (auto v : act.dec) {
      if (v >= q.variables.size()) invalid(where + " decrements an unknown variable");
      const NumericCondition positive{v, false};
      if (std::find(act.numeric_pre.begin(), act.numeric_pre.end(), positive) == act.numeric_pre.end())
        invalid(where + " decrements '" + q.variables[v] + "' without precondition " + q.variables[v] + ">0");
      if (std::find(act.inc.begin(), act.inc.end(), v) != act.inc.end())
        invalid(where + " both increments and decrements '" + q.variables[v] + "'");
    }
  }
}

Qnp parse_qnp(std::string_view text) {
  using detail::single;
  const auto sections = text::read_sections(text, {"atoms", "vars", "init", "goal"}, true);

  Qnp q;
  if (const auto* atoms = single(sections, "atoms", false)) q.atoms = text::list_tokens(*atoms);
  const auto* vars = single(sections, "vars", true);
  q.variables = text::list_tokens(*vars);
  for (const auto& v : q.variables)
    if (!valid_variable(v)) throw ParseError(vars->line, "invalid variable name '" + v + "'");
  {
    std::set<std::string_view> seen;
    for (const auto* names : {&q.atoms, &q.variables})
      for (const auto& n : *names)
        if (!seen.insert(n).second) throw ParseError(vars->line, "duplicate atom or variable name '" + n + "'");
  }
  const Symbols sym(q.atoms, q.variables);

  if (const auto* init = single(sections, "init", false)) {
    std::vector<Literal> lits;
    conditions(sym, text::list_tokens(*init, false), init->line, lits, q.init_numeric);
    // Unlisted atoms are false; `-p` is accepted as a redundant statement of that.
    for (std::size_t i = 0; i < lits.size(); ++i) {
      if (i > 0 && lits[i].atom == lits[i - 1].atom)
        throw ParseError(init->line, "init contains complementary literals");
      if (lits[i].positive) q.init.push_back(lits[i].atom);
    }
  }
  const auto* goal = single(sections, "goal", true);
  conditions(sym, text::list_tokens(*goal, false), goal->line, q.goal, q.goal_numeric);

  for (const auto& sec : sections) {
    if (sec.name != "action") continue;
    if (sec.body.size() != 1) throw ParseError(sec.line, "action '" + sec.argument + "' must fit on one line");
    const auto& line = sec.body.front();
    text::Scanner sc(line.text, line.number);
    QnpAction act;
    act.name = sec.argument;
    if (!text::valid_name(act.name)) throw ParseError(line.number, "invalid action name '" + act.name + "'");
    sc.expect("pre");
    conditions(sym, sc.brace_group(), line.number, act.pre, act.numeric_pre);
    sc.expect("eff");
    // brace_group splits on commas only, so `inc(X)` arrives whole.
    for (const auto& tok : sc.brace_group()) {
      if (auto v = call_argument(tok, "inc"))
        act.inc.push_back(sym.variable(*v, line.number));
      else if (auto v = call_argument(tok, "dec"))
        act.dec.push_back(sym.variable(*v, line.number));
      else
        act.effects.push_back(sym.literal(tok, line.number));
    }
    if (!sc.at_end()) sc.error("unexpected trailing text");
    sort_unique(act.effects);
    sort_unique(act.inc);
    sort_unique(act.dec);
    q.actions.push_back(std::move(act));
  }

  try {
    validate_qnp(q);
  } catch (const ModelError& e) {
    throw ParseError(0, e.what());
  }
  return q;
}

std::string serialize_qnp(const Qnp& q) {
  std::ostringstream os;
  os << "format: " << text::kFormatTag << '\n';
  os << "atoms:";
  for (const auto& a : q.atoms) os << ' ' << a;
  os << "\nvars:";
  for (const auto& v : q.variables) os << ' ' << v;
  os << "\ninit:";
  for (auto a : q.init) os << ' ' << q.atoms[a];
  for (const auto& c : q.init_numeric) write_condition(os << ' ', q.variables, c);
  os << "\ngoal:";
  for (const auto& l : q.goal) write_literal(os << ' ', q.atoms, l);
  for (const auto& c : q.goal_numeric) write_condition(os << ' ', q.variables, c);
  os << '\n';
  for (const auto& act : q.actions) {
    os << "action " << act.name << ": pre {";
    const char* sep = "";
    for (const auto& l : act.pre) write_literal(os << std::exchange(sep, ", "), q.atoms, l);
    for (const auto& c : act.numeric_pre) write_condition(os << std::exchange(sep, ", "), q.variables, c);
    os << "} eff {";
    sep = "";
    for (const auto& l : act.effects) write_literal(os << std::exchange(sep, ", "), q.atoms, l);
    for (auto v : act.inc) os << std::exchange(sep, ", ") << "inc(" << q.variables[v] << ')';
    for (auto v : act.dec) os << std::exchange(sep, ", ") << "dec(" << q.variables[v] << ')';
    os << "}\n";
  }
  return os.str();
}

}  // namespace fondplus
