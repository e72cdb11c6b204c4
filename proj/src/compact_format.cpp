#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_map>

#include "fondplus/frontend.hpp"
#include "formats_common.hpp"
#include "text.hpp"

namespace fondplus {

namespace {

[[noreturn]] void invalid(const std::string& message) { throw ModelError(message); }

void normalize(std::vector<Literal>& lits) {
  std::sort(lits.begin(), lits.end());
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
}

bool consistent(const std::vector<Literal>& sorted_lits) {
  for (std::size_t i = 1; i < sorted_lits.size(); ++i)
    if (sorted_lits[i].atom == sorted_lits[i - 1].atom) return false;
  return true;
}

class AtomTable {
 public:
  explicit AtomTable(const std::vector<std::string>& names) {
    for (std::uint32_t i = 0; i < names.size(); ++i) index_.emplace(names[i], i);
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

  std::uint32_t atom(std::string_view name, std::size_t line) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) throw ParseError(line, "unknown atom '" + std::string(name) + "'");
    return it->second;
  }

 private:
  std::unordered_map<std::string, std::uint32_t> index_;
};

std::vector<Literal> literals(const AtomTable& atoms, const std::vector<std::string>& toks, std::size_t line) {
  std::vector<Literal> out;
  for (const auto& t : toks) out.push_back(atoms.literal(t, line));
  return out;
}

void write_literals(std::ostream& os, const std::vector<std::string>& atoms, const std::vector<Literal>& lits) {
  os << '{';
  for (std::size_t i = 0; i < lits.size(); ++i)
    os << (i ? ", " : "") << (lits[i].positive ? "" : "-") << atoms[lits[i].atom];
  os << '}';
}

}  // namespace

void validate_compact(const CompactFond& fond) {
  std::set<std::string_view> names;
  for (const auto& a : fond.atoms) {
    if (!text::valid_name(a) || a.front() == '-') invalid("invalid atom name '" + a + "'");
    if (!names.insert(a).second) invalid("duplicate atom '" + a + "'");
  }
  auto check_atom = [&](std::uint32_t atom) {
    if (atom >= fond.atoms.size()) invalid("unknown atom index " + std::to_string(atom));
  };
  for (auto a : fond.init) check_atom(a);
  auto check_set = [&](std::vector<Literal> lits, const std::string& where) {
    for (const auto& l : lits) check_atom(l.atom);
    normalize(lits);
    if (!consistent(lits)) invalid(where + " contains complementary literals");
  };
  check_set(fond.goal, "goal");

  names.clear();
  for (const auto& act : fond.actions) {
    if (!text::valid_name(act.name)) invalid("invalid action name '" + act.name + "'");
    if (!names.insert(act.name).second) invalid("duplicate action '" + act.name + "'");
    check_set(act.pre, "precondition of '" + act.name + "'");
    if (act.effects.empty()) invalid("action '" + act.name + "' has no effect alternative");
    std::set<std::vector<Literal>> seen;
    for (auto alt : act.effects) {
      check_set(alt, "effect of '" + act.name + "'");
      normalize(alt);
      if (!seen.insert(alt).second) invalid("action '" + act.name + "' has duplicate oneof alternatives");
    }
  }
}

CompactDocument parse_compact_document(std::string_view text) {
  using detail::single;
  const auto sections = text::read_sections(text, {"atoms", "init", "goal", "constraints", "labels"}, true);

  CompactDocument doc;
  CompactFond& fond = doc.fond;
  fond.atoms = text::list_tokens(*single(sections, "atoms", true));
  for (const auto& a : fond.atoms)
    if (a.front() == '-') throw ParseError(single(sections, "atoms", true)->line, "atom names cannot start with '-'");
  {
    std::set<std::string_view> seen;
    for (const auto& a : fond.atoms)
      if (!seen.insert(a).second)
        throw ParseError(single(sections, "atoms", true)->line, "duplicate atom '" + a + "'");
  }
  const AtomTable atoms(fond.atoms);

  if (const auto* init = single(sections, "init", false)) {
    // Unlisted atoms are false; `-p` is accepted as a redundant statement of that.
    auto lits = literals(atoms, text::list_tokens(*init), init->line);
    normalize(lits);
    if (!consistent(lits)) throw ParseError(init->line, "init contains complementary literals");
    for (const auto& l : lits)
      if (l.positive) fond.init.push_back(l.atom);
    std::sort(fond.init.begin(), fond.init.end());
    fond.init.erase(std::unique(fond.init.begin(), fond.init.end()), fond.init.end());
  }
  const auto* goal = single(sections, "goal", true);
  fond.goal = literals(atoms, text::list_tokens(*goal), goal->line);

  for (const auto& sec : sections) {
    if (sec.name != "action") continue;
    if (sec.body.size() != 1) throw ParseError(sec.line, "action '" + sec.argument + "' must fit on one line");
    const auto& line = sec.body.front();
    text::Scanner sc(line.text, line.number);
    CompactAction act;
    act.name = sec.argument;
    if (!text::valid_name(act.name)) throw ParseError(line.number, "invalid action name '" + act.name + "'");
    sc.expect("pre");
    act.pre = literals(atoms, sc.brace_group(), line.number);
    sc.expect("eff");
    if (sc.accept("oneof")) {
      sc.expect("(");
      do {
        act.effects.push_back(literals(atoms, sc.brace_group(), line.number));
      } while (sc.accept("|"));
      sc.expect(")");
    } else {
      act.effects.push_back(literals(atoms, sc.brace_group(), line.number));
    }
    if (!sc.at_end()) sc.error("unexpected trailing text");
    normalize(act.pre);
    for (auto& e : act.effects) normalize(e);
    fond.actions.push_back(std::move(act));
  }
  normalize(fond.goal);

  if (const auto* cs = single(sections, "constraints", false)) doc.constraints = detail::parse_constraints(*cs);
  if (const auto* ls = single(sections, "labels", false)) doc.labels = detail::parse_labels(*ls);

  try {
    validate_compact(fond);
  } catch (const ModelError& e) {
    throw ParseError(0, e.what());
  }
  return doc;
}

CompactFond parse_compact(std::string_view text) { return parse_compact_document(text).fond; }

std::string serialize_compact(const CompactDocument& doc) {
  const CompactFond& f = doc.fond;
  std::ostringstream os;
  os << "format: " << text::kFormatTag << '\n';
  os << "atoms:";
  for (const auto& a : f.atoms) os << ' ' << a;
  os << "\ninit:";
  for (auto a : f.init) os << ' ' << f.atoms[a];
  os << "\ngoal:";
  for (const auto& l : f.goal) os << ' ' << (l.positive ? "" : "-") << f.atoms[l.atom];
  os << '\n';
  for (const auto& act : f.actions) {
    os << "action " << act.name << ": pre ";
    write_literals(os, f.atoms, act.pre);
    os << " eff ";
    if (act.effects.size() == 1) {
      write_literals(os, f.atoms, act.effects.front());
    } else {
      os << "oneof(";
      for (std::size_t i = 0; i < act.effects.size(); ++i) {
        if (i) os << " | ";
        write_literals(os, f.atoms, act.effects[i]);
      }
      os << ')';
    }
    os << '\n';
  }
  detail::write_constraints(os, doc.constraints);
  detail::write_labels(os, doc.labels);
  return os.str();
}

}  // namespace fondplus
