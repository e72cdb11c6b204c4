#include "fondplus/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fondplus/asp.hpp"
#include "fondplus/bench.hpp"
#include "fondplus/frontend.hpp"
#include "fondplus/solver.hpp"
#include "fondplus/termination.hpp"
#include "fondplus/translate.hpp"

namespace fondplus::cli {

namespace {

enum class Semantics { fondplus, strong, strong_cyclic, dual, qnp };

const std::map<std::string, Semantics> kSemantics{
    {"fondplus", Semantics::fondplus}, {"strong", Semantics::strong}, {"strong-cyclic", Semantics::strong_cyclic},
    {"dual", Semantics::dual},         {"qnp", Semantics::qnp},
};

enum class Source { qnp, dual, fond_strong, fond_strong_cyclic };

const std::map<std::string, Source> kSources{
    {"qnp", Source::qnp},
    {"dual", Source::dual},
    {"fond-strong", Source::fond_strong},
    {"fond-strong-cyclic", Source::fond_strong_cyclic},
};

const std::map<std::string, ActionOrder> kOrders{
    {"degree", ActionOrder::degree},
    {"declaration", ActionOrder::declaration},
};

const std::map<std::string, AspDialect> kDialects{
    {"uppercase", AspDialect::uppercase},
    {"clingo", AspDialect::clingo},
};

/// Raised for unreadable or unwritable files.
class IoError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw IoError("cannot write '" + path + "'");
}

/// Problem ready for the FOND+ machinery, plus what the other verifiers need.
struct Loaded {
  FondPlusProblem problem;
  std::optional<DualFond> dual;
  std::optional<QnpAnnotation> annotation;
};

/// Model and labels of an explicit or compact file; QNP files are rejected.
std::pair<FondPlusProblem, std::vector<LabelEntry>> load_fond(const std::string& text, FileKind kind,
                                                              std::size_t max_states) {
  if (kind == FileKind::explicit_fond) {
    ExplicitDocument doc = parse_explicit_document(text);
    return {std::move(doc.problem), std::move(doc.labels)};
  }
  if (kind == FileKind::compact_fond) {
    CompactDocument doc = parse_compact_document(text);
    return {ground(doc.fond, doc.constraints, GroundOptions{max_states}).problem, std::move(doc.labels)};
  }
  throw ModelError("a QNP file needs --semantics qnp or fondplus");
}

Loaded load(const std::string& path, Semantics semantics, std::size_t max_states) {
  const std::string text = read_file(path);
  const FileKind kind = detect_kind(text);

  if (kind == FileKind::qnp) {
    if (semantics != Semantics::qnp && semantics != Semantics::fondplus)
      throw ModelError("a QNP file needs --semantics qnp or fondplus");
    QnpTranslation t = qnp_to_fondplus(parse_qnp(text), GroundOptions{max_states});
    return Loaded{std::move(t.problem), std::nullopt, std::move(t.annotation)};
  }
  if (semantics == Semantics::qnp) throw ModelError("--semantics qnp needs a QNP file");

  auto [problem, labels] = load_fond(text, kind, max_states);
  switch (semantics) {
    case Semantics::fondplus:
      return Loaded{std::move(problem), std::nullopt, std::nullopt};
    case Semantics::strong:
      return Loaded{strong_to_fondplus(problem.model()), std::nullopt, std::nullopt};
    case Semantics::strong_cyclic:
      return Loaded{strong_cyclic_to_fondplus(problem.model()), std::nullopt, std::nullopt};
    case Semantics::dual: {
      DualFond dual = make_dual_fond(problem.model(), labels);
      FondPlusProblem p = dual_to_fondplus(dual);
      return Loaded{std::move(p), std::move(dual), std::nullopt};
    }
    case Semantics::qnp:
      break;
  }
  throw ModelError("unsupported semantics");
}

std::string policy_dot(const FondModel& model, const Policy& policy) {
  const PolicyGraph g = policy_graph(model, policy);
  std::ostringstream os;
  os << "digraph policy {\n";
  for (std::size_t i = 0; i < g.size(); ++i) {
    os << "  n" << i << " [label=\"" << model.label(g.nodes[i]);
    if (g.action[i]) os << "\\n" << model.action_name(*g.action[i]);
    os << '"';
    if (g.goal[i]) os << ", shape=doublecircle";
    if (g.dead_end[i]) os << ", color=red";
    os << "];\n";
  }
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::uint32_t j : g.successors[i]) os << "  n" << i << " -> n" << j << ";\n";
  os << "}\n";
  return os.str();
}

std::string state_list(const FondModel& model, const std::vector<StateId>& states) {
  std::string out;
  for (StateId s : states) {
    if (!out.empty()) out += ' ';
    out += model.label(s);
  }
  return out;
}

struct SolveArgs {
  std::string file;
  std::string semantics = "fondplus";
  std::size_t max_states = 0;
  std::optional<double> budget;
  std::string out_file, stats_file, dot_file;
  std::string action_order = "degree";
  bool restart = false;
  bool no_prune = false;
};

int cmd_solve(const SolveArgs& args, std::ostream& out) {
  const Loaded loaded = load(args.file, kSemantics.at(args.semantics), args.max_states);
  const FondModel& model = loaded.problem.model();

  SolveOptions options;
  options.max_states = args.max_states;
  options.action_order = kOrders.at(args.action_order);
  options.restart_on_conflict = args.restart;
  options.time_budget = args.budget;
  options.prune = !args.no_prune;
  const SolveResult result = solve(loaded.problem, options);

  out << "states: " << model.num_states() << '\n';
  out << "constraints: " << loaded.problem.constraints().size() << '\n';
  if (result.policy) {
    const std::string text = serialize_policy(model, *result.policy);
    if (args.out_file.empty())
      out << text;
    else
      write_file(args.out_file, text);
    if (!args.dot_file.empty()) write_file(args.dot_file, policy_dot(model, *result.policy));
  }
  if (!args.stats_file.empty()) {
    const nlohmann::ordered_json stats{
        {"status", to_string(result.status)},
        {"states", model.num_states()},
        {"nodes_expanded", result.stats.nodes_expanded},
        {"verifier_calls", result.stats.verifier_calls},
        {"backtracks", result.stats.backtracks},
        {"elapsed_ms", result.stats.elapsed_ms},
    };
    write_file(args.stats_file, stats.dump(2) + "\n");
  }

  switch (result.status) {
    case SolveStatus::solved:
      out << "STATUS: SOLVED\n";
      return kSuccess;
    case SolveStatus::unsolvable:
      out << "STATUS: UNSOLVABLE\n";
      return kNegative;
    case SolveStatus::resource_limit:
      out << "STATUS: RESOURCE_LIMIT\n";
      return kResourceLimit;
  }
  return kResourceLimit;
}

struct VerifyArgs {
  std::string problem_file, policy_file;
  std::string semantics = "fondplus";
  std::size_t max_states = 0;
};

int cmd_verify(const VerifyArgs& args, std::ostream& out) {
  const Semantics semantics = kSemantics.at(args.semantics);
  const Loaded loaded = load(args.problem_file, semantics, args.max_states);
  const FondModel& model = loaded.problem.model();
  const Policy policy = parse_policy(model, read_file(args.policy_file));
  validate_policy(model, policy);
  for (const auto& w : lint_policy(model, policy)) out << "warning: " << w << '\n';

  bool ok = false;
  switch (semantics) {
    case Semantics::fondplus: {
      const Verdict v = verify_fondplus(loaded.problem, policy);
      ok = v.solves;
      if (v.witness) {
        out << "witness: " << to_string(v.witness->kind) << ' ' << state_list(model, v.witness->states);
        if (v.witness->kind == WitnessKind::non_terminating) out << " (after " << v.witness->rounds << " rounds)";
        out << '\n';
      }
      break;
    }
    case Semantics::strong:
      ok = verify_strong(model, policy);
      break;
    case Semantics::strong_cyclic:
      ok = verify_strong_cyclic(model, policy);
      break;
    case Semantics::dual:
      ok = dual_terminates(*loaded.dual, policy);
      break;
    case Semantics::qnp: {
      const bool cyclic = verify_strong_cyclic(model, policy);
      const bool sieve = sieve_qnp(model, *loaded.annotation, policy);
      out << "strong-cyclic: " << (cyclic ? "yes" : "no") << '\n';
      out << "terminating: " << (sieve ? "yes" : "no") << '\n';
      ok = cyclic && sieve;
      break;
    }
  }
  out << "STATUS: " << (ok ? "VALID" : "INVALID") << '\n';
  return ok ? kSuccess : kNegative;
}

struct TranslateArgs {
  std::string in_file, from, out_file;
  std::size_t max_states = 0;
};

int cmd_translate(const TranslateArgs& args, std::ostream& out) {
  const std::string text = read_file(args.in_file);
  const FileKind kind = detect_kind(text);
  std::string from = args.from;
  if (from.empty()) {
    if (kind != FileKind::qnp) throw ModelError("--from is required unless the input is a QNP file");
    from = "qnp";
  }

  std::optional<FondPlusProblem> problem;
  switch (kSources.at(from)) {
    case Source::qnp:
      if (kind != FileKind::qnp) throw ModelError("--from qnp needs a QNP file");
      problem = qnp_to_fondplus(parse_qnp(text), GroundOptions{args.max_states}).problem;
      break;
    case Source::dual: {
      auto [p, labels] = load_fond(text, kind, args.max_states);
      problem = dual_to_fondplus(make_dual_fond(p.model(), labels));
      break;
    }
    case Source::fond_strong:
      problem = strong_to_fondplus(load_fond(text, kind, args.max_states).first.model());
      break;
    case Source::fond_strong_cyclic:
      problem = strong_cyclic_to_fondplus(load_fond(text, kind, args.max_states).first.model());
      break;
  }

  const std::string result = serialize_explicit(*problem);
  if (args.out_file.empty())
    out << result;
  else
    write_file(args.out_file, result);
  out << "states: " << problem->model().num_states() << '\n';
  out << "constraints: " << problem->constraints().size() << '\n';
  out << "STATUS: OK\n";
  return kSuccess;
}

int cmd_gen(const std::string& family, int n, const std::string& out_file, std::ostream& out) {
  const auto f = parse_family(family);
  if (!f) throw ModelError("unknown family '" + family + "'");
  const std::string text = generate(FamilySpec{*f, n});
  if (out_file.empty())
    out << text;
  else
    write_file(out_file, text);
  out << "STATUS: OK\n";
  return kSuccess;
}

int cmd_emit_asp(const std::string& file, const std::string& semantics, const std::string& dialect,
                 const std::string& out_file, std::size_t max_states, std::ostream& out) {
  const Loaded loaded = load(file, kSemantics.at(semantics), max_states);
  const std::string text = emit_asp(loaded.problem, kDialects.at(dialect));
  if (out_file.empty())
    out << text;
  else
    write_file(out_file, text);
  out << "STATUS: OK\n";
  return kSuccess;
}

template <typename T>
std::vector<std::string> keys(const std::map<std::string, T>& m) {
  std::vector<std::string> out;
  for (const auto& [k, v] : m) out.push_back(k);
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Planner and verifier for FOND problems with conditional fairness assumptions", "fondp"};
  app.require_subcommand(1);
  const std::size_t default_cap = default_max_states();

  SolveArgs solve_args;
  solve_args.max_states = default_cap;
  auto* solve_cmd = app.add_subcommand("solve", "Search for a policy");
  solve_cmd->add_option("file", solve_args.file, "Problem file")->required();
  solve_cmd->add_option("--semantics", solve_args.semantics)->check(CLI::IsMember(keys(kSemantics)));
  solve_cmd->add_option("--max-states", solve_args.max_states, "Reachable-state cap")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--budget", solve_args.budget, "Time budget in seconds")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--out", solve_args.out_file, "Policy output file (default: stdout)");
  solve_cmd->add_option("--stats", solve_args.stats_file, "Statistics JSON output file");
  solve_cmd->add_option("--dot", solve_args.dot_file, "Policy graph in DOT format");
  solve_cmd->add_option("--action-order", solve_args.action_order)->check(CLI::IsMember(keys(kOrders)));
  solve_cmd->add_flag("--restart", solve_args.restart, "Restart on conflict");
  solve_cmd->add_flag("--no-prune", solve_args.no_prune, "Disable hopeless-branch pruning");

  VerifyArgs verify_args;
  verify_args.max_states = default_cap;
  auto* verify_cmd = app.add_subcommand("verify", "Check a policy against a problem");
  verify_cmd->add_option("problem", verify_args.problem_file, "Problem file")->required();
  verify_cmd->add_option("policy", verify_args.policy_file, "Policy file")->required();
  verify_cmd->add_option("--semantics", verify_args.semantics)->check(CLI::IsMember(keys(kSemantics)));
  verify_cmd->add_option("--max-states", verify_args.max_states)->check(CLI::PositiveNumber);

  TranslateArgs translate_args;
  translate_args.max_states = default_cap;
  auto* translate_cmd = app.add_subcommand("translate", "Write the equivalent explicit FOND+ problem");
  translate_cmd->add_option("file", translate_args.in_file, "Input file")->required();
  translate_cmd->add_option("--from", translate_args.from)->check(CLI::IsMember(keys(kSources)));
  translate_cmd->add_option("--out", translate_args.out_file, "Output file (default: stdout)");
  translate_cmd->add_option("--max-states", translate_args.max_states)->check(CLI::PositiveNumber);

  std::string family, gen_out;
  int gen_n = 2;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a benchmark instance");
  gen_cmd->add_option("family", family, "Family name")->required()->check(CLI::IsMember(
      {"qnp1", "qnp2", "f01_qnp1", "f01_qnp2", "f11_qnp1", "f11_qnp2", "figure1", "clear"}));
  gen_cmd->add_option("--n", gen_n, "Size, or variant 1..8 for figure1");
  gen_cmd->add_option("--out", gen_out, "Output file (default: stdout)");

  std::string asp_file, asp_out, asp_semantics = "fondplus", asp_dialect = "uppercase";
  std::size_t asp_max_states = default_cap;
  auto* asp_cmd = app.add_subcommand("emit-asp", "Write the ASP program for a problem");
  asp_cmd->add_option("file", asp_file, "Problem file")->required();
  asp_cmd->add_option("--semantics", asp_semantics)->check(CLI::IsMember(keys(kSemantics)));
  asp_cmd->add_option("--dialect", asp_dialect)->check(CLI::IsMember(keys(kDialects)));
  asp_cmd->add_option("--out", asp_out, "Output file (default: stdout)");
  asp_cmd->add_option("--max-states", asp_max_states)->check(CLI::PositiveNumber);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    out << "STATUS: INPUT_ERROR\n";
    return kInputError;
  }

  try {
    if (*solve_cmd) return cmd_solve(solve_args, out);
    if (*verify_cmd) return cmd_verify(verify_args, out);
    if (*translate_cmd) return cmd_translate(translate_args, out);
    if (*gen_cmd) return cmd_gen(family, gen_n, gen_out, out);
    if (*asp_cmd) return cmd_emit_asp(asp_file, asp_semantics, asp_dialect, asp_out, asp_max_states, out);
  } catch (const GoalUnreachableError& e) {
    err << "error: " << e.what() << '\n';
    out << "STATUS: UNSOLVABLE\n";
    return kNegative;
  } catch (const SizeLimitError& e) {
    err << "error: " << e.what() << '\n';
    out << "STATUS: RESOURCE_LIMIT\n";
    return kResourceLimit;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    out << "STATUS: INPUT_ERROR\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace fondplus::cli
