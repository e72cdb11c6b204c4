#pragma once

// Problem file formats (explicit FOND+, compact STRIPS-with-oneof, QNP),
// policy files, and the grounder that turns compact descriptions into
// explicit models. All formats start with the line `format: fondplus-v1`;
// docs/formats.md has the full grammar.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fondplus/model.hpp"

namespace fondplus {

enum class ActionLabel { fair, adversarial };

const char* to_string(ActionLabel label);

/// `labels:` section entry used by Dual-FOND inputs.
struct LabelEntry {
  std::string action;
  ActionLabel label;

  friend bool operator==(const LabelEntry&, const LabelEntry&) = default;
};

// ---------------------------------------------------------------------------
// Explicit format

struct ExplicitDocument {
  FondPlusProblem problem;
  std::vector<LabelEntry> labels;
};

ExplicitDocument parse_explicit_document(std::string_view text);
FondPlusProblem parse_explicit(std::string_view text);
std::string serialize_explicit(const FondPlusProblem& problem, const std::vector<LabelEntry>& labels = {});

// ---------------------------------------------------------------------------
// Compact FOND

struct Literal {
  std::uint32_t atom = 0;
  bool positive = true;

  friend auto operator<=>(const Literal&, const Literal&) = default;
};

struct CompactAction {
  std::string name;
  std::vector<Literal> pre;
  /// One alternative for deterministic actions, two or more for oneof.
  std::vector<std::vector<Literal>> effects;

  friend bool operator==(const CompactAction&, const CompactAction&) = default;
};

struct CompactFond {
  std::vector<std::string> atoms;
  std::vector<std::uint32_t> init;  // atoms true initially, sorted
  std::vector<Literal> goal;
  std::vector<CompactAction> actions;

  friend bool operator==(const CompactFond&, const CompactFond&) = default;
};

/// Fairness assumption over action names, resolved after grounding.
struct NamedConstraint {
  std::vector<std::string> a_set;
  std::vector<std::string> b_set;

  friend bool operator==(const NamedConstraint&, const NamedConstraint&) = default;
};

struct CompactDocument {
  CompactFond fond;
  std::vector<NamedConstraint> constraints;
  std::vector<LabelEntry> labels;

  friend bool operator==(const CompactDocument&, const CompactDocument&) = default;
};

/// Throws ModelError on inconsistent literals, duplicate alternatives, or
/// unknown atoms.
void validate_compact(const CompactFond& fond);

CompactDocument parse_compact_document(std::string_view text);
CompactFond parse_compact(std::string_view text);
std::string serialize_compact(const CompactDocument& doc);

// ---------------------------------------------------------------------------
// QNP

/// `X=0` when `zero`, `X>0` otherwise.
struct NumericCondition {
  std::uint32_t variable = 0;
  bool zero = false;

  friend auto operator<=>(const NumericCondition&, const NumericCondition&) = default;
};

struct QnpAction {
  std::string name;
  std::vector<Literal> pre;
  std::vector<NumericCondition> numeric_pre;
  std::vector<Literal> effects;
  std::vector<std::uint32_t> inc;
  std::vector<std::uint32_t> dec;

  friend bool operator==(const QnpAction&, const QnpAction&) = default;
};

struct Qnp {
  std::vector<std::string> atoms;
  std::vector<std::string> variables;
  std::vector<std::uint32_t> init;               // atoms true initially, sorted
  std::vector<NumericCondition> init_numeric;    // exactly one per variable
  std::vector<Literal> goal;
  std::vector<NumericCondition> goal_numeric;
  std::vector<QnpAction> actions;

  friend bool operator==(const Qnp&, const Qnp&) = default;
};

/// Throws ModelError unless every Dec(X) action requires X>0, no action both
/// increments and decrements the same variable, and literals are consistent.
void validate_qnp(const Qnp& q);

Qnp parse_qnp(std::string_view text);
std::string serialize_qnp(const Qnp& q);

// ---------------------------------------------------------------------------
// Grounding

struct GroundOptions {
  std::size_t max_states = 200000;
};

/// Reachable-state cap: FONDP_MAX_STATES when set to a positive integer,
/// 200000 otherwise.
std::size_t default_max_states();

struct GroundingResult {
  FondPlusProblem problem;
  /// True atoms of each state, sorted; state 0 is the initial state.
  std::vector<std::vector<std::uint32_t>> state_atoms;
  /// Compact action index of each ground action (one ground action per
  /// compact action, so this is the identity map).
  std::vector<std::size_t> action_origin;
};

/// Canonical label of an atom set, e.g. `[p+q]`; `[]` for the empty set.
std::string state_label(const std::vector<std::string>& atom_names, const std::vector<std::uint32_t>& true_atoms);

/// Explicit model over every state forward-reachable from the initial state
/// using all applicable actions, numbered in first-visit BFS order. Named
/// constraints are resolved to ground actions; A members that never show two
/// distinct outcomes are dropped, as are constraints left with an empty A.
GroundingResult ground(const CompactFond& fond, const std::vector<NamedConstraint>& constraints = {},
                       const GroundOptions& options = {});

// ---------------------------------------------------------------------------
// Policies

/// Lines `state_label action_name`. Unknown names raise ParseError.
Policy parse_policy(const FondModel& model, std::string_view text);
/// One line per assigned state, in state order.
std::string serialize_policy(const FondModel& model, const Policy& policy);

/// Kind of problem file, detected from its section headers.
enum class FileKind { explicit_fond, compact_fond, qnp };
FileKind detect_kind(std::string_view text);

}  // namespace fondplus
