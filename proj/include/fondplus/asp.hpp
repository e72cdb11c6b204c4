#pragma once

// Ground ASP program for the guess-and-check FOND+ encoding, and reading
// policies back from answer sets.

#include <string>
#include <string_view>

#include "fondplus/model.hpp"

namespace fondplus {

enum class AspDialect {
  /// Facts with the uppercase input predicates STATE, ACTION, INITIAL, GOAL,
  /// TRANSITION, ASET, BSET, followed by the rules.
  uppercase,
  /// Same program with lowercase input predicates and `#show pi/2.`, which
  /// clingo accepts.
  clingo,
};

/// Facts for `problem` followed by the rules. States and actions appear under
/// their own names when every name is a lowercase ASP identifier, otherwise
/// as s<id> and a<id>. Constraint indices start at 1. Output is byte-stable.
std::string emit_asp(const FondPlusProblem& problem, AspDialect dialect = AspDialect::uppercase);

/// Name of a state or action as it appears in emit_asp output.
std::string asp_state_token(const FondModel& model, StateId s);
std::string asp_action_token(const FondModel& model, ActionId a);

/// Policy from the pi/2 atoms in answer-set text such as clingo prints.
/// Other atoms are ignored. Throws ParseError on a malformed pi atom or on
/// tokens that name no state or action of `model`.
Policy extract_policy(const FondModel& model, std::string_view answer_set);

}  // namespace fondplus
