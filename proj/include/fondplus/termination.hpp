#pragma once

// Policy termination: the FOND+ fixpoint, the QNP Sieve in its edge-removal
// and inductive forms, Dual-FOND termination, and direct strong and
// strong-cyclic checks.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "fondplus/model.hpp"
#include "fondplus/translate.hpp"

namespace fondplus {

/// Square boolean matrix over policy-graph nodes.
class NodeRelation {
 public:
  NodeRelation() = default;
  explicit NodeRelation(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

  [[nodiscard]] std::size_t size() const { return n_; }
  [[nodiscard]] bool operator()(std::size_t s, std::size_t t) const {
    return (bits_[s * words_ + t / 64] >> (t % 64)) & 1U;
  }
  void set(std::size_t s, std::size_t t) { bits_[s * words_ + t / 64] |= std::uint64_t{1} << (t % 64); }

  friend bool operator==(const NodeRelation&, const NodeRelation&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// connected(s,t): a non-empty policy path from s to t on which s occurs
/// only as the first node (and possibly the last).
NodeRelation compute_connected(const PolicyGraph& g);

/// blocked(s,t): every non-empty policy path from s to t meets a
/// terminating state (endpoints included). This is the reading under which
/// fairness matches the trajectory semantics; see compute_blocked_rules.
NodeRelation compute_blocked(const PolicyGraph& g, const std::vector<bool>& terminate);

/// Least relation closed under: blocked(s,t) when not connected(s,t); when
/// connected(s,t) and s or t terminates; when connected(s,t) and every
/// successor x of s with connected(x,t) has blocked(x,t).
///
/// This is the rule form used by the ASP encoding. It differs from
/// compute_blocked in both directions. For a successor x = t the last rule
/// asks for blocked(t,t), a statement about cycles through t, so a direct
/// edge s->t avoiding terminating states can still leave (s,t) blocked.
/// And the least fixpoint can leave (s,t) unblocked when every s-to-t path
/// meets a terminating state but s also has a successor cycling back without
/// meeting one, e.g. a self-loop on s. Kept for comparison tests.
NodeRelation compute_blocked_rules(const PolicyGraph& g, const NodeRelation& connected,
                                   const std::vector<bool>& terminate);

/// True iff some A_i contains pi(s) and every node x with pi(x) in B_i and
/// not blocked(s,x) has blocked(x,s). `s` is a local node index.
bool state_fair(const FondPlusProblem& problem, const PolicyGraph& g, const NodeRelation& blocked, std::uint32_t s);

/// How terminate_fixpoint schedules node additions. `rounds` adds every
/// eligible node at once per round. `sequential` visits the nodes one at a
/// time in a permutation drawn from `seed`, re-evaluating blocked and fair
/// after each addition.
struct FixpointOrder {
  enum class Kind { rounds, sequential } kind = Kind::rounds;
  std::uint64_t seed = 0;
};

/// Result of the FOND+ termination fixpoint. Vectors are indexed by local
/// node of `graph`; rounds list the nodes labeled in each step, starting
/// with the reachable goals.
struct TerminationLabels {
  PolicyGraph graph;
  std::vector<bool> terminate;
  std::vector<bool> fair;  // at the fixpoint
  std::vector<std::vector<std::uint32_t>> rounds;

  [[nodiscard]] bool terminates(StateId s) const;
};

TerminationLabels terminate_fixpoint(const FondPlusProblem& problem, const Policy& policy,
                                     const FixpointOrder& order = {});

/// Solves iff no reachable non-goal state is a dead end and every reachable
/// state terminates. The witness is the set of dead ends, or the first
/// non-terminating node in BFS order.
Verdict verify_fondplus(const FondPlusProblem& problem, const Policy& policy, const FixpointOrder& order = {});

/// Edge-removal order for sieve_qnp: all removable edges per pass, or one
/// uniformly drawn removable edge at a time.
struct SieveOrder {
  enum class Kind { batch, random } kind = Kind::batch;
  std::uint64_t seed = 0;
};

/// Repeatedly removes an edge (s,s') when pi(s) decrements a variable that no
/// node on a remaining path from s' back to s increments; accepts iff the
/// remaining graph is acyclic.
bool sieve_qnp(const FondModel& model, const QnpAnnotation& annotation, const Policy& policy,
               const SieveOrder& order = {});

/// Inductive labeling: s terminates when every cycle on s meets a
/// terminating state, or pi(s) decrements some x and every cycle on s through
/// an x-incrementing state meets a terminating state. True iff every
/// reachable state terminates.
bool qnp_terminates(const FondModel& model, const QnpAnnotation& annotation, const Policy& policy);

/// Dual-FOND labeling: goals terminate; a fair action needs one terminating
/// successor, an adversarial one needs all of a non-empty successor set.
/// True iff every reachable non-goal state has an applicable action and
/// terminates.
bool dual_terminates(const DualFond& dual, const Policy& policy);

/// Acyclic policy graph without dead ends.
bool verify_strong(const FondModel& model, const Policy& policy);
/// No dead ends, and every reachable state has a policy path to a goal.
bool verify_strong_cyclic(const FondModel& model, const Policy& policy);

}  // namespace fondplus
