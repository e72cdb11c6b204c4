#pragma once

// Randomized equivalence checks. Each returns how many instances and
// individual comparisons ran and how many disagreed; the unit tests run
// them at small sizes and the acceptance binary at full size.

#include <cstdint>
#include <string>

namespace fondplus::testing {

struct Report {
  std::size_t instances = 0;
  std::size_t checks = 0;
  std::size_t mismatches = 0;
  std::string first_mismatch;

  template <class Describe>
  void record(bool agree, Describe describe) {
    ++checks;
    if (!agree && mismatches++ == 0) first_mismatch = describe();
  }
  [[nodiscard]] bool ok() const { return mismatches == 0; }
  [[nodiscard]] std::string summary() const;
};

/// Strong and strong-cyclic reference checks against the FOND+ verifier on
/// the translated problems, the direct verifiers, and solver solvability.
Report check_strong_translations(std::uint64_t seed, std::size_t models, std::size_t max_states);

/// sieve_qnp against qnp_terminates on random models with random
/// increment/decrement annotations.
Report check_sieve_forms(std::uint64_t seed, std::size_t instances);

/// verify_fondplus on qnp_to_fondplus(Q) against strong-cyclicity plus the
/// Sieve, over `qnps` random QNPs that ground successfully.
Report check_qnp_translation(std::uint64_t seed, std::size_t qnps);

/// verify_fondplus against fair_lasso_oracle on every policy.
Report check_lasso(std::uint64_t seed, std::size_t problems, std::size_t max_states);

/// Dual-FOND reference check against the translated FOND+ problem, per
/// policy and for solvability.
Report check_dual(std::uint64_t seed, std::size_t instances);

/// Same termination labels under the round schedule and two sequential
/// schedules, and same Sieve verdicts under batch and two random removal
/// orders.
Report check_confluence(std::uint64_t seed, std::size_t problems, std::size_t max_states);

}  // namespace fondplus::testing
