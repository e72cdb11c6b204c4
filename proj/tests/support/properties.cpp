#include "properties.hpp"

#include <sstream>

#include "brute_force.hpp"
#include "fondplus/oracle.hpp"
#include "fondplus/solver.hpp"
#include "fondplus/termination.hpp"
#include "random_models.hpp"

namespace fondplus::testing {

std::string Report::summary() const {
  std::ostringstream os;
  os << instances << " instances, " << checks << " checks, " << mismatches << " mismatches";
  if (!first_mismatch.empty()) os << " (first: " << first_mismatch << ')';
  return os.str();
}

namespace {

std::string where(std::size_t instance, const FondModel& model, const Policy& policy) {
  return "instance " + std::to_string(instance) + ", policy {" + serialize_policy(model, policy) + "}";
}

QnpAnnotation random_annotation(Rng& rng, const FondModel& model) {
  const std::size_t vars = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
  QnpAnnotation ann;
  ann.dec_actions.resize(vars);
  ann.inc_actions.resize(vars);
  for (std::size_t v = 0; v < vars; ++v) {
    ann.variables.push_back("x" + std::to_string(v));
    for (std::uint32_t a = 0; a < model.num_actions(); ++a) {
      const auto roll = std::uniform_int_distribution<int>(0, 9)(rng);
      if (roll < 4)
        ann.dec_actions[v].push_back(ActionId(a));
      else if (roll < 6)
        ann.inc_actions[v].push_back(ActionId(a));
    }
  }
  return ann;
}

}  // namespace

Report check_strong_translations(std::uint64_t seed, std::size_t models, std::size_t max_states) {
  Rng rng(seed);
  Report r;
  for (std::size_t i = 0; i < models; ++i) {
    const FondModel m = random_model(rng, {2, max_states, 3, 3, 0.6});
    const FondPlusProblem strong = strong_to_fondplus(m);
    const FondPlusProblem cyclic = strong_cyclic_to_fondplus(m);
    ++r.instances;
    bool any_strong = false, any_cyclic = false;
    for_each_reachable_policy(m, [&](const Policy& pi) {
      const bool bs = brute_strong(m, pi), bc = brute_strong_cyclic(m, pi);
      any_strong |= bs;
      any_cyclic |= bc;
      auto at = [&] { return where(i, m, pi); };
      r.record(verify_fondplus(strong, pi).solves == bs, [&] { return "strong translation, " + at(); });
      r.record(verify_strong(m, pi) == bs, [&] { return "verify_strong, " + at(); });
      r.record(fair_lasso_oracle(strong, pi).solves == bs, [&] { return "lasso oracle without constraints, " + at(); });
      r.record(verify_fondplus(cyclic, pi).solves == bc, [&] { return "strong-cyclic translation, " + at(); });
      r.record(verify_strong_cyclic(m, pi) == bc, [&] { return "verify_strong_cyclic, " + at(); });
      return true;
    });
    auto at = [&] { return "instance " + std::to_string(i); };
    r.record((solve(strong).status == SolveStatus::solved) == any_strong, [&] { return "strong solvability, " + at(); });
    r.record((solve(cyclic).status == SolveStatus::solved) == any_cyclic, [&] { return "strong-cyclic solvability, " + at(); });
  }
  return r;
}

Report check_sieve_forms(std::uint64_t seed, std::size_t instances) {
  Rng rng(seed);
  Report r;
  for (std::size_t i = 0; i < instances; ++i) {
    const FondModel m = random_model(rng, {2, 7, 3, 3, 0.7});
    const QnpAnnotation ann = random_annotation(rng, m);
    ++r.instances;
    for_each_reachable_policy(m, [&](const Policy& pi) {
      r.record(sieve_qnp(m, ann, pi) == qnp_terminates(m, ann, pi), [&] { return "sieve forms, " + where(i, m, pi); });
      return true;
    });
  }
  return r;
}

Report check_qnp_translation(std::uint64_t seed, std::size_t qnps) {
  Rng rng(seed);
  Report r;
  std::size_t attempts = 0;
  while (r.instances < qnps) {
    if (++attempts > qnps * 50) {
      r.record(false, [&] { return std::string("too few groundable QNPs"); });
      break;
    }
    const Qnp q = random_qnp(rng, 2, 2, 4);
    std::optional<QnpTranslation> t;
    try {
      t = qnp_to_fondplus(q, GroundOptions{64});
    } catch (const GoalUnreachableError&) {
      continue;
    }
    ++r.instances;
    const FondModel& m = t->problem.model();
    r.record(m == ground(t->direct.fond).problem.model(), [&] { return std::string("translated model differs from ground(t_direct)"); });
    for_each_reachable_policy(m, [&](const Policy& pi) {
      const bool expected = verify_strong_cyclic(m, pi) && sieve_qnp(m, t->annotation, pi);
      r.record(verify_fondplus(t->problem, pi).solves == expected, [&] { return "qnp translation, " + where(r.instances, m, pi); });
      return true;
    });
  }
  return r;
}

Report check_lasso(std::uint64_t seed, std::size_t problems, std::size_t max_states) {
  Rng rng(seed);
  Report r;
  for (std::size_t i = 0; i < problems; ++i) {
    const FondPlusProblem p = random_problem(rng, {2, max_states, 3, 3, 0.6}, 3);
    ++r.instances;
    for_each_policy(p.model(), [&](const Policy& pi) {
      r.record(verify_fondplus(p, pi).solves == fair_lasso_oracle(p, pi).solves, [&] { return "lasso, " + where(i, p.model(), pi); });
      return true;
    });
  }
  return r;
}

Report check_dual(std::uint64_t seed, std::size_t instances) {
  Rng rng(seed);
  Report r;
  for (std::size_t i = 0; i < instances; ++i) {
    const DualFond d = random_dual(rng, {2, 7, 3, 3, 0.6});
    const FondPlusProblem p = dual_to_fondplus(d);
    ++r.instances;
    bool any = false;
    for_each_reachable_policy(d.model, [&](const Policy& pi) {
      const bool expected = brute_dual(d, pi);
      any |= expected;
      auto at = [&] { return where(i, d.model, pi); };
      r.record(dual_terminates(d, pi) == expected, [&] { return "dual labeling, " + at(); });
      r.record(verify_fondplus(p, pi).solves == expected, [&] { return "dual translation, " + at(); });
      return true;
    });
    r.record((solve(p).status == SolveStatus::solved) == any, [&] { return "dual solvability, instance " + std::to_string(i); });
  }
  return r;
}

Report check_confluence(std::uint64_t seed, std::size_t problems, std::size_t max_states) {
  Rng rng(seed);
  Report r;
  for (std::size_t i = 0; i < problems; ++i) {
    const FondPlusProblem p = random_problem(rng, {2, max_states, 3, 3, 0.6}, 3);
    const QnpAnnotation ann = random_annotation(rng, p.model());
    const std::uint64_t s1 = rng(), s2 = rng();
    ++r.instances;
    for_each_reachable_policy(p.model(), [&](const Policy& pi) {
      auto at = [&] { return where(i, p.model(), pi); };
      const auto base = terminate_fixpoint(p, pi).terminate;
      r.record(terminate_fixpoint(p, pi, {FixpointOrder::Kind::sequential, s1}).terminate == base, [&] { return "fixpoint order, " + at(); });
      r.record(terminate_fixpoint(p, pi, {FixpointOrder::Kind::sequential, s2}).terminate == base, [&] { return "fixpoint order, " + at(); });
      const bool sieve = sieve_qnp(p.model(), ann, pi);
      r.record(sieve_qnp(p.model(), ann, pi, {SieveOrder::Kind::random, s1}) == sieve, [&] { return "sieve order, " + at(); });
      r.record(sieve_qnp(p.model(), ann, pi, {SieveOrder::Kind::random, s2}) == sieve, [&] { return "sieve order, " + at(); });
      return true;
    });
  }
  return r;
}

}  // namespace fondplus::testing
