#include <doctest.h>

#include <algorithm>

#include "brute_force.hpp"
#include "fondplus/bench.hpp"
#include "fondplus/oracle.hpp"
#include "fondplus/solver.hpp"
#include "fondplus/termination.hpp"
#include "fondplus/translate.hpp"
#include "random_models.hpp"

using namespace fondplus;

TEST_CASE("four-state example: solvability and the unique policy") {
  const std::vector<bool> expected{false, true, false, true, false, false, true, false};
  for (int v = 1; v <= 8; ++v) {
    CAPTURE(v);
    const SolveResult r = solve(figure1(v));
    CHECK((r.status == SolveStatus::solved) == expected[v - 1]);
    if (r.status != SolveStatus::solved) {
      CHECK(r.status == SolveStatus::unsolvable);
      CHECK_FALSE(r.policy);
      continue;
    }
    REQUIRE(r.policy);
    CHECK(serialize_policy(figure1(v).model(), *r.policy) == "s0 a\ns1 b\ns2 b\n");
    CHECK(r.stats.verifier_calls >= 1);
  }
}

TEST_CASE("state cap gives resource_limit") {
  SolveOptions o;
  o.max_states = 3;
  CHECK(solve(figure1(7), o).status == SolveStatus::resource_limit);
}

TEST_CASE("time budget gives resource_limit") {
  SolveOptions o;
  o.prune = false;
  o.time_budget = 1e-9;
  const SolveResult r = solve(gen_f01(Family::qnp2, 6), o);
  CHECK(r.status == SolveStatus::resource_limit);
  CHECK_FALSE(r.policy);
}

TEST_CASE("qnp families") {
  for (int n = 2; n <= 5; ++n) {
    CAPTURE(n);
    const QnpTranslation q1 = qnp_to_fondplus(gen_qnp1(n));
    const SolveResult r1 = solve(q1.problem);
    REQUIRE(r1.status == SolveStatus::solved);
    CHECK(verify_fondplus(q1.problem, *r1.policy).solves);
    CHECK(sieve_qnp(q1.problem.model(), q1.annotation, *r1.policy));
    CHECK(solve(qnp_to_fondplus(gen_qnp2(n)).problem).status == SolveStatus::solved);
    CHECK(solve(gen_f01(Family::qnp1, n)).status == SolveStatus::unsolvable);
  }
}

TEST_CASE("clear policy") {
  const QnpTranslation t = qnp_to_fondplus(clear_qnp());
  const SolveResult r = solve(t.problem);
  REQUIRE(r.status == SolveStatus::solved);
  CHECK(serialize_policy(t.problem.model(), *r.policy) == "[] b\n[p] a\n");
}

TEST_CASE("options do not change solvability") {
  testing::Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    const FondPlusProblem p = testing::random_problem(rng, {2, 7, 3, 3, 0.6}, 2);
    const SolveResult base = solve(p);
    for (const SolveOptions& o :
         {SolveOptions{200000, ActionOrder::declaration, false, std::nullopt, true},
          SolveOptions{200000, ActionOrder::degree, true, std::nullopt, true},
          SolveOptions{200000, ActionOrder::degree, false, std::nullopt, false}}) {
      const SolveResult r = solve(p, o);
      REQUIRE(r.status == base.status);
      if (r.policy) CHECK(verify_fondplus(p, *r.policy).solves);
    }
  }
}

TEST_CASE("solver agrees with exhaustive enumeration") {
  testing::Rng rng(5);
  for (int i = 0; i < 400; ++i) {
    const FondPlusProblem p = testing::random_problem(rng, {2, 6, 3, 3, 0.6}, 2);
    const bool any = testing::exists_policy(p.model(), [&](const Policy& pi) { return fair_lasso_oracle(p, pi).solves; });
    CHECK((solve(p).status == SolveStatus::solved) == any);
  }
}

TEST_CASE("semantics specialization") {
  testing::Rng rng(9);
  for (int i = 0; i < 300; ++i) {
    const FondModel m = testing::random_model(rng, {2, 7, 3, 3, 0.6});
    const SolveResult s = solve(strong_to_fondplus(m));
    if (s.policy) CHECK(verify_strong(m, *s.policy));
    const SolveResult sc = solve(strong_cyclic_to_fondplus(m));
    if (sc.policy) CHECK(verify_strong_cyclic(m, *sc.policy));
  }
}

TEST_CASE("prune_hopeless") {
  const FondPlusProblem p = figure1(1);
  const auto reach = goal_reachable_states(p.model());
  CHECK(std::all_of(reach.begin(), reach.end(), [](bool b) { return b; }));

  Policy pi(4);
  pi.assign(StateId(0), ActionId(0));
  pi.assign(StateId(1), ActionId(1));
  // a and b are in no A set under C1; s0 -> s1 -> s0 is an adversarial cycle.
  CHECK(prune_hopeless(p, policy_graph(p, pi), reach));
  CHECK_FALSE(prune_hopeless(figure1(2), policy_graph(p, pi), reach));

  ModelData d{{"s", "sink", "g"},
              {"a"},
              StateId(0),
              {StateId(2)},
              {{StateId(0), ActionId(0), StateId(1)}, {StateId(0), ActionId(0), StateId(2)}}};
  const FondPlusProblem q(FondModel(d), {});
  Policy qi(3);
  qi.assign(StateId(0), ActionId(0));
  CHECK(prune_hopeless(q, policy_graph(q, qi), goal_reachable_states(q.model())));
  CHECK(solve(q).status == SolveStatus::unsolvable);
}
