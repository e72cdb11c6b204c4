#include <doctest.h>

#include <algorithm>

#include "fondplus/bench.hpp"
#include "fondplus/translate.hpp"

using namespace fondplus;

TEST_CASE("family names") {
  for (Family f : {Family::qnp1, Family::qnp2, Family::f01_qnp1, Family::f01_qnp2, Family::f11_qnp1, Family::f11_qnp2,
                   Family::figure1, Family::clear})
    CHECK(parse_family(to_string(f)) == f);
  CHECK_FALSE(parse_family("qnp3"));
}

TEST_CASE("qnp1 and qnp2 shapes") {
  const Qnp q = gen_qnp1(2);
  REQUIRE(q.actions.size() == 3);
  CHECK(q.actions[0].name == "b");
  CHECK(q.actions[1].numeric_pre == std::vector<NumericCondition>{{0, false}});
  CHECK(q.actions[2].numeric_pre == std::vector<NumericCondition>{{0, true}, {1, false}});
  CHECK(q.actions[2].inc.empty());
  CHECK(q.goal_numeric == std::vector<NumericCondition>{{1, true}});

  const Qnp q2 = gen_qnp2(2);
  CHECK(q2.actions[2].inc == std::vector<std::uint32_t>{0});
  CHECK(q2.actions[2].dec == std::vector<std::uint32_t>{1});

  CHECK_THROWS_AS(gen_qnp1(1), ModelError);
}

TEST_CASE("f01 replaces b by a non-deterministic bprime outside every constraint") {
  const CompactDocument doc = gen_f01_compact(Family::qnp2, 3);
  CHECK(doc.fond.actions[0].name == "bprime");
  CHECK(doc.fond.actions[0].effects.size() == 2);
  const QnpTranslation base = qnp_to_fondplus(gen_qnp2(3));
  const FondPlusProblem p = gen_f01(Family::qnp2, 3);
  CHECK(p.constraints() == base.problem.constraints());
  CHECK(p.always_adversarial(*p.model().find_action("bprime")));
}

TEST_CASE("f11 construction") {
  const FondPlusProblem p = gen_f11(Family::qnp1, 3);
  const FondModel& m = p.model();
  const ActionId bprime = *m.find_action("bprime"), c = *m.find_action("c"), d = *m.find_action("d");
  CHECK_FALSE(p.always_adversarial(bprime));
  CHECK(p.always_adversarial(c));
  CHECK_FALSE(m.is_nondeterministic(d));

  const CompactDocument doc = gen_f11_compact(Family::qnp1, 3);
  for (const auto& a : doc.fond.actions) {
    if (a.name[0] != 'a') continue;
    CHECK(std::find(a.pre.begin(), a.pre.end(), Literal{4, true}) != a.pre.end());
  }
  CHECK(doc.constraints.back() == NamedConstraint{{"bprime"}, {}});
}

TEST_CASE("figure1 variants") {
  CHECK(figure1(1).constraints().empty());
  CHECK(figure1(2).constraints().size() == 2);
  const FondPlusProblem p8 = figure1(8);
  const auto& c8 = p8.constraints();
  REQUIRE(c8.size() == 2);
  CHECK(c8[0] == FairnessAssumption{{ActionId(0)}, {ActionId(1)}});
  CHECK(c8[1] == FairnessAssumption{{ActionId(1)}, {ActionId(0)}});
  CHECK_THROWS_AS(figure1(0), ModelError);
  CHECK_THROWS_AS(figure1(9), ModelError);
}

TEST_CASE("clear") {
  const QnpTranslation t = qnp_to_fondplus(clear_qnp());
  CHECK(t.problem.constraints().size() == 1);
  CHECK(t.problem.model().num_states() == 4);
}

TEST_CASE("generated files round-trip and are stable") {
  for (Family f : {Family::qnp1, Family::qnp2, Family::clear}) {
    const std::string text = generate({f, 3});
    CHECK(serialize_qnp(parse_qnp(text)) == text);
  }
  for (Family f : {Family::f01_qnp1, Family::f01_qnp2, Family::f11_qnp1, Family::f11_qnp2}) {
    const std::string text = generate({f, 3});
    CHECK(serialize_compact(parse_compact_document(text)) == text);
    CHECK(text == generate({f, 3}));
  }
  for (int v = 1; v <= 8; ++v) {
    const std::string text = generate({Family::figure1, v});
    CHECK(parse_explicit(text) == figure1(v));
  }
  CHECK_THROWS_AS(generate({Family::qnp2, 1}), ModelError);
}
