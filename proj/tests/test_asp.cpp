#include <doctest.h>

#include <fstream>
#include <sstream>

#include "fondplus/asp.hpp"
#include "fondplus/bench.hpp"
#include "fondplus/translate.hpp"

using namespace fondplus;

namespace {

std::string golden(const std::string& name) {
  std::ifstream in(std::string(GOLDEN_DIR) + "/" + name, std::ios::binary);
  REQUIRE_MESSAGE(in, "missing golden file " << name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("facts for the four-state example") {
  const std::string lp = emit_asp(figure1(8));
  CHECK(lp.starts_with("STATE(s0).\nSTATE(s1).\nSTATE(s2).\nSTATE(g).\nACTION(a).\nACTION(b).\nINITIAL(s0).\nGOAL(g).\n"));
  CHECK(lp.find("TRANSITION(s0,a,s1).\nTRANSITION(s0,a,s2).\n") != std::string::npos);
  CHECK(lp.find("ASET(1,a).\nBSET(1,b).\nASET(2,b).\nBSET(2,a).\n") != std::string::npos);
  CHECK(lp.find(":- reachable(S), not terminate(S).") != std::string::npos);
  CHECK(lp.find("#show") == std::string::npos);
}

TEST_CASE("clingo dialect lowercases input predicates") {
  const std::string lp = emit_asp(figure1(7), AspDialect::clingo);
  CHECK(lp.find("STATE(") == std::string::npos);
  CHECK(lp.find("ASET(") == std::string::npos);
  CHECK(lp.find("fair(S) :- pi(S,A), aset(I,A), blocked(X,S) : pi(X,B), bset(I,B), not blocked(S,X).") !=
        std::string::npos);
  CHECK(lp.ends_with("#show pi/2.\n"));
}

TEST_CASE("grounded labels fall back to numbered tokens") {
  const FondPlusProblem p = qnp_to_fondplus(gen_qnp1(2)).problem;
  const std::string lp = emit_asp(p);
  CHECK(lp.find("STATE(s0).") != std::string::npos);
  CHECK(lp.find("[") == std::string::npos);
  CHECK(asp_state_token(p.model(), StateId(3)) == "s3");
  CHECK(asp_action_token(p.model(), ActionId(1)) == "a1");
}

TEST_CASE("emission is stable and matches the frozen files") {
  for (int v = 1; v <= 8; ++v) {
    CAPTURE(v);
    CHECK(emit_asp(figure1(v)) == golden("figure1_c" + std::to_string(v) + ".lp"));
  }
  for (int n = 2; n <= 3; ++n) {
    CAPTURE(n);
    CHECK(emit_asp(qnp_to_fondplus(gen_qnp1(n)).problem) == golden("qnp1_n" + std::to_string(n) + ".lp"));
  }
}

TEST_CASE("extract_policy") {
  const FondModel m = figure1(7).model();
  const Policy pi = extract_policy(m, "Answer: 1\npi(s1,b) pi(s0,a) edge(s0,s1) api(x,y) pi(s2,b)\nSATISFIABLE\n");
  CHECK(serialize_policy(m, pi) == "s0 a\ns1 b\ns2 b\n");
  CHECK_THROWS_AS(extract_policy(m, "pi(s9,a)"), ParseError);
  CHECK_THROWS_AS(extract_policy(m, "pi(s0,z)"), ParseError);
  CHECK_THROWS_AS(extract_policy(m, "pi(s0)"), ParseError);
  CHECK_THROWS_AS(extract_policy(m, "pi(s0,a"), ParseError);
  CHECK(extract_policy(m, "SATISFIABLE").assigned_count() == 0);
}
