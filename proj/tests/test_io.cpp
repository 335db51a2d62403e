// Copyright 2026 The Relfair Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include "relfair/errors.hpp"
#include "relfair/io.hpp"
#include "test_util.hpp"

using namespace relfair;
using relfair::testutil::pt;

TEST_CASE("rational literals") {
  CHECK(parse_rat("3") == 3);
  CHECK(parse_rat("-5/10") == Rat(-1, 2));
  CHECK(format_rat(parse_rat("4/6")) == "2/3");
  CHECK_THROWS_AS(parse_rat("1.5"), parse_error);
  CHECK_THROWS_AS(parse_rat("1/0"), parse_error);
  CHECK_THROWS_AS(parse_rat(""), parse_error);
  CHECK_THROWS_AS(parse_rat("a/b"), parse_error);
}

TEST_CASE("problem JSON round trip and canonicalization on load") {
  Json j;
  j["n"] = 2;
  j["kind"] = "scmp";
  j["generators"] = Json::array({Json::array({"1", "2"})});
  const Problem x = problem_from_json(j);
  CHECK(x == scmp_hull({pt({1, 2})}));
  const Problem again = problem_from_json(problem_to_json(x));
  CHECK(again == x);

  CHECK_THROWS_AS(problem_from_json(Json{{"kind", "cmp"}}), parse_error);
  Json wrong_n;
  wrong_n["n"] = 3;
  wrong_n["kind"] = "cmp";
  wrong_n["generators"] = Json::array({Json::array({"1", "2"})});
  CHECK_THROWS_AS(problem_from_json(wrong_n), parse_error);
  Json bad_kind = wrong_n;
  bad_kind["n"] = 2;
  bad_kind["kind"] = "smp";
  CHECK_THROWS_AS(problem_from_json(bad_kind), parse_error);
  // Decimals are rejected: coordinates travel as decimal-free strings.
  Json decimal;
  decimal["kind"] = "cmp";
  decimal["generators"] = Json::array({Json::array({"1.5", "2"})});
  CHECK_THROWS_AS(problem_from_json(decimal), parse_error);
}

TEST_CASE("weight set JSON applies the symmetrize flag") {
  Json j;
  j["n"] = 2;
  j["vertices"] = Json::array({Json::array({"2/3", "1/3"})});
  j["symmetrize"] = true;
  const WeightSet w = weight_set_from_json(j);
  CHECK(w == gini_weights(pt({Rat(2, 3), Rat(1, 3)})));
  CHECK(weight_set_from_json(weight_set_to_json(w)) == w);
}

TEST_CASE("rule JSON round trips for every kind") {
  std::vector<Rule> rules = {relative_fair_rule(blend_weights(Rat(1, 4), 2)),
                             ks_rule(),
                             nash_rule(),
                             leximin_rule(),
                             relative_max_rule(Rat(0)),
                             egalitarian_rule(),
                             dictator_rule(),
                             weak_pareto_set_rule(),
                             mean_sd_rule(Rat(2)),
                             mean_norm_rule({NormKind::sup, Rat(1, 2)}),
                             minmax_blend_rule(Rat(1, 3), Rat(2, 3))};
  for (const Rule& rule : rules) {
    const Rule again = rule_from_json(rule_to_json(rule));
    CHECK(again.kind == rule.kind);
    CHECK(again.p == rule.p);
    CHECK(again.theta == rule.theta);
    CHECK(again.alpha1 == rule.alpha1);
    CHECK(again.alpha2 == rule.alpha2);
    CHECK(static_cast<int>(again.norm.kind) == static_cast<int>(rule.norm.kind));
    CHECK(again.norm.theta == rule.norm.theta);
    if (rule.weights) CHECK(*again.weights == *rule.weights);
  }
  CHECK_THROWS_AS(rule_from_json(Json{{"kind", "unknown"}}), parse_error);
  CHECK_THROWS_AS(rule_from_json(Json{{"kind", "relative_fair"}}), parse_error);
}

TEST_CASE("verdict witnesses survive a JSON round trip and re-check identically") {
  AxiomInstance inst;
  inst.x = make_problem({pt({1, 2}), pt({2, 1})});
  inst.a = pt({2, 1});
  const Verdict v = check_axiom(egalitarian_rule(), AxiomId::scale_invariance, inst);
  REQUIRE(v.status == Status::violation);
  REQUIRE(v.witness);
  const Json j = verdict_to_json(v);
  const Verdict parsed = verdict_from_json(j);
  REQUIRE(parsed.witness);
  const Verdict replay =
      check_axiom(egalitarian_rule(), AxiomId::scale_invariance, *parsed.witness);
  CHECK(replay.status == Status::violation);
  CHECK(dump_report(verdict_to_json(v)) == dump_report(j));
}

TEST_CASE("sequence instances round trip") {
  const SequenceSpec killer = continuity_fixtures(2).front();
  AxiomInstance inst;
  inst.sequence = killer;
  const AxiomInstance again = instance_from_json(instance_to_json(inst));
  REQUIRE(again.sequence);
  CHECK(again.sequence->problems.size() == killer.problems.size());
  CHECK(again.sequence->limit_point == killer.limit_point);
  const Verdict v = check_axiom(leximin_rule(), AxiomId::continuity, again);
  CHECK(v.status == Status::violation);
}

TEST_CASE("report dumps are deterministic") {
  const MatrixReport report =
      axiom_matrix({ks_rule()}, {AxiomId::intermediate_pareto}, 10, 0);
  const std::string a = dump_report(matrix_to_json(report));
  const MatrixReport report2 =
      axiom_matrix({ks_rule()}, {AxiomId::intermediate_pareto}, 10, 0);
  CHECK(a == dump_report(matrix_to_json(report2)));
}
