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

#include <cstdlib>

#include "relfair/axioms.hpp"
#include "relfair/errors.hpp"
#include "relfair/prng.hpp"
#include "test_util.hpp"

using namespace relfair;
using relfair::testutil::pt;

namespace {

AxiomInstance problem_instance(const Problem& x) {
  AxiomInstance inst;
  inst.x = x;
  return inst;
}

}  // namespace

TEST_CASE("KS violates intermediate Pareto on the wedge, with a replayable witness") {
  const Problem wedge = scmp_hull({pt({1, 2})});
  const Verdict v = check_axiom(ks_rule(), AxiomId::intermediate_pareto, problem_instance(wedge));
  CHECK(v.status == Status::violation);
  REQUIRE(v.witness);
  const Verdict replay = check_axiom(ks_rule(), AxiomId::intermediate_pareto, *v.witness);
  CHECK(replay.status == Status::violation);

  // Every other example rule passes intermediate Pareto there.
  for (const Rule& rule : independence_example_rules()) {
    if (rule.kind == RuleKind::ks) continue;
    CHECK(check_axiom(rule, AxiomId::intermediate_pareto, problem_instance(wedge)).status ==
          Status::pass);
  }
}

TEST_CASE("egalitarian violates scale invariance on the documented instance") {
  AxiomInstance inst;
  inst.x = make_problem({pt({1, 2}), pt({2, 1})});
  inst.a = pt({2, 1});
  const Verdict v = check_axiom(egalitarian_rule(), AxiomId::scale_invariance, inst);
  CHECK(v.status == Status::violation);
  REQUIRE(v.witness);
  CHECK(check_axiom(egalitarian_rule(), AxiomId::scale_invariance, *v.witness).status ==
        Status::violation);

  CHECK(check_axiom(relative_fair_rule(simplex_weights(2)), AxiomId::scale_invariance, inst)
            .status == Status::pass);
}

TEST_CASE("dictator violates anonymity on a symmetric problem") {
  const Problem wedge = scmp_hull({pt({1, 2})});
  const Verdict v = check_axiom(dictator_rule(), AxiomId::anonymity, problem_instance(wedge));
  CHECK(v.status == Status::violation);
  CHECK(check_axiom(ks_rule(), AxiomId::anonymity, problem_instance(wedge)).status ==
        Status::pass);
  CHECK_THROWS_AS(
      check_axiom(dictator_rule(), AxiomId::anonymity, problem_instance(make_problem({pt({2, 1})}))),
      bad_instance_error);
}

TEST_CASE("the weak-Pareto set violates contraction independence") {
  AxiomInstance inst;
  inst.x = scmp_hull({pt({1, 2})});
  inst.x2 = scmp_hull({pt({1, 1})});
  const Verdict v = check_axiom(weak_pareto_set_rule(), AxiomId::contraction_eai, inst);
  CHECK(v.status == Status::violation);
  REQUIRE(v.witness);
  CHECK(check_axiom(weak_pareto_set_rule(), AxiomId::contraction_eai, *v.witness).status ==
        Status::violation);

  // KS and the relative fair family satisfy it on the same instance.
  CHECK(check_axiom(ks_rule(), AxiomId::contraction_eai, inst).status == Status::pass);
  CHECK(check_axiom(relative_fair_rule(simplex_weights(2)), AxiomId::contraction_eai, inst)
            .status == Status::pass);

  AxiomInstance bad;
  bad.x = scmp_hull({pt({1, 1})});
  bad.x2 = scmp_hull({pt({1, 2})});  // not a subset
  CHECK_THROWS_AS(check_axiom(ks_rule(), AxiomId::contraction_eai, bad), bad_instance_error);
}

TEST_CASE("Nash violates equal addition independence on the kite") {
  AxiomInstance inst;
  inst.x = make_problem({pt({1, 4}), pt({2, 2}), pt({4, 1})});
  inst.pt_x = pt({2, 2});
  inst.alpha = 1;
  const Verdict v = check_axiom(nash_rule(), AxiomId::equal_addition_eai, inst);
  CHECK(v.status == Status::violation);
  CHECK(check_axiom(relative_fair_rule(simplex_weights(2)), AxiomId::equal_addition_eai, inst)
            .status == Status::pass);
  CHECK(check_axiom(ks_rule(), AxiomId::equal_addition_eai, inst).status == Status::pass);
}

TEST_CASE("relative max violates compromisability once the midpoint is feasible") {
  AxiomInstance inst;
  inst.x = scmp_hull({pt({1, 2}), pt({Rat(3, 2), Rat(3, 2)})});
  inst.pt_x = pt({1, 2});
  inst.pt_y = pt({2, 1});
  inst.alpha = Rat(1, 2);
  const Verdict v = check_axiom(relative_max_rule(), AxiomId::compromisability_eai, inst);
  CHECK(v.status == Status::violation);
  REQUIRE(v.witness);
  CHECK(check_axiom(relative_max_rule(), AxiomId::compromisability_eai, *v.witness).status ==
        Status::violation);

  // On the plain wedge the convex combination is infeasible, so the axiom's
  // hypothesis cannot be met and the instance is rejected.
  AxiomInstance infeasible;
  infeasible.x = scmp_hull({pt({1, 2})});
  infeasible.pt_x = pt({1, 2});
  infeasible.pt_y = pt({2, 1});
  infeasible.alpha = Rat(1, 2);
  CHECK_THROWS_AS(check_axiom(relative_max_rule(), AxiomId::compromisability_eai, infeasible),
                  bad_instance_error);
}

TEST_CASE("continuity fixture separates the lexicographic rule") {
  const SequenceSpec killer = continuity_fixtures(2).front();
  const Verdict lex = continuity_probe(leximin_rule(), killer);
  CHECK(lex.status == Status::violation);
  REQUIRE(lex.witness);
  CHECK(check_axiom(leximin_rule(), AxiomId::continuity, *lex.witness).status ==
        Status::violation);

  CHECK(continuity_probe(relative_fair_rule(simplex_weights(2)), killer).status == Status::pass);
  for (const Rule& rule : independence_example_rules()) {
    if (rule.kind == RuleKind::leximin) continue;
    CHECK(continuity_probe(rule, killer).status == Status::pass);
  }
}

TEST_CASE("constant sequences pass for every rule") {
  SequenceSpec constant;
  const Problem wedge = scmp_hull({pt({1, 2})});
  for (int k = 0; k < 4; ++k) {
    constant.problems.push_back(wedge);
    constant.points.push_back(pt({1, 2}));
  }
  constant.limit_problem = wedge;
  constant.limit_point = pt({1, 2});
  for (const Rule& rule : independence_example_rules())
    CHECK(continuity_probe(rule, constant).status == Status::pass);
}

TEST_CASE("hammond equity separates relative maximin from relative utilitarian") {
  const Problem x = scmp_hull({pt({1, 4}), pt({2, Rat(29, 10)})});
  const Verdict util = check_hammond_instance(relative_fair_rule(uniform_singleton(2)), x,
                                              pt({1, 4}), pt({2, Rat(29, 10)}), 0, 1);
  CHECK(util.status == Status::violation);
  const Verdict maximin = check_hammond_instance(relative_fair_rule(simplex_weights(2)), x,
                                                 pt({1, 4}), pt({2, Rat(29, 10)}), 0, 1);
  CHECK(maximin.status == Status::pass);
  CHECK_THROWS_AS(check_hammond_instance(ks_rule(), x, pt({1, 4}), pt({2, Rat(29, 10)}), 0, 0),
                  bad_instance_error);
}

TEST_CASE("separability separates relative utilitarian from relative maximin at n = 3") {
  const Problem x = scmp_hull({pt({2, 2, 3}), pt({1, 3, 3})});
  const Problem x2 = scmp_hull({pt({2, 2, 1}), pt({1, 3, 1})});
  const std::vector<int> m = {0, 1};
  const Verdict maximin = check_separability_instance(relative_fair_rule(simplex_weights(3)), m,
                                                      pt({2, 2, 3}), pt({1, 3, 1}), x, x2);
  CHECK(maximin.status == Status::violation);
  const Verdict util = check_separability_instance(relative_fair_rule(uniform_singleton(3)), m,
                                                   pt({2, 2, 3}), pt({1, 3, 1}), x, x2);
  CHECK(util.status == Status::pass);
}

TEST_CASE("the two-person min/max blend survives the separability search") {
  CheckOptions opts = search_options();
  opts.dim = 2;
  const Verdict v = search_violation(minmax_blend_rule(Rat(1, 3), Rat(2, 3)),
                                     AxiomId::separability_eai, 3000, 0, opts);
  CHECK(v.status != Status::violation);
}

TEST_CASE("strong symmetry: KS passes, relative utilitarian fails on the wedge") {
  const Problem wedge = scmp_hull({pt({1, 2})});
  CHECK(check_axiom(ks_rule(), AxiomId::strong_symmetry, problem_instance(wedge)).status ==
        Status::pass);
  const Verdict util = check_axiom(relative_fair_rule(uniform_singleton(2)),
                                   AxiomId::strong_symmetry, problem_instance(wedge));
  CHECK(util.status == Status::violation);
}

TEST_CASE("function monotonicity check flags the steep mean-SD rule") {
  const Verdict v = check_function_monotonicity(
      mean_sd_rule(2), {{pt({Rat(3, 2), Rat(3, 2)}), pt({2, 4})}});
  CHECK(v.status == Status::violation);
  const Verdict mild = check_function_monotonicity(
      mean_sd_rule(Rat(1, 2)), {{pt({Rat(3, 2), Rat(3, 2)}), pt({2, 4})}});
  CHECK(mild.status == Status::pass);
}

TEST_CASE("violation searches find the designated witnesses and are deterministic") {
  const Verdict a = search_violation(egalitarian_rule(), AxiomId::scale_invariance, 50, 0);
  CHECK(a.status == Status::violation);
  const Verdict b = search_violation(egalitarian_rule(), AxiomId::scale_invariance, 50, 0);
  CHECK(b.status == a.status);
  CHECK(b.note == a.note);

  // Thread count must not change the outcome.
  setenv("RELFAIR_THREADS", "1", 1);
  const Verdict serial = search_violation(nash_rule(), AxiomId::equal_addition_eai, 50, 0);
  setenv("RELFAIR_THREADS", "3", 1);
  const Verdict parallel = search_violation(nash_rule(), AxiomId::equal_addition_eai, 50, 0);
  unsetenv("RELFAIR_THREADS");
  CHECK(serial.status == Status::violation);
  CHECK(parallel.status == serial.status);
  CHECK(parallel.note == serial.note);
}

TEST_CASE("matrix smoke run on a small budget shows the designated diagonal") {
  const MatrixReport report = axiom_matrix(independence_example_rules(), characterizing_axioms(), 60, 0);
  const size_t n_ax = report.axiom_names.size();
  REQUIRE(report.cells.size() == 7 * n_ax);
  for (size_t r = 0; r < 7; ++r) {
    for (size_t a = 0; a < n_ax; ++a) {
      const Verdict& v = report.cells[r * n_ax + a].verdict;
      if (r == a) {
        CHECK(v.status == Status::violation);
      } else {
        CHECK(v.status != Status::violation);
      }
    }
  }
}

TEST_CASE("choice-set queries agree with literal per-piece LP feasibility") {
  // The production path answers domination and intersection queries from
  // witness corners (valid because argmax pieces are boxes cut by monotone
  // objectives); this cross-checks it against the direct LP route.
  Prng rng(99);
  const Rule rules[] = {relative_fair_rule(simplex_weights(2)),
                        relative_fair_rule(blend_weights(Rat(1, 3), 2)), egalitarian_rule(),
                        dictator_rule(), relative_max_rule()};
  for (int trial = 0; trial < 40; ++trial) {
    const Problem x = random_equal_able(2, 3, 4, rng.next());
    for (const Rule& rule : rules) {
      const ChoiceSet cs = solve(rule, x);
      REQUIRE(cs.mode == ChoiceMode::exact);

      // exists z in F(X) with z >= floor?
      Point floor_pt = x.generators()[rng.below(x.generators().size())];
      floor_pt[rng.below(floor_pt.size())] *= Rat(static_cast<int>(rng.below(9)), 8);
      bool lp_above = false;
      for (const HPolyhedron& piece : cs.pieces) {
        HPolyhedron above = piece;
        for (size_t i = 0; i < floor_pt.size(); ++i) {
          LinConstraint c;
          c.coeffs.assign(floor_pt.size(), Rat(0));
          c.coeffs[i] = 1;
          c.sense = Sense::ge;
          c.rhs = floor_pt[i];
          above.constraints.push_back(std::move(c));
        }
        if (feasible_point(above)) {
          lp_above = true;
          break;
        }
      }
      const auto fast_above = exists_choice_above(rule, x, cs, floor_pt);
      REQUIRE(fast_above.has_value());
      CHECK(*fast_above == lp_above);

      // does F(X) meet a subproblem?
      const Problem sub = random_subproblem(scmp_hull(x.generators()), rng.next());
      const Problem host = scmp_hull(x.generators());
      const ChoiceSet host_cs = solve(rule, host);
      bool lp_meets = false;
      for (const HPolyhedron& piece : host_cs.pieces) {
        for (const Point& g : sub.generators()) {
          if (feasible_point(intersect(piece, box_polyhedron(g)))) {
            lp_meets = true;
            break;
          }
        }
        if (lp_meets) break;
      }
      const auto fast_meets = choice_set_intersects(rule, host, host_cs, sub);
      REQUIRE(fast_meets.has_value());
      CHECK(*fast_meets == lp_meets);
    }
  }
}

TEST_CASE("every axiom search runs for every rule without surprises") {
  std::vector<Rule> rules = independence_example_rules();
  rules.push_back(relative_fair_rule(blend_weights(Rat(1, 2), 2)));
  rules.push_back(mean_sd_rule(Rat(1, 2)));
  rules.push_back(mean_norm_rule({NormKind::one, Rat(1, 4)}));
  rules.push_back(minmax_blend_rule(Rat(1, 4), Rat(3, 4)));
  const AxiomId axioms[] = {AxiomId::strong_pareto,       AxiomId::weak_pareto,
                            AxiomId::intermediate_pareto, AxiomId::scale_invariance,
                            AxiomId::anonymity,           AxiomId::contraction_eai,
                            AxiomId::continuity,          AxiomId::equal_addition_eai,
                            AxiomId::compromisability_eai, AxiomId::hammond_eai,
                            AxiomId::separability_eai,    AxiomId::strong_symmetry};
  for (const Rule& rule : rules) {
    for (AxiomId axiom : axioms) {
      const Verdict v = search_violation(rule, axiom, 8, 5);
      if (v.status == Status::violation) CHECK(v.witness.has_value());
      const Verdict again = search_violation(rule, axiom, 8, 5);
      CHECK(again.status == v.status);
      CHECK(again.note == v.note);
    }
  }
}

TEST_CASE("instance generators meet their contracts") {
  for (uint64_t seed = 0; seed < 20; ++seed) {
    CHECK(is_equal_able(random_equal_able(2, 3, 4, seed)));
    CHECK(is_symmetric(random_symmetric(3, 2, 4, seed)));
    const Problem x = random_symmetric(2, 3, 4, seed);
    const Problem sub = random_subproblem(x, seed + 1);
    CHECK(is_equal_able(sub));
    for (const Point& g : sub.generators()) CHECK(contains(x, g));
  }
}
