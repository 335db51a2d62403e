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

#include "relfair/axioms.hpp"
#include "relfair/errors.hpp"
#include "relfair/prng.hpp"
#include "test_util.hpp"

using namespace relfair;
using relfair::testutil::closed_form_relative_maximin;
using relfair::testutil::piece_signature;
using relfair::testutil::pt;

TEST_CASE("relative fair evaluation on the wedge") {
  const Problem wedge = scmp_hull({pt({1, 2})});
  const Rule maximin = relative_fair_rule(simplex_weights(2));
  CHECK(evaluate(maximin, wedge, pt({1, 2})).rat() == Rat(1, 2));
  CHECK_THROWS_AS(evaluate(maximin, wedge, pt({5, 5})), point_not_in_problem_error);

  // At the ideal point every relative fair rule evaluates to one.
  const Problem kite = make_problem({pt({1, 4}), pt({2, 2}), pt({4, 1})});
  for (const WeightSet& w :
       {simplex_weights(2), uniform_singleton(2), blend_weights(Rat(1, 3), 2)}) {
    const Rule rule = relative_fair_rule(w);
    const Problem box = make_problem({ideal_point(kite)});
    CHECK(evaluate(rule, box, ideal_point(kite)).rat() == 1);
  }
}

TEST_CASE("mean-minus-SD reproduces the non-monotonicity witness pair") {
  const Rule rule = mean_sd_rule(2);
  const RuleValue lo = welfare_value(rule, pt({2, 4}));
  const RuleValue hi = welfare_value(rule, pt({Rat(3, 2), Rat(3, 2)}));
  REQUIRE(lo.is_exact());
  REQUIRE(hi.is_exact());
  CHECK(lo.rat() == 1);
  CHECK(hi.rat() == Rat(3, 2));
  CHECK(hi.compare(lo) > 0);
}

TEST_CASE("solve on the wedge: relative maximin") {
  const Problem wedge = scmp_hull({pt({1, 2})});
  const ChoiceSet cs = solve(relative_fair_rule(simplex_weights(2)), wedge);
  CHECK(cs.value.rat() == Rat(1, 2));
  CHECK(cs.witnesses == std::vector<Point>{pt({1, 2}), pt({2, 1})});
  CHECK(cs.mode == ChoiceMode::exact);
  REQUIRE(cs.pieces.size() == 2);
  // Pieces are {x <= (1,2), x1 >= 1, x2 >= 1} and its mirror image.
  const Problem mirror = scmp_hull({pt({1, 2})});
  for (const Point& probe : {pt({1, 1}), pt({1, 2}), pt({1, Rat(3, 2)})}) {
    bool in_union = false;
    for (const HPolyhedron& piece : cs.pieces) in_union |= contains_point(piece, probe);
    CHECK(in_union);
  }
  for (const Point& probe : {pt({Rat(1, 2), 2}), pt({0, 0}), pt({2, 2})}) {
    bool in_union = false;
    for (const HPolyhedron& piece : cs.pieces) in_union |= contains_point(piece, probe);
    CHECK_FALSE(in_union);
  }
  CHECK(mirror == wedge);
}

TEST_CASE("solve: KS, Nash and the weak-Pareto set") {
  const Problem wedge = scmp_hull({pt({1, 2})});
  const ChoiceSet ks = solve(ks_rule(), wedge);
  CHECK(ks.value.rat() == Rat(1, 2));
  CHECK(ks.witnesses == std::vector<Point>{pt({1, 1})});
  CHECK(ks.mode == ChoiceMode::exact);

  const Problem kite = make_problem({pt({1, 4}), pt({2, 2}), pt({4, 1})});
  const ChoiceSet nash = solve(nash_rule(), kite);
  CHECK(nash.value.rat() == 4);
  CHECK(nash.witnesses.size() == 3);
  CHECK(nash.mode == ChoiceMode::corner_witness);

  const ChoiceSet wp = solve(weak_pareto_set_rule(), wedge);
  CHECK(wp.witnesses == wedge.generators());
}

TEST_CASE("membership in choice sets") {
  const Problem wedge = scmp_hull({pt({1, 2})});
  CHECK(in_choice_set(relative_fair_rule(simplex_weights(2)), wedge, pt({1, 1})));
  CHECK_FALSE(in_choice_set(ks_rule(), wedge, pt({1, 2})));
  CHECK(in_choice_set(ks_rule(), wedge, pt({1, 1})));
  CHECK_FALSE(in_choice_set(nash_rule(), wedge, pt({5, 5})));  // outside X
  CHECK(in_choice_set(weak_pareto_set_rule(), wedge, pt({1, Rat(3, 2)})));
}

TEST_CASE("leximin values are sorted normalized vectors") {
  const Problem wedge = scmp_hull({pt({1, 2})});
  const Rule lex = leximin_rule();
  const RuleValue v = evaluate(lex, wedge, pt({1, 2}));
  REQUIRE(v.is_lex());
  CHECK(v.vec() == std::vector<Rat>{Rat(1, 2), 1});
  const ChoiceSet cs = solve(lex, wedge);
  CHECK(cs.witnesses == std::vector<Point>{pt({1, 2}), pt({2, 1})});
  CHECK_FALSE(in_choice_set_with(lex, wedge, cs, pt({1, 1})));
}

TEST_CASE("minmax blend and rule validation") {
  CHECK_THROWS_AS(minmax_blend_rule(Rat(1, 2), Rat(1, 2)), bad_parameter_error);
  CHECK_THROWS_AS(minmax_blend_rule(0, 1), bad_parameter_error);
  CHECK_THROWS_AS(relative_fair_rule(make_weight_set({pt({Rat(2, 3), Rat(1, 3)})})),
                  bad_parameter_error);
  CHECK_THROWS_AS(ks_rule(Rat(3, 2)), bad_parameter_error);

  const Problem wedge = scmp_hull({pt({1, 2})});
  const Rule blend = minmax_blend_rule(Rat(1, 3), Rat(2, 3));
  // alpha1 * min + alpha2 * max of (1/2, 1).
  CHECK(evaluate(blend, wedge, pt({1, 2})).rat() == Rat(1, 3) * Rat(1, 2) + Rat(2, 3));
}

TEST_CASE("equal-equivalent levels by bisection") {
  const Rat tol(1, Int(1) << 30);
  CHECK(equal_equivalent(relative_fair_rule(uniform_singleton(2)), pt({2, 4}), tol) -
            Rat(3) <= tol);
  CHECK(Rat(3) - equal_equivalent(relative_fair_rule(uniform_singleton(2)), pt({2, 4}), tol) <=
        tol);
  CHECK(equal_equivalent(relative_fair_rule(simplex_weights(2)), pt({1, 5}), tol) == 1);
  // Constant vectors are their own equal-equivalent for any relative fair rule.
  CHECK(equal_equivalent(relative_fair_rule(blend_weights(Rat(1, 2), 2)), pt({3, 3}), tol) == 3);
  CHECK_THROWS_AS(equal_equivalent(nash_rule(), pt({0, 0}), tol), bad_parameter_error);
}

TEST_CASE("revealed relation basics") {
  const Rule maximin = relative_fair_rule(simplex_weights(2));
  const auto rel = revealed_relation(maximin, {{pt({2, 2}), pt({1, 1})}});
  CHECK(rel[0].x_r_y);
  CHECK_FALSE(rel[0].y_r_x);

  const auto sym = revealed_relation(maximin, {{pt({1, 3}), pt({3, 1})}});
  CHECK(sym[0].x_r_y);
  CHECK(sym[0].y_r_x);

  const Rule util = relative_fair_rule(uniform_singleton(2));
  const auto tie = revealed_relation(util, {{pt({1, 5}), pt({3, 3})}});
  CHECK(tie[0].x_r_y);
  CHECK(tie[0].y_r_x);
}

TEST_CASE("ordering properties hold for relative fair rules and fail for the weak-Pareto set") {
  const OrderingReport clean =
      check_ordering_properties(relative_fair_rule(simplex_weights(2)), 2, 60, 42);
  CHECK(clean.total_violations() == 0);

  // Known intransitivity of the weak-Pareto revealed relation.
  const Rule wp = weak_pareto_set_rule();
  const auto ab = revealed_relation(wp, {{pt({1, 1}), pt({0, 3})}})[0];
  const auto bc = revealed_relation(wp, {{pt({0, 3}), pt({2, 2})}})[0];
  const auto ac = revealed_relation(wp, {{pt({1, 1}), pt({2, 2})}})[0];
  CHECK(ab.x_r_y);
  CHECK(bc.x_r_y);
  CHECK_FALSE(ac.x_r_y);
}

TEST_CASE("generalized Gini evaluation equals the rank-weighted formula") {
  Prng rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(2));
    // Random rank weights in the simplex.
    Point w(static_cast<size_t>(n));
    Rat total = 0;
    for (auto& c : w) {
      c = 1 + rng.rat(3);
      total += c;
    }
    for (auto& c : w) c /= total;
    const Rule rule = relative_fair_rule(gini_weights(w));

    const Problem x = random_problem(n, 3, 4, rng.next());
    Point p = x.generators()[rng.below(x.generators().size())];
    if (rng.below(2) == 0) p[rng.below(p.size())] /= 2;

    const Point b = ideal_point(x);
    Point profile(p.size());
    for (size_t i = 0; i < p.size(); ++i) profile[i] = p[i] / b[i];

    Point sorted_profile = profile;
    std::sort(sorted_profile.begin(), sorted_profile.end());
    Point sorted_weights = w;
    std::sort(sorted_weights.begin(), sorted_weights.end(), std::greater<Rat>());
    Rat expected = 0;
    for (size_t i = 0; i < p.size(); ++i) expected += sorted_weights[i] * sorted_profile[i];

    CHECK(evaluate(rule, x, p).rat() == expected);
  }
}

TEST_CASE("blend evaluation equals alpha*mean + (1-alpha)*min") {
  Prng rng(22);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(2));
    const Rat alpha(static_cast<int>(rng.below(9)), 8);
    const Rule rule = relative_fair_rule(blend_weights(alpha, n));
    const Problem x = random_problem(n, 3, 4, rng.next());
    Point p = x.generators()[rng.below(x.generators().size())];
    if (rng.below(2) == 0) p[rng.below(p.size())] /= 2;
    const Point b = ideal_point(x);
    Rat mean = 0, lowest;
    bool first = true;
    for (size_t i = 0; i < p.size(); ++i) {
      const Rat c = p[i] / b[i];
      mean += c;
      if (first || c < lowest) {
        lowest = c;
        first = false;
      }
    }
    mean /= n;
    CHECK(evaluate(rule, x, p).rat() == alpha * mean + (1 - alpha) * lowest);
  }
}

TEST_CASE("relative fair with the full simplex equals closed-form relative maximin") {
  Prng rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(2));
    const Problem x = random_problem(n, 3, 4, rng.next());
    const ChoiceSet cs = solve(relative_fair_rule(simplex_weights(n)), x);
    const auto closed = closed_form_relative_maximin(x);
    CHECK(cs.value.rat() == closed.value);
    CHECK(cs.witnesses == closed.witnesses);
    CHECK(piece_signature(cs.pieces) == piece_signature(closed.pieces));
  }
}

TEST_CASE("argmax-level scale invariance of normalized rules") {
  Prng rng(24);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2;
    const Problem x = random_problem(n, 3, 4, rng.next());
    Point a(static_cast<size_t>(n));
    for (auto& c : a) c = rng.positive_rat(3);
    for (const Rule& rule :
         {relative_fair_rule(simplex_weights(2)), relative_fair_rule(uniform_singleton(2)),
          ks_rule(), relative_max_rule()}) {
      const ChoiceSet cs1 = solve(rule, x);
      const Problem x2 = scale(x, a);
      const ChoiceSet cs2 = solve(rule, x2);
      std::vector<Point> mapped;
      for (const Point& w : cs1.witnesses) mapped.push_back(mul(a, w));
      std::sort(mapped.begin(), mapped.end(), lex_less);
      CHECK(mapped == cs2.witnesses);
      // Membership agreement on sampled boundary points.
      for (int s = 0; s < 6; ++s) {
        Point probe = x.generators()[rng.below(x.generators().size())];
        probe[rng.below(probe.size())] *= Rat(static_cast<int>(rng.below(9)), 8);
        CHECK(in_choice_set_with(rule, x, cs1, probe) ==
              in_choice_set_with(rule, x2, cs2, mul(a, probe)));
      }
    }
  }
}

TEST_CASE("every witness is weakly Pareto; interior weight sets give strong Pareto") {
  Prng rng(25);
  const WeightSet interior = uniform_singleton(2);
  const WeightSet boundary = simplex_weights(2);
  for (int trial = 0; trial < 80; ++trial) {
    const Problem x = random_problem(2, 3, 4, rng.next());
    for (const WeightSet& w : {interior, boundary}) {
      const ChoiceSet cs = solve(relative_fair_rule(w), x);
      bool some_strong = false;
      for (const Point& witness : cs.witnesses) {
        CHECK(is_weak_pareto(x, witness));
        some_strong |= is_strong_pareto(x, witness);
        if (w.strictly_positive()) CHECK(is_strong_pareto(x, witness));
      }
      CHECK(some_strong);  // intermediate Pareto at witness level
    }
  }
}

TEST_CASE("mean-norm objectives are quasiconcave on sampled profile triples") {
  Prng rng(26);
  const Rule rules[] = {mean_norm_rule({NormKind::sup, Rat(1, 2)}),
                        mean_norm_rule({NormKind::one, Rat(1, 4)}),
                        mean_norm_rule({NormKind::euclidean, Rat(1, 2)})};
  for (const Rule& rule : rules) {
    for (int trial = 0; trial < 150; ++trial) {
      Point u(2), v(2);
      for (auto& c : u) c = rng.rat(4);
      for (auto& c : v) c = rng.rat(4);
      Point mid(2);
      for (size_t i = 0; i < 2; ++i) mid[i] = (u[i] + v[i]) / 2;
      const RuleValue wu = welfare_value(rule, u);
      const RuleValue wv = welfare_value(rule, v);
      const RuleValue wm = welfare_value(rule, mid);
      const RuleValue& floor = wu.compare(wv) <= 0 ? wu : wv;
      CHECK(wm.compare(floor) >= 0);
    }
  }
}

TEST_CASE("responsibility exponent endpoints") {
  const Problem skew = make_problem({pt({2, 1}), pt({1, 2})});
  // p = 0 disables normalization entirely.
  const Rule raw_maximin = relative_fair_rule(simplex_weights(2), 0);
  CHECK(evaluate(raw_maximin, skew, pt({1, 2})).rat() == 1);
  // p strictly inside (0,1) produces high-precision reals.
  const Rule half = relative_fair_rule(simplex_weights(2), Rat(1, 2));
  CHECK(evaluate(half, skew, pt({1, 2})).is_approx());
  CHECK_THROWS_AS(solve(ks_rule(Rat(1, 2)), skew), precision_unavailable_error);
  CHECK_THROWS_AS(evaluate(leximin_rule(Rat(1, 2)), skew, pt({1, 2})),
                  precision_unavailable_error);
}

TEST_CASE("exact-mode membership coincides with the piece union") {
  Prng rng(27);
  const Rule rules[] = {relative_fair_rule(simplex_weights(2)),
                        relative_fair_rule(uniform_singleton(2)),
                        relative_fair_rule(gini_weights(pt({Rat(3, 4), Rat(1, 4)}))),
                        egalitarian_rule(), dictator_rule(), relative_max_rule(), ks_rule()};
  for (int trial = 0; trial < 50; ++trial) {
    const Problem x = random_problem(2, 3, 4, rng.next());
    for (const Rule& rule : rules) {
      const ChoiceSet cs = solve(rule, x);
      REQUIRE(cs.mode == ChoiceMode::exact);
      for (const Point& w : cs.witnesses) {
        CHECK(contains(x, w));
        CHECK(in_choice_set_with(rule, x, cs, w));
      }
      for (int s = 0; s < 12; ++s) {
        Point probe = x.generators()[rng.below(x.generators().size())];
        probe[rng.below(probe.size())] *= Rat(static_cast<int>(rng.below(17)), 16);
        if (!contains(x, probe)) continue;
        bool in_union = false;
        for (const HPolyhedron& piece : cs.pieces) in_union |= contains_point(piece, probe);
        CHECK(in_union == in_choice_set_with(rule, x, cs, probe));
      }
    }
  }
}

TEST_CASE("steep mean-SD rules carry the non-monotone flag") {
  CHECK(mean_sd_rule(2).flagged_non_monotone());
  CHECK(mean_sd_rule(2).name().find("non-monotone") != std::string::npos);
  CHECK_FALSE(mean_sd_rule(1).flagged_non_monotone());
  CHECK_FALSE(mean_sd_rule(Rat(1, 2)).flagged_non_monotone());
}

TEST_CASE("mean-norm rules with polyhedral norms stay exact") {
  const Problem wedge = scmp_hull({pt({1, 2})});
  const Rule rule = mean_norm_rule({NormKind::sup, Rat(1, 2)});
  const ChoiceSet cs = solve(rule, wedge);
  REQUIRE(cs.value.is_exact());
  CHECK(cs.value.rat() == Rat(5, 8));  // mean 3/4 minus half the sup deviation 1/4
  CHECK(cs.witnesses == std::vector<Point>{pt({1, 2}), pt({2, 1})});

  const Rule euclid = mean_norm_rule({NormKind::euclidean, Rat(1, 2)});
  CHECK(solve(euclid, wedge).value.is_approx());
}

TEST_CASE("KS with p = 0 picks the egalitarian-style proportional point") {
  const Problem skew = make_problem({pt({3, 1}), pt({1, 2})});
  const ChoiceSet cs = solve(ks_rule(0), skew);
  // Normalization disabled: lambda = max over corners of the min coordinate.
  CHECK(cs.value.rat() == 1);
  CHECK(cs.witnesses == std::vector<Point>{pt({1, 1})});
}

TEST_CASE("bisection reports non-convergence when the budget is too small") {
  const Rule rule = relative_fair_rule(uniform_singleton(2));
  CHECK_THROWS_AS(equal_equivalent(rule, pt({2, 4}), Rat(1, Int(1) << 40), 3),
                  nonconvergence_error);
}

TEST_CASE("four-person problems work end to end") {
  const Problem x = scmp_hull({pt({1, 2, 3, 4})});
  CHECK(x.generators().size() == 24);
  CHECK(is_symmetric(x));
  CHECK(ideal_point(x) == pt({4, 4, 4, 4}));

  const Rule maximin = relative_fair_rule(simplex_weights(4));
  const ChoiceSet cs = solve(maximin, x);
  CHECK(cs.value.rat() == Rat(1, 4));
  CHECK(cs.witnesses.size() == 24);
  CHECK(in_choice_set_with(maximin, x, cs, pt({1, 1, 1, 1})));

  const ChoiceSet ks = solve(ks_rule(), x);
  CHECK(ks.witnesses == std::vector<Point>{pt({1, 1, 1, 1})});

  const Rule gini = relative_fair_rule(gini_weights(pt({Rat(1, 2), Rat(1, 4), Rat(1, 8), Rat(1, 8)})));
  CHECK(evaluate(gini, x, pt({1, 2, 3, 4})).rat() ==
        Rat(1, 2) * Rat(1, 4) + Rat(1, 4) * Rat(2, 4) + Rat(1, 8) * Rat(3, 4) + Rat(1, 8) * 1);

  AxiomInstance inst;
  inst.x = x;
  CHECK(check_axiom(maximin, AxiomId::intermediate_pareto, inst).status == Status::pass);
  CHECK(check_axiom(dictator_rule(), AxiomId::anonymity, inst).status == Status::violation);
}

TEST_CASE("choice-set helpers certify intersections and dominating points") {
  const Problem wedge_mid = scmp_hull({pt({1, 2}), pt({Rat(3, 2), Rat(3, 2)})});
  const Rule relmax = relative_max_rule();
  const ChoiceSet cs = solve(relmax, wedge_mid);
  CHECK(cs.mode == ChoiceMode::exact);
  const auto above = exists_choice_above(relmax, wedge_mid, cs, pt({Rat(3, 2), Rat(3, 2)}));
  REQUIRE(above.has_value());
  CHECK_FALSE(*above);

  const Problem small = scmp_hull({pt({1, 1})});
  const auto meets = choice_set_intersects(relmax, wedge_mid, cs, small);
  REQUIRE(meets.has_value());
  CHECK_FALSE(*meets);

  const Rule maximin = relative_fair_rule(simplex_weights(2));
  const ChoiceSet mm = solve(maximin, wedge_mid);
  const auto mm_above = exists_choice_above(maximin, wedge_mid, mm, pt({1, 1}));
  REQUIRE(mm_above.has_value());
  CHECK(*mm_above);
}
