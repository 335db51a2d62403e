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

#ifndef RELFAIR_RULES_HPP
#define RELFAIR_RULES_HPP

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "relfair/geometry.hpp"
#include "relfair/lp.hpp"
#include "relfair/weights.hpp"

namespace relfair {

enum class RuleKind {
  relative_fair,
  ks,
  nash,
  leximin,
  relative_max,
  egalitarian,
  dictator,
  weak_pareto_set,
  mean_sd,
  mean_norm,
  minmax_blend,
};

std::string rule_kind_name(RuleKind kind);
RuleKind rule_kind_from_name(const std::string& name);

/// Ordered welfare level of a point under a rule: an exact rational, a
/// high-precision real (square-root objectives), or the ascending sorted
/// normalized vector for the lexicographic rule. Comparing reals treats
/// |a - b| <= 2^-64 as a tie.
class RuleValue {
 public:
  static RuleValue exact(Rat v) { return RuleValue(std::move(v)); }
  static RuleValue approx(Real v) { return RuleValue(std::move(v)); }
  static RuleValue lex(std::vector<Rat> v) { return RuleValue(std::move(v)); }

  bool is_exact() const { return std::holds_alternative<Rat>(v_); }
  bool is_approx() const { return std::holds_alternative<Real>(v_); }
  bool is_lex() const { return std::holds_alternative<std::vector<Rat>>(v_); }

  const Rat& rat() const { return std::get<Rat>(v_); }
  const Real& real() const { return std::get<Real>(v_); }
  const std::vector<Rat>& vec() const { return std::get<std::vector<Rat>>(v_); }

  /// Three-way comparison; throws on mixed kinds.
  int compare(const RuleValue& other) const;

  /// True when the two values are real-valued and decided only by tolerance.
  bool tolerance_tie(const RuleValue& other) const;

  std::string str() const;

 private:
  explicit RuleValue(Rat v) : v_(std::move(v)) {}
  explicit RuleValue(Real v) : v_(std::move(v)) {}
  explicit RuleValue(std::vector<Rat> v) : v_(std::move(v)) {}
  std::variant<Rat, Real, std::vector<Rat>> v_;
};

/// A choice rule plus the responsibility exponent p applied to abilities.
/// Build through the factory functions below; they enforce the invariants
/// (symmetric weight set, positive distinct blend coefficients, p in [0,1]).
struct Rule {
  RuleKind kind = RuleKind::relative_fair;
  std::optional<WeightSet> weights;  // relative_fair
  Rat theta = 0;                     // mean_sd
  Norm norm;                         // mean_norm
  Rat alpha1 = 0, alpha2 = 0;        // minmax_blend
  Rat p = 1;                         // responsibility exponent

  std::string name() const;

  /// Rational-valued evaluation (requires p in {0,1} and no square roots).
  bool exact_valued() const;

  /// Objective strictly increases along >>; certifies weak Pareto of the
  /// whole choice set without sampling.
  bool strictly_monotone() const;

  /// Argmax is representable exactly as a union of polyhedral pieces.
  bool piecewise_linear() const;

  /// Mean-minus-SD with scale above one is permitted but known to break weak
  /// monotonicity; surfaced here and in name().
  bool flagged_non_monotone() const;
};

Rule relative_fair_rule(WeightSet w, Rat p = 1);
Rule ks_rule(Rat p = 1);
Rule nash_rule();
Rule leximin_rule(Rat p = 1);
Rule relative_max_rule(Rat p = 1);
Rule egalitarian_rule();
Rule dictator_rule();
Rule weak_pareto_set_rule();
Rule mean_sd_rule(Rat theta, Rat p = 1);
Rule mean_norm_rule(Norm norm, Rat p = 1);
Rule minmax_blend_rule(Rat alpha1, Rat alpha2, Rat p = 1);

enum class ChoiceMode { exact, corner_witness };

/// Full description of F(X): the optimal value, every optimal generator
/// corner (for KS, the proportional point), and in exact mode a list of
/// polyhedra whose union is exactly the argmax set.
struct ChoiceSet {
  RuleValue value = RuleValue::exact(Rat(0));
  std::vector<Point> witnesses;
  std::vector<HPolyhedron> pieces;
  ChoiceMode mode = ChoiceMode::corner_witness;
};

/// The rule's welfare function applied directly to a profile (already
/// normalized / context-free). Rejected for the weak-Pareto-set rule, which
/// is not welfare-based.
RuleValue welfare_value(const Rule& rule, const Point& profile);

/// Welfare of a feasible point in the context of X, normalizing by
/// b_i(X)^p where the rule calls for it.
RuleValue evaluate(const Rule& rule, const Problem& x, const Point& pt);

ChoiceSet solve(const Rule& rule, const Problem& x);

bool in_choice_set(const Rule& rule, const Problem& x, const Point& pt);

/// Same, reusing a ChoiceSet already computed for (rule, x).
bool in_choice_set_with(const Rule& rule, const Problem& x, const ChoiceSet& cs, const Point& pt);

/// Membership that refuses to decide across a real-valued tolerance tie;
/// nullopt flags "too close to call" so checks can grade Inconclusive.
std::optional<bool> membership_certain(const Rule& rule, const Problem& x, const ChoiceSet& cs,
                                       const Point& pt);

/// Does F(X) meet the subproblem `sub`? Definite for exact-mode rules
/// (the argmax pieces are boxes cut by monotone objectives, so the meet of
/// corner pairs decides), nullopt when only corner witnesses are available
/// and none lands inside.
std::optional<bool> choice_set_intersects(const Rule& rule, const Problem& x, const ChoiceSet& cs,
                                          const Problem& sub);

/// Is there z in F(X) with z >= floor_pt? Same certification split.
std::optional<bool> exists_choice_above(const Rule& rule, const Problem& x, const ChoiceSet& cs,
                                        const Point& floor_pt);

/// Equal-equivalent level: bisection on alpha over [min x, max x] against
/// membership of alpha*1 in F(scmp{x, alpha*1}); within tol of the infimum.
Rat equal_equivalent(const Rule& rule, const Point& x, const Rat& tol, int max_iter = 10000);

struct PairRelation {
  bool x_r_y = false;
  bool y_r_x = false;
};

/// Revealed relation x R y  <=>  x in F(scmp{x, y}), per queried pair.
std::vector<PairRelation> revealed_relation(const Rule& rule,
                                            const std::vector<std::pair<Point, Point>>& pairs);

struct OrderingReport {
  long completeness_checked = 0, completeness_violations = 0;
  long transitivity_checked = 0, transitivity_violations = 0;
  long monotonicity_checked = 0, monotonicity_violations = 0;
  long symmetry_checked = 0, symmetry_violations = 0;
  long homogeneity_checked = 0, homogeneity_violations = 0;
  std::string first_counterexample;
  long total_violations() const {
    return completeness_violations + transitivity_violations + monotonicity_violations +
           symmetry_violations + homogeneity_violations;
  }
};

/// Empirically tests the revealed relation for weak order properties on
/// seeded samples: completeness, transitivity, weak monotonicity, symmetry
/// and homogeneity.
OrderingReport check_ordering_properties(const Rule& rule, int n, int samples, uint64_t seed);

}  // namespace relfair

#endif  // RELFAIR_RULES_HPP
