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

#ifndef RELFAIR_ORACLE_HPP
#define RELFAIR_ORACLE_HPP

#include <string>

#include "relfair/rules.hpp"

namespace relfair {

/// Grid used by the brute-force reference solver: per generator box, every
/// coordinate runs over multiples of `spacing` plus the box corner itself,
/// so generator corners are always grid members.
struct GridSpec {
  Rat spacing = Rat(1, 16);
  long budget = 10'000'000;  // total grid-point evaluations allowed
};

struct OracleResult {
  RuleValue value = RuleValue::exact(Rat(0));
  std::vector<Point> argmax;  // all grid points attaining the best value
  long points_evaluated = 0;
};

/// Enumerates the grid of every generator box, evaluates the rule, and
/// returns the best value with all grid maximizers (merged by value then
/// lexicographic order, deduplicated). Throws budget_exceeded_error when the
/// grid would be larger than the budget.
OracleResult oracle_solve(const Rule& rule, const Problem& x, const GridSpec& grid);

struct OracleComparison {
  RuleValue exact_value = RuleValue::exact(Rat(0));
  RuleValue oracle_value = RuleValue::exact(Rat(0));
  bool values_equal = false;
  Rat gap = 0;                    // |exact - oracle| for scalar exact values
  bool all_argmax_chosen = false; // every oracle maximizer passes in_choice_set
  Rat lipschitz_bound = 0;        // L*h for the rule's sup-norm Lipschitz constant
  bool gap_within_bound = false;
  long points_evaluated = 0;
  std::string summary() const;
};

/// Cross-checks solve() against the grid oracle. For the corner-attained
/// objectives implemented here the gap is exactly zero because corners are
/// grid members.
OracleComparison compare_oracle(const Rule& rule, const Problem& x, const GridSpec& grid);

/// Sup-norm Lipschitz constant of the rule's objective over X (scalar exact
/// rules); used only to report the L*h tolerance.
Rat rule_lipschitz(const Rule& rule, const Problem& x);

}  // namespace relfair

#endif  // RELFAIR_ORACLE_HPP
