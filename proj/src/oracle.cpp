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

#include "relfair/oracle.hpp"

#include <algorithm>

#include "relfair/errors.hpp"
#include "relfair/parallel.hpp"

namespace relfair {

namespace {

std::vector<Rat> axis_levels(const Rat& top, const Rat& spacing) {
  std::vector<Rat> levels;
  for (Rat v = 0; v < top; v += spacing) levels.push_back(v);
  levels.push_back(top);
  return levels;
}

struct BoxResult {
  std::optional<RuleValue> value;
  std::vector<Point> argmax;
  long evaluated = 0;
};

}  // namespace

OracleResult oracle_solve(const Rule& rule, const Problem& x, const GridSpec& grid) {
  if (grid.spacing <= 0) throw bad_parameter_error("grid spacing must be positive");
  const auto& gens = x.generators();

  // Pre-count so the budget check happens before any work.
  long total = 0;
  std::vector<std::vector<std::vector<Rat>>> axes(gens.size());
  for (size_t g = 0; g < gens.size(); ++g) {
    long box = 1;
    for (const Rat& top : gens[g]) {
      axes[g].push_back(axis_levels(top, grid.spacing));
      box *= static_cast<long>(axes[g].back().size());
      if (box > grid.budget) throw budget_exceeded_error("grid too large for the oracle budget");
    }
    total += box;
    if (total > grid.budget) throw budget_exceeded_error("grid too large for the oracle budget");
  }

  const std::vector<BoxResult> per_box = parallel_map<BoxResult>(
      gens.size(), [&](size_t g) {
        BoxResult res;
        const auto& axis = axes[g];
        const int n = static_cast<int>(axis.size());
        std::vector<size_t> idx(static_cast<size_t>(n), 0);
        Point p(static_cast<size_t>(n));
        for (;;) {
          for (int i = 0; i < n; ++i) p[static_cast<size_t>(i)] = axis[static_cast<size_t>(i)][idx[static_cast<size_t>(i)]];
          const RuleValue v = evaluate(rule, x, p);
          ++res.evaluated;
          if (!res.value || v.compare(*res.value) > 0) {
            res.value = v;
            res.argmax.clear();
            res.argmax.push_back(p);
          } else if (v.compare(*res.value) == 0) {
            res.argmax.push_back(p);
          }
          int i = n - 1;
          while (i >= 0 && ++idx[static_cast<size_t>(i)] == axis[static_cast<size_t>(i)].size()) {
            idx[static_cast<size_t>(i)] = 0;
            --i;
          }
          if (i < 0) break;
        }
        return res;
      });

  OracleResult out;
  bool first = true;
  for (const BoxResult& res : per_box) {
    out.points_evaluated += res.evaluated;
    if (!res.value) continue;
    if (first || res.value->compare(out.value) > 0) {
      out.value = *res.value;
      out.argmax = res.argmax;
      first = false;
    } else if (res.value->compare(out.value) == 0) {
      out.argmax.insert(out.argmax.end(), res.argmax.begin(), res.argmax.end());
    }
  }
  std::sort(out.argmax.begin(), out.argmax.end(), lex_less);
  out.argmax.erase(std::unique(out.argmax.begin(), out.argmax.end()), out.argmax.end());
  return out;
}

Rat rule_lipschitz(const Rule& rule, const Problem& x) {
  const Point b = ideal_point(x);
  Point divisor = b;
  if (rule.p == 0) divisor = constant_point(x.dim(), Rat(1));
  Rat inv_min = 0;
  for (const Rat& d : divisor) inv_min = std::max(inv_min, Rat(1) / d);
  switch (rule.kind) {
    case RuleKind::relative_fair: {
      Rat best = 0;
      for (const Point& w : rule.weights->vertices()) {
        Rat sum = 0;
        for (size_t i = 0; i < w.size(); ++i) sum += w[i] / divisor[i];
        best = std::max(best, sum);
      }
      return best;
    }
    case RuleKind::ks:
    case RuleKind::relative_max:
      return inv_min;
    case RuleKind::egalitarian:
    case RuleKind::dictator:
      return 1;
    case RuleKind::nash: {
      // |d prod / d x_i| <= prod of the other abilities over [0, b].
      Rat sum = 0;
      for (size_t i = 0; i < b.size(); ++i) {
        Rat prod = 1;
        for (size_t j = 0; j < b.size(); ++j)
          if (j != i) prod *= b[j];
        sum += prod;
      }
      return sum;
    }
    case RuleKind::minmax_blend:
      return (rule.alpha1 + rule.alpha2) * inv_min;
    case RuleKind::mean_sd:
      return (Rat(1) + rule.theta) * inv_min * x.dim();
    case RuleKind::mean_norm:
      return (Rat(1) + rule.norm.theta) * inv_min * x.dim();
    default:
      return 0;  // leximin / weak-pareto-set have no scalar Lipschitz constant
  }
}

std::string OracleComparison::summary() const {
  std::string out = "exact=" + exact_value.str() + " oracle=" + oracle_value.str() +
                    " gap=" + format_rat(gap) +
                    " argmax_chosen=" + (all_argmax_chosen ? "yes" : "no") +
                    " bound=" + format_rat(lipschitz_bound) +
                    " within_bound=" + (gap_within_bound ? "yes" : "no") +
                    " points=" + std::to_string(points_evaluated);
  return out;
}

OracleComparison compare_oracle(const Rule& rule, const Problem& x, const GridSpec& grid) {
  const ChoiceSet cs = solve(rule, x);
  const OracleResult oracle = oracle_solve(rule, x, grid);
  OracleComparison cmp;
  cmp.exact_value = cs.value;
  cmp.oracle_value = oracle.value;
  cmp.points_evaluated = oracle.points_evaluated;
  cmp.values_equal = cs.value.compare(oracle.value) == 0;
  if (cs.value.is_exact() && oracle.value.is_exact()) {
    cmp.gap = cs.value.rat() - oracle.value.rat();
    if (cmp.gap < 0) cmp.gap = -cmp.gap;
  } else {
    cmp.gap = cmp.values_equal ? Rat(0) : Rat(1);
  }
  cmp.lipschitz_bound = rule_lipschitz(rule, x) * grid.spacing;
  cmp.gap_within_bound = cmp.gap <= cmp.lipschitz_bound;
  cmp.all_argmax_chosen = true;
  for (const Point& p : oracle.argmax) {
    if (!in_choice_set_with(rule, x, cs, p)) {
      cmp.all_argmax_chosen = false;
      break;
    }
  }
  return cmp;
}

}  // namespace relfair
