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

#ifndef RELFAIR_AXIOMS_HPP
#define RELFAIR_AXIOMS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "relfair/rules.hpp"

namespace relfair {

enum class AxiomId {
  strong_pareto,
  weak_pareto,
  intermediate_pareto,
  scale_invariance,
  anonymity,
  contraction_eai,
  continuity,
  equal_addition_eai,
  compromisability_eai,
  hammond_eai,
  separability_eai,
  strong_symmetry,
};

std::string axiom_name(AxiomId id);
AxiomId axiom_from_name(const std::string& name);

enum class Status { pass, violation, inconclusive };
std::string status_name(Status s);

/// A finite stand-in for a convergent sequence: problems X^k with chosen
/// points x^k, plus the limit pair. Convergence is certified from exact
/// sup-norm Hausdorff bounds.
struct SequenceSpec {
  std::vector<Problem> problems;
  std::vector<Point> points;
  std::optional<Problem> limit_problem;
  Point limit_point;
};

/// The objects one axiom application quantifies over. Which fields are
/// required depends on the axiom; unused fields stay empty. Serialized
/// whole as the replayable witness bundle.
struct AxiomInstance {
  std::optional<Problem> x;
  std::optional<Problem> x2;
  std::optional<Point> a;     // scale vector
  std::optional<Point> pt_x;  // point the axiom talks about / offending point
  std::optional<Point> pt_y;
  std::optional<Rat> alpha;
  std::optional<std::vector<int>> subset_m;  // separability coalition (0-based)
  std::optional<int> i, j;                   // hammond coordinates (0-based)
  std::optional<std::vector<int>> pi;        // permutation image
  std::optional<SequenceSpec> sequence;
  uint64_t seed = 0;  // sampling salt, kept so replays test the same candidates
};

struct Verdict {
  Status status = Status::inconclusive;
  std::string note;
  std::optional<AxiomInstance> witness;
};

struct CheckOptions {
  int sample_points = 64;             // boundary samples per problem
  bool enumerate_piece_vertices = true;
  int vertex_dim_cap = 3;             // enumerate argmax-piece vertices up to this dimension
  bool certify_containment = true;    // try full piece-level LP certification
  int dim = 0;                        // instance dimension for searches; 0 = automatic
  Rat sequence_tol = Rat(1, 1024);    // convergence certificate threshold
};

/// Lighter settings used inside large searches.
CheckOptions search_options();

/// Checks one axiom on one instance. Violations always carry a replayable
/// witness; set-level comparisons follow the graded protocol (exact
/// membership mismatches are conclusive, agreement is Pass for rules with
/// exact argmax pieces and Inconclusive for corner-witness rules).
Verdict check_axiom(const Rule& rule, AxiomId axiom, const AxiomInstance& instance,
                    const CheckOptions& options = CheckOptions{});

/// Draws instances (fixtures first, then seeded random ones) and returns the
/// first Violation, or the aggregate Pass/Inconclusive after the budget.
/// Deterministic for a given seed, independent of thread count.
Verdict search_violation(const Rule& rule, AxiomId axiom, int budget, uint64_t seed,
                         const CheckOptions& options = search_options());

Verdict continuity_probe(const Rule& rule, const SequenceSpec& seq,
                         const CheckOptions& options = CheckOptions{});

Verdict check_hammond_instance(const Rule& rule, const Problem& x_problem, const Point& x,
                               const Point& y, int i, int j,
                               const CheckOptions& options = CheckOptions{});

Verdict check_separability_instance(const Rule& rule, const std::vector<int>& m, const Point& x,
                                    const Point& y, const Problem& x_problem,
                                    const Problem& x2_problem,
                                    const CheckOptions& options = CheckOptions{});

/// Weak monotonicity of the rule's welfare function on given profile pairs
/// (lo <= hi expected to satisfy W(hi) >= W(lo)); used for the mean-minus-SD
/// diagnostics.
Verdict check_function_monotonicity(const Rule& rule,
                                    const std::vector<std::pair<Point, Point>>& ordered_pairs);

struct MatrixCell {
  std::string rule;
  std::string axiom;
  Verdict verdict;
};

struct MatrixReport {
  std::vector<std::string> rule_names;
  std::vector<std::string> axiom_names;
  std::vector<MatrixCell> cells;  // row-major
};

MatrixReport axiom_matrix(const std::vector<Rule>& rules, const std::vector<AxiomId>& axioms,
                          int budget, uint64_t seed, const CheckOptions& options = search_options());

/// The seven independence-example rules, ordered so that rule k's designated
/// violation is axiom k of characterizing_axioms().
std::vector<Rule> independence_example_rules();
std::vector<AxiomId> characterizing_axioms();

// Seeded instance generators.
Problem random_problem(int n, int max_gens, int coord_range, uint64_t seed);
Problem random_equal_able(int n, int max_gens, int coord_range, uint64_t seed);
Problem random_symmetric(int n, int max_gens, int coord_range, uint64_t seed);

/// Shrinks generators of a symmetric problem and re-closes under
/// permutations, so the result is a subproblem in P^e.
Problem random_subproblem(const Problem& x, uint64_t seed);

/// The bundled convergent-sequence fixtures for a given dimension. The first
/// n=2 fixture is the one that separates the lexicographic rule.
std::vector<SequenceSpec> continuity_fixtures(int n);

}  // namespace relfair

#endif  // RELFAIR_AXIOMS_HPP
