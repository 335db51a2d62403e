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

#ifndef RELFAIR_WEIGHTS_HPP
#define RELFAIR_WEIGHTS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "relfair/geometry.hpp"
#include "relfair/rational.hpp"

namespace relfair {

/// V-representation of a closed convex weight set inside the probability
/// simplex. The set itself is the convex hull of the stored vertices; linear
/// forms are minimized over vertices, which is all rule evaluation needs.
class WeightSet {
 public:
  int dim() const { return n_; }
  const std::vector<Point>& vertices() const { return vertices_; }
  bool operator==(const WeightSet& other) const = default;

  /// True when the vertex list is closed under coordinate permutations.
  bool is_symmetric() const;

  /// True when every vertex is strictly positive (relative interior of the
  /// simplex in the coordinate sense); such rules are strongly Pareto.
  bool strictly_positive() const;

 private:
  friend WeightSet make_weight_set(const std::vector<Point>& vertices);
  WeightSet(int n, std::vector<Point> vertices) : n_(n), vertices_(std::move(vertices)) {}
  int n_ = 0;
  std::vector<Point> vertices_;
};

/// Validates simplex membership, deduplicates and sorts.
WeightSet make_weight_set(const std::vector<Point>& vertices);

/// Closure of the vertex list under all coordinate permutations.
WeightSet symmetrize(const WeightSet& w);

/// The full simplex (unit vectors): relative maximin.
WeightSet simplex_weights(int n);

/// The singleton {(1/n, .., 1/n)}: relative utilitarian.
WeightSet uniform_singleton(int n);

/// All permutations of w: generalized Gini with rank weights w.
WeightSet gini_weights(const Point& w);

/// alpha * uniform + (1 - alpha) * simplex vertices: the maximin/utilitarian
/// blend family.
WeightSet blend_weights(const Rat& alpha, int n);

/// Exact min over vertices of w . v.
Rat min_dot(const WeightSet& w, const Point& v);

/// Minimal V-representation: drops every vertex that is a convex combination
/// of the others (decided by exact feasibility LP).
WeightSet canonicalize(const WeightSet& w);

enum class NormKind { euclidean, sup, one };

/// theta-scaled symmetric norm used by the mean-minus-norm rules.
struct Norm {
  NormKind kind = NormKind::euclidean;
  Rat theta = 1;
};

std::string norm_kind_name(NormKind kind);
NormKind norm_kind_from_name(const std::string& name);

/// Inner polyhedral approximation of the weight set behind the mean-minus-norm
/// rule, built from exact supergradients of the concave objective at sampled
/// directions. Every returned vertex provably lies in the true weight set; a
/// vertex escaping the simplex certifies that the monotonicity condition fails
/// and raises monotonicity_violation_error.
WeightSet weight_set_from_norm(const Norm& norm, int n, int sample_count, uint64_t seed);

}  // namespace relfair

#endif  // RELFAIR_WEIGHTS_HPP
