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

#ifndef RELFAIR_GEOMETRY_HPP
#define RELFAIR_GEOMETRY_HPP

#include <vector>

#include "relfair/rational.hpp"

namespace relfair {

/// A utility vector in Q^n.
using Point = std::vector<Rat>;

// Componentwise vector order helpers. leq/geq are the usual partial order,
// strictly_below is the "every coordinate strictly smaller" relation, and
// dominates(a, b) means a >= b with a != b.
bool leq(const Point& a, const Point& b);
bool geq(const Point& a, const Point& b);
bool strictly_above(const Point& a, const Point& b);  // a >> b
bool dominates(const Point& a, const Point& b);       // a > b
bool lex_less(const Point& a, const Point& b);

Point add(const Point& a, const Point& b);
Point sub(const Point& a, const Point& b);
Point mul(const Point& a, const Point& b);  // coordinate-wise product
Point scale_point(const Point& a, const Rat& c);
Point shift(const Point& a, const Rat& c);  // a + c*1
Point constant_point(int n, const Rat& c);

/// A bijection on coordinate indices {0, .., n-1}.
class Permutation {
 public:
  explicit Permutation(std::vector<int> image);
  static Permutation identity(int n);
  static std::vector<Permutation> all(int n);
  static Permutation transposition(int n, int i, int j);

  int size() const { return static_cast<int>(image_.size()); }
  const std::vector<int>& image() const { return image_; }

  /// (x^pi)_k = x_{pi(k)}.
  Point apply(const Point& x) const;
  bool is_identity() const;

 private:
  std::vector<int> image_;
};

/// A compact comprehensive subset of the nonnegative orthant, stored as the
/// comprehensive hull of its finitely many undominated box corners. The
/// generator list is canonical: pairwise incomparable, deduplicated, sorted
/// lexicographically, and for every coordinate some generator is positive.
class Problem {
 public:
  int dim() const { return n_; }
  const std::vector<Point>& generators() const { return gens_; }
  bool operator==(const Problem& other) const = default;

 private:
  friend Problem make_problem(const std::vector<Point>& points);
  Problem(int n, std::vector<Point> gens) : n_(n), gens_(std::move(gens)) {}
  int n_ = 0;
  std::vector<Point> gens_;
};

/// Comprehensive hull of a finite point set.
Problem make_problem(const std::vector<Point>& points);

/// Symmetric comprehensive hull: the hull of every coordinate permutation of
/// every input point.
Problem scmp_hull(const std::vector<Point>& points);

/// Coordinate-wise maximum utilities ("abilities"); strictly positive.
Point ideal_point(const Problem& x);

bool contains(const Problem& x, const Point& p);

/// {a1*x1, .., an*xn} for a >> 0.
Problem scale(const Problem& x, const Point& a);

/// Comprehensive hull of X + alpha*1, alpha > 0.
Problem translate_cmp(const Problem& x, const Rat& alpha);

Problem permute(const Problem& x, const Permutation& pi);

/// Weak Pareto: no feasible y >> p. Strong Pareto: no feasible y > p.
/// Both require p to be feasible.
bool is_weak_pareto(const Problem& x, const Point& p);
bool is_strong_pareto(const Problem& x, const Point& p);

bool is_symmetric(const Problem& x);

/// True when the ideal point has equal coordinates (class P^e).
bool is_equal_able(const Problem& x);

/// Certified upper bound on the sup-norm Hausdorff distance between two
/// problems. For comprehensive box unions the distance from any point of one
/// set to the other is nondecreasing coordinate-wise, so the supremum over
/// each box is attained at its corner and the corner bound is already tight;
/// the h refinement never improves it and is kept for interface stability.
Rat hausdorff_upper(const Problem& x, const Problem& y, const Rat& h);

/// Sup-norm distance from a point to a problem (0 when contained).
Rat distance_to_problem(const Problem& x, const Point& p);

Rat sup_norm(const Point& a, const Point& b);

}  // namespace relfair

#endif  // RELFAIR_GEOMETRY_HPP
