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

#ifndef RELFAIR_LP_HPP
#define RELFAIR_LP_HPP

#include <optional>
#include <vector>

#include "relfair/geometry.hpp"
#include "relfair/rational.hpp"

namespace relfair {

enum class Sense { le, ge, eq };

struct LinConstraint {
  std::vector<Rat> coeffs;
  Sense sense = Sense::le;
  Rat rhs;
};

/// H-representation of a polyhedron; box bounds are ordinary constraints.
/// May be empty or unbounded.
struct HPolyhedron {
  int dim = 0;
  std::vector<LinConstraint> constraints;
  bool operator==(const HPolyhedron& other) const;
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  Rat value;
  Point point;
};

/// Exact simplex over the rationals with Bland's anti-cycling pivot rule;
/// deterministic for a given input. Variables are free (sign-split
/// internally).
LpResult lp_solve(const std::vector<Rat>& objective, const HPolyhedron& p, bool maximize);

/// Phase-1 only: any exact feasible point, or nothing.
std::optional<Point> feasible_point(const HPolyhedron& p);

bool satisfies(const LinConstraint& c, const Point& x);
bool contains_point(const HPolyhedron& p, const Point& x);

/// All vertices of a (pointed, typically bounded) polyhedron by basis
/// enumeration; intended for the small dimensions this project works at.
/// Returns nothing when the number of candidate bases exceeds subset_cap.
std::optional<std::vector<Point>> enumerate_vertices(const HPolyhedron& p,
                                                     size_t subset_cap = 20000);

/// Certifies inner as a subset of outer by maximizing each violated direction.
bool polyhedron_subset(const HPolyhedron& inner, const HPolyhedron& outer);

HPolyhedron box_polyhedron(const Point& corner);
HPolyhedron point_polyhedron(const Point& p);
HPolyhedron intersect(const HPolyhedron& a, const HPolyhedron& b);

// Images of a polyhedron under the problem transforms used by the axioms.
HPolyhedron scale_image(const HPolyhedron& p, const Point& a);
HPolyhedron translate_image(const HPolyhedron& p, const Rat& alpha);
HPolyhedron permute_image(const HPolyhedron& p, const Permutation& pi);

}  // namespace relfair

#endif  // RELFAIR_LP_HPP
