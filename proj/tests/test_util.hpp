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

#ifndef RELFAIR_TESTS_TEST_UTIL_HPP
#define RELFAIR_TESTS_TEST_UTIL_HPP

#include <algorithm>
#include <vector>

#include "relfair/rules.hpp"

namespace relfair::testutil {

inline Point pt(std::initializer_list<Rat> coords) { return Point(coords); }

/// Independent closed-form relative maximin: maximize min_i x_i / b_i
/// directly over generator corners, with the argmax pieces written out by
/// hand. Kept free of the solver path it cross-checks.
struct MaximinSolution {
  Rat value;
  std::vector<Point> witnesses;
  std::vector<HPolyhedron> pieces;
};

inline MaximinSolution closed_form_relative_maximin(const Problem& x) {
  const Point b = ideal_point(x);
  MaximinSolution out;
  bool first = true;
  for (const Point& g : x.generators()) {
    Rat m = g[0] / b[0];
    for (size_t i = 1; i < g.size(); ++i) m = std::min(m, Rat(g[i] / b[i]));
    if (first || m > out.value) {
      out.value = m;
      first = false;
    }
  }
  for (const Point& g : x.generators()) {
    Rat m = g[0] / b[0];
    for (size_t i = 1; i < g.size(); ++i) m = std::min(m, Rat(g[i] / b[i]));
    if (m == out.value) out.witnesses.push_back(g);
  }
  std::sort(out.witnesses.begin(), out.witnesses.end(), lex_less);
  for (const Point& g : out.witnesses) {
    HPolyhedron piece = box_polyhedron(g);
    for (size_t i = 0; i < g.size(); ++i) {
      LinConstraint cut;
      cut.coeffs.assign(g.size(), Rat(0));
      cut.coeffs[i] = 1;
      cut.sense = Sense::ge;
      cut.rhs = out.value * b[i];
      piece.constraints.push_back(std::move(cut));
    }
    out.pieces.push_back(std::move(piece));
  }
  return out;
}

/// Canonical form for piece-list comparison: every constraint is rescaled so
/// its first nonzero coefficient is +1 (flipping the sense when that entails
/// a sign change), rows are sorted per piece, pieces sorted and deduplicated.
inline std::vector<std::vector<std::tuple<std::vector<Rat>, int, Rat>>> piece_signature(
    const std::vector<HPolyhedron>& pieces) {
  std::vector<std::vector<std::tuple<std::vector<Rat>, int, Rat>>> out;
  for (const HPolyhedron& p : pieces) {
    std::vector<std::tuple<std::vector<Rat>, int, Rat>> rows;
    for (const LinConstraint& c : p.constraints) {
      std::vector<Rat> coeffs = c.coeffs;
      Rat rhs = c.rhs;
      Sense sense = c.sense;
      Rat lead = 0;
      for (const Rat& v : coeffs)
        if (v != 0) {
          lead = v;
          break;
        }
      if (lead != 0) {
        for (Rat& v : coeffs) v /= lead;
        rhs /= lead;
        if (lead < 0 && sense != Sense::eq)
          sense = sense == Sense::le ? Sense::ge : Sense::le;
      }
      rows.emplace_back(std::move(coeffs), static_cast<int>(sense), std::move(rhs));
    }
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    out.push_back(std::move(rows));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace relfair::testutil

#endif  // RELFAIR_TESTS_TEST_UTIL_HPP
