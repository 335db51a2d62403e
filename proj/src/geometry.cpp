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

#include "relfair/geometry.hpp"

#include <algorithm>
#include <set>

#include "relfair/errors.hpp"

namespace relfair {

bool leq(const Point& a, const Point& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool geq(const Point& a, const Point& b) { return leq(b, a); }

bool strictly_above(const Point& a, const Point& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] <= b[i]) return false;
  return true;
}

bool dominates(const Point& a, const Point& b) { return geq(a, b) && a != b; }

bool lex_less(const Point& a, const Point& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Point add(const Point& a, const Point& b) {
  Point out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Point sub(const Point& a, const Point& b) {
  Point out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Point mul(const Point& a, const Point& b) {
  Point out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
  return out;
}

Point scale_point(const Point& a, const Rat& c) {
  Point out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] * c;
  return out;
}

Point shift(const Point& a, const Rat& c) {
  Point out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + c;
  return out;
}

Point constant_point(int n, const Rat& c) { return Point(static_cast<size_t>(n), c); }

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (int v : image_) {
    if (v < 0 || v >= static_cast<int>(image_.size()) || seen[static_cast<size_t>(v)])
      throw bad_parameter_error("invalid permutation image");
    seen[static_cast<size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> image(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) image[static_cast<size_t>(i)] = i;
  return Permutation(std::move(image));
}

Permutation Permutation::transposition(int n, int i, int j) {
  auto p = identity(n);
  std::swap(p.image_[static_cast<size_t>(i)], p.image_[static_cast<size_t>(j)]);
  return p;
}

std::vector<Permutation> Permutation::all(int n) {
  std::vector<int> image(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) image[static_cast<size_t>(i)] = i;
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(image));
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

Point Permutation::apply(const Point& x) const {
  Point out(x.size());
  for (size_t k = 0; k < x.size(); ++k) out[k] = x[image_[k]];
  return out;
}

bool Permutation::is_identity() const {
  for (size_t k = 0; k < image_.size(); ++k)
    if (image_[k] != static_cast<int>(k)) return false;
  return true;
}

namespace {

std::vector<Point> canonical_generators(const std::vector<Point>& points, int n) {
  std::vector<Point> sorted = points;
  std::sort(sorted.begin(), sorted.end(), lex_less);
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<Point> maximal;
  for (const Point& p : sorted) {
    bool keep = true;
    for (const Point& q : sorted) {
      if (dominates(q, p)) {
        keep = false;
        break;
      }
    }
    if (keep) maximal.push_back(p);
  }
  for (int i = 0; i < n; ++i) {
    bool positive = false;
    for (const Point& g : maximal) {
      if (g[static_cast<size_t>(i)] > 0) {
        positive = true;
        break;
      }
    }
    if (!positive)
      throw degenerate_problem_error("no generator has a positive coordinate " +
                                     std::to_string(i + 1));
  }
  return maximal;
}

}  // namespace

Problem make_problem(const std::vector<Point>& points) {
  if (points.empty()) throw empty_input_error("a problem needs at least one generator");
  const int n = static_cast<int>(points[0].size());
  if (n < 2) throw bad_parameter_error("problems require dimension >= 2");
  for (const Point& p : points) {
    if (static_cast<int>(p.size()) != n)
      throw dimension_mismatch_error("generator dimensions differ");
    for (const Rat& c : p)
      if (c < 0) throw bad_parameter_error("generator coordinates must be nonnegative");
  }
  return Problem(n, canonical_generators(points, n));
}

Problem scmp_hull(const std::vector<Point>& points) {
  if (points.empty()) throw empty_input_error("a problem needs at least one generator");
  const int n = static_cast<int>(points[0].size());
  std::vector<Point> closed;
  for (const Permutation& pi : Permutation::all(n)) {
    for (const Point& p : points) {
      if (static_cast<int>(p.size()) != n)
        throw dimension_mismatch_error("generator dimensions differ");
      closed.push_back(pi.apply(p));
    }
  }
  return make_problem(closed);
}

Point ideal_point(const Problem& x) {
  Point b = x.generators().front();
  for (const Point& g : x.generators())
    for (size_t i = 0; i < b.size(); ++i) b[i] = std::max(b[i], g[i]);
  return b;
}

bool contains(const Problem& x, const Point& p) {
  if (static_cast<int>(p.size()) != x.dim())
    throw dimension_mismatch_error("point dimension differs from problem");
  for (const Rat& c : p)
    if (c < 0) return false;
  for (const Point& g : x.generators())
    if (leq(p, g)) return true;
  return false;
}

Problem scale(const Problem& x, const Point& a) {
  if (static_cast<int>(a.size()) != x.dim())
    throw dimension_mismatch_error("scale vector dimension differs from problem");
  for (const Rat& c : a)
    if (c <= 0) throw nonpositive_scale_error();
  std::vector<Point> gens;
  gens.reserve(x.generators().size());
  for (const Point& g : x.generators()) gens.push_back(mul(a, g));
  return make_problem(gens);
}

Problem translate_cmp(const Problem& x, const Rat& alpha) {
  if (alpha <= 0) throw nonpositive_shift_error();
  std::vector<Point> gens;
  gens.reserve(x.generators().size());
  for (const Point& g : x.generators()) gens.push_back(shift(g, alpha));
  return make_problem(gens);
}

Problem permute(const Problem& x, const Permutation& pi) {
  if (pi.size() != x.dim()) throw dimension_mismatch_error("permutation size differs");
  std::vector<Point> gens;
  gens.reserve(x.generators().size());
  for (const Point& g : x.generators()) gens.push_back(pi.apply(g));
  return make_problem(gens);
}

bool is_weak_pareto(const Problem& x, const Point& p) {
  if (!contains(x, p)) throw point_not_in_problem_error();
  for (const Point& g : x.generators())
    if (strictly_above(g, p)) return false;
  return true;
}

bool is_strong_pareto(const Problem& x, const Point& p) {
  if (!contains(x, p)) throw point_not_in_problem_error();
  for (const Point& g : x.generators())
    if (dominates(g, p)) return false;
  return true;
}

bool is_symmetric(const Problem& x) {
  const auto& gens = x.generators();
  const std::set<Point> gen_set(gens.begin(), gens.end());
  for (const Permutation& pi : Permutation::all(x.dim())) {
    if (pi.is_identity()) continue;
    for (const Point& g : gens)
      if (!gen_set.count(pi.apply(g))) return false;
  }
  return true;
}

bool is_equal_able(const Problem& x) {
  const Point b = ideal_point(x);
  for (size_t i = 1; i < b.size(); ++i)
    if (b[i] != b[0]) return false;
  return true;
}

Rat sup_norm(const Point& a, const Point& b) {
  Rat best = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    Rat d = a[i] - b[i];
    if (d < 0) d = -d;
    best = std::max(best, d);
  }
  return best;
}

Rat distance_to_problem(const Problem& x, const Point& p) {
  // Distance to a single box [0, g] is max_i (p_i - g_i)^+; take the best box.
  bool first = true;
  Rat best = 0;
  for (const Point& g : x.generators()) {
    Rat d = 0;
    for (size_t i = 0; i < p.size(); ++i)
      if (p[i] > g[i]) d = std::max(d, Rat(p[i] - g[i]));
    if (first || d < best) {
      best = d;
      first = false;
    }
  }
  return best;
}

Rat hausdorff_upper(const Problem& x, const Problem& y, const Rat& h) {
  if (x.dim() != y.dim()) throw dimension_mismatch_error("hausdorff on unequal dimensions");
  if (h <= 0) throw bad_parameter_error("grid step must be positive");
  Rat bound = 0;
  for (const Point& g : x.generators()) bound = std::max(bound, distance_to_problem(y, g));
  for (const Point& g : y.generators()) bound = std::max(bound, distance_to_problem(x, g));
  return bound;
}

}  // namespace relfair
