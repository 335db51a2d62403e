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

#include "relfair/weights.hpp"

#include <algorithm>
#include <set>

#include "relfair/errors.hpp"
#include "relfair/lp.hpp"
#include "relfair/prng.hpp"

namespace relfair {

bool WeightSet::is_symmetric() const {
  const std::set<Point> vs(vertices_.begin(), vertices_.end());
  for (const Permutation& pi : Permutation::all(n_)) {
    if (pi.is_identity()) continue;
    for (const Point& v : vertices_)
      if (!vs.count(pi.apply(v))) return false;
  }
  return true;
}

bool WeightSet::strictly_positive() const {
  for (const Point& v : vertices_)
    for (const Rat& c : v)
      if (c <= 0) return false;
  return true;
}

WeightSet make_weight_set(const std::vector<Point>& vertices) {
  if (vertices.empty()) throw empty_input_error("a weight set needs at least one vertex");
  const int n = static_cast<int>(vertices[0].size());
  if (n < 2) throw bad_parameter_error("weight sets require dimension >= 2");
  std::vector<Point> vs = vertices;
  for (const Point& v : vs) {
    if (static_cast<int>(v.size()) != n) throw dimension_mismatch_error("vertex dimensions differ");
    Rat sum = 0;
    for (const Rat& c : v) {
      if (c < 0) throw not_in_simplex_error("negative weight " + format_point(v));
      sum += c;
    }
    if (sum != 1) throw not_in_simplex_error("weights sum to " + format_rat(sum));
  }
  std::sort(vs.begin(), vs.end(), lex_less);
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return WeightSet(n, std::move(vs));
}

WeightSet symmetrize(const WeightSet& w) {
  std::vector<Point> closed;
  for (const Permutation& pi : Permutation::all(w.dim()))
    for (const Point& v : w.vertices()) closed.push_back(pi.apply(v));
  return make_weight_set(closed);
}

WeightSet simplex_weights(int n) {
  if (n < 2) throw bad_parameter_error("n >= 2 required");
  std::vector<Point> vs;
  for (int i = 0; i < n; ++i) {
    Point e(static_cast<size_t>(n), Rat(0));
    e[static_cast<size_t>(i)] = 1;
    vs.push_back(std::move(e));
  }
  return make_weight_set(vs);
}

WeightSet uniform_singleton(int n) {
  if (n < 2) throw bad_parameter_error("n >= 2 required");
  return make_weight_set({constant_point(n, Rat(1, n))});
}

WeightSet gini_weights(const Point& w) {
  WeightSet base = make_weight_set({w});
  return symmetrize(base);
}

WeightSet blend_weights(const Rat& alpha, int n) {
  if (alpha < 0 || alpha > 1) throw bad_parameter_error("blend weight must lie in [0,1]");
  if (n < 2) throw bad_parameter_error("n >= 2 required");
  const Rat u(1, n);
  std::vector<Point> vs;
  for (int i = 0; i < n; ++i) {
    Point v(static_cast<size_t>(n), alpha * u);
    v[static_cast<size_t>(i)] += 1 - alpha;
    vs.push_back(std::move(v));
  }
  return make_weight_set(vs);
}

Rat min_dot(const WeightSet& w, const Point& v) {
  if (static_cast<int>(v.size()) != w.dim())
    throw dimension_mismatch_error("min_dot dimensions differ");
  bool first = true;
  Rat best = 0;
  for (const Point& vertex : w.vertices()) {
    Rat dot = 0;
    for (size_t i = 0; i < v.size(); ++i) dot += vertex[i] * v[i];
    if (first || dot < best) {
      best = dot;
      first = false;
    }
  }
  return best;
}

WeightSet canonicalize(const WeightSet& w) {
  const auto& vs = w.vertices();
  if (vs.size() == 1) return w;
  std::vector<bool> keep(vs.size(), true);
  for (size_t k = 0; k < vs.size(); ++k) {
    // Is vs[k] a convex combination of the still-kept others? Variables are
    // the combination coefficients.
    std::vector<size_t> others;
    for (size_t j = 0; j < vs.size(); ++j)
      if (j != k && keep[j]) others.push_back(j);
    if (others.empty()) continue;
    HPolyhedron p;
    p.dim = static_cast<int>(others.size());
    for (int row = 0; row < w.dim(); ++row) {
      LinConstraint c;
      c.sense = Sense::eq;
      c.rhs = vs[k][static_cast<size_t>(row)];
      for (size_t j : others) c.coeffs.push_back(vs[j][static_cast<size_t>(row)]);
      p.constraints.push_back(std::move(c));
    }
    LinConstraint sum_one;
    sum_one.coeffs.assign(others.size(), Rat(1));
    sum_one.sense = Sense::eq;
    sum_one.rhs = 1;
    p.constraints.push_back(std::move(sum_one));
    for (size_t j = 0; j < others.size(); ++j) {
      LinConstraint nonneg;
      nonneg.coeffs.assign(others.size(), Rat(0));
      nonneg.coeffs[j] = 1;
      nonneg.sense = Sense::ge;
      nonneg.rhs = 0;
      p.constraints.push_back(std::move(nonneg));
    }
    if (feasible_point(p)) keep[k] = false;
  }
  std::vector<Point> kept;
  for (size_t j = 0; j < vs.size(); ++j)
    if (keep[j]) kept.push_back(vs[j]);
  return make_weight_set(kept);
}

std::string norm_kind_name(NormKind kind) {
  switch (kind) {
    case NormKind::euclidean: return "euclidean";
    case NormKind::sup: return "sup";
    case NormKind::one: return "one";
  }
  return "?";
}

NormKind norm_kind_from_name(const std::string& name) {
  if (name == "euclidean") return NormKind::euclidean;
  if (name == "sup") return NormKind::sup;
  if (name == "one") return NormKind::one;
  throw bad_norm_error("unknown norm '" + name + "'");
}

namespace {

// Exact supergradient of x -> mean(x) - theta * ||x - mean(x) 1|| at the
// deviation vector d (which sums to zero). For the euclidean norm the
// denominator is a rational upper bound on ||d||_2, which keeps the result
// inside the true weight set by Cauchy-Schwarz.
Point norm_supergradient(const Norm& norm, const Point& d) {
  const int n = static_cast<int>(d.size());
  Point g(static_cast<size_t>(n), Rat(0));
  bool zero = true;
  for (const Rat& c : d)
    if (c != 0) zero = false;
  if (!zero) {
    switch (norm.kind) {
      case NormKind::sup: {
        size_t j = 0;
        Rat best = 0;
        for (size_t i = 0; i < d.size(); ++i) {
          Rat a = d[i] < 0 ? Rat(-d[i]) : d[i];
          if (a > best) {
            best = a;
            j = i;
          }
        }
        g[j] = d[j] > 0 ? norm.theta : -norm.theta;
        break;
      }
      case NormKind::one:
        for (size_t i = 0; i < d.size(); ++i) {
          if (d[i] > 0) g[i] = norm.theta;
          if (d[i] < 0) g[i] = -norm.theta;
        }
        break;
      case NormKind::euclidean: {
        Rat sq = 0;
        for (const Rat& c : d) sq += c * c;
        const Rat r = sqrt_upper_bound(sq);
        for (size_t i = 0; i < d.size(); ++i) g[i] = norm.theta * d[i] / r;
        break;
      }
    }
  }
  // Project through the centering map and add the mean term.
  Rat gsum = 0;
  for (const Rat& c : g) gsum += c;
  Point w(static_cast<size_t>(n));
  for (size_t i = 0; i < w.size(); ++i) w[i] = Rat(1, n) - g[i] + gsum / n;
  return w;
}

}  // namespace

WeightSet weight_set_from_norm(const Norm& norm, int n, int sample_count, uint64_t seed) {
  if (n < 2) throw bad_parameter_error("n >= 2 required");
  if (sample_count < n) throw bad_parameter_error("sample_count must be at least n");
  if (norm.theta < 0) throw bad_norm_error("norm scale must be nonnegative");
  Prng rng(seed);
  std::vector<Point> directions;
  // Deterministic axis directions first, then random ones.
  for (int i = 0; i < n; ++i) {
    Point d(static_cast<size_t>(n), Rat(0));
    d[static_cast<size_t>(i)] = 1;
    directions.push_back(std::move(d));
  }
  while (static_cast<int>(directions.size()) < sample_count) {
    Point d(static_cast<size_t>(n));
    for (size_t i = 0; i < d.size(); ++i) d[i] = rng.rat(4) - rng.rat(4);
    directions.push_back(std::move(d));
  }
  std::vector<Point> vertices;
  vertices.push_back(constant_point(n, Rat(1, n)));
  for (const Point& y : directions) {
    Rat mean = 0;
    for (const Rat& c : y) mean += c;
    mean /= n;
    Point d(y.size());
    for (size_t i = 0; i < d.size(); ++i) d[i] = y[i] - mean;
    const Point w = norm_supergradient(norm, d);
    for (const Rat& c : w) {
      if (c < 0)
        throw monotonicity_violation_error(
            "supergradient " + format_point(w) + " leaves the simplex; the norm penalty " +
            norm_kind_name(norm.kind) + " with scale " + format_rat(norm.theta) +
            " is not weakly monotone at dimension " + std::to_string(n));
    }
    vertices.push_back(w);
  }
  return canonicalize(make_weight_set(vertices));
}

}  // namespace relfair
