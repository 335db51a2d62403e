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

#include "relfair/lp.hpp"

#include <algorithm>

#include "relfair/errors.hpp"

namespace relfair {

bool HPolyhedron::operator==(const HPolyhedron& other) const {
  if (dim != other.dim || constraints.size() != other.constraints.size()) return false;
  for (size_t i = 0; i < constraints.size(); ++i) {
    const LinConstraint& a = constraints[i];
    const LinConstraint& b = other.constraints[i];
    if (a.sense != b.sense || a.rhs != b.rhs || a.coeffs != b.coeffs) return false;
  }
  return true;
}

bool satisfies(const LinConstraint& c, const Point& x) {
  Rat lhs = 0;
  for (size_t i = 0; i < c.coeffs.size(); ++i) lhs += c.coeffs[i] * x[i];
  switch (c.sense) {
    case Sense::le: return lhs <= c.rhs;
    case Sense::ge: return lhs >= c.rhs;
    case Sense::eq: return lhs == c.rhs;
  }
  return false;
}

bool contains_point(const HPolyhedron& p, const Point& x) {
  if (static_cast<int>(x.size()) != p.dim) throw dimension_mismatch_error("lp point dimension");
  for (const LinConstraint& c : p.constraints)
    if (!satisfies(c, x)) return false;
  return true;
}

namespace {

// Dense tableau for min c.z st Az = b, z >= 0, with b >= 0 and an initial
// artificial basis. Bland's pivot rule everywhere.
class Tableau {
 public:
  Tableau(std::vector<std::vector<Rat>> rows, std::vector<Rat> rhs, int num_vars)
      : rows_(std::move(rows)), rhs_(std::move(rhs)), num_structural_(num_vars) {
    const size_t m = rows_.size();
    basis_.resize(m);
    for (size_t i = 0; i < m; ++i) {
      if (rhs_[i] < 0) {
        for (Rat& v : rows_[i]) v = -v;
        rhs_[i] = -rhs_[i];
      }
      // Append the artificial column for row i.
      for (size_t k = 0; k < m; ++k) rows_[k].push_back(k == i ? Rat(1) : Rat(0));
      basis_[i] = num_structural_ + static_cast<int>(i);
    }
    total_cols_ = num_structural_ + static_cast<int>(m);
  }

  // Returns false when phase 1 ends with a positive artificial residue.
  bool phase1() {
    std::vector<Rat> cost(static_cast<size_t>(total_cols_), Rat(0));
    for (int j = num_structural_; j < total_cols_; ++j) cost[static_cast<size_t>(j)] = 1;
    build_cost_row(cost);
    run(total_cols_);
    if (objective_ != 0) return false;
    drive_out_artificials();
    return true;
  }

  // Minimizes cost over structural columns only; true unless unbounded.
  bool phase2(const std::vector<Rat>& structural_cost) {
    std::vector<Rat> cost(static_cast<size_t>(total_cols_), Rat(0));
    for (int j = 0; j < num_structural_; ++j) cost[static_cast<size_t>(j)] = structural_cost[static_cast<size_t>(j)];
    build_cost_row(cost);
    return run(num_structural_);
  }

  std::vector<Rat> solution() const {
    std::vector<Rat> z(static_cast<size_t>(num_structural_), Rat(0));
    for (size_t i = 0; i < basis_.size(); ++i)
      if (basis_[i] < num_structural_) z[static_cast<size_t>(basis_[i])] = rhs_[i];
    return z;
  }

 private:
  void build_cost_row(const std::vector<Rat>& cost) {
    cost_row_.assign(static_cast<size_t>(total_cols_), Rat(0));
    objective_ = 0;
    for (int j = 0; j < total_cols_; ++j) cost_row_[static_cast<size_t>(j)] = cost[static_cast<size_t>(j)];
    for (size_t i = 0; i < basis_.size(); ++i) {
      const Rat cb = cost[static_cast<size_t>(basis_[i])];
      if (cb == 0) continue;
      for (int j = 0; j < total_cols_; ++j)
        cost_row_[static_cast<size_t>(j)] -= cb * rows_[i][static_cast<size_t>(j)];
      objective_ += cb * rhs_[i];
    }
  }

  // Bland: entering = lowest-index column with negative reduced cost,
  // leaving = lowest basis index among minimum-ratio rows.
  bool run(int entering_limit) {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < entering_limit; ++j) {
        if (cost_row_[static_cast<size_t>(j)] < 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      Rat best_ratio;
      for (size_t i = 0; i < rows_.size(); ++i) {
        const Rat& a = rows_[i][static_cast<size_t>(enter)];
        if (a <= 0) continue;
        const Rat ratio = rhs_[i] / a;
        if (leave < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[static_cast<size_t>(leave)])) {
          leave = static_cast<int>(i);
          best_ratio = ratio;
        }
      }
      if (leave < 0) return false;  // unbounded descent
      pivot(static_cast<size_t>(leave), enter);
    }
  }

  void pivot(size_t row, int col) {
    const Rat inv = Rat(1) / rows_[row][static_cast<size_t>(col)];
    for (int j = 0; j < total_cols_; ++j) rows_[row][static_cast<size_t>(j)] *= inv;
    rhs_[row] *= inv;
    for (size_t i = 0; i < rows_.size(); ++i) {
      if (i == row) continue;
      const Rat factor = rows_[i][static_cast<size_t>(col)];
      if (factor == 0) continue;
      for (int j = 0; j < total_cols_; ++j)
        rows_[i][static_cast<size_t>(j)] -= factor * rows_[row][static_cast<size_t>(j)];
      rhs_[i] -= factor * rhs_[row];
    }
    const Rat cfactor = cost_row_[static_cast<size_t>(col)];
    if (cfactor != 0) {
      for (int j = 0; j < total_cols_; ++j)
        cost_row_[static_cast<size_t>(j)] -= cfactor * rows_[row][static_cast<size_t>(j)];
      objective_ += cfactor * rhs_[row];
    }
    basis_[row] = col;
  }

  void drive_out_artificials() {
    for (size_t i = 0; i < basis_.size(); ++i) {
      if (basis_[i] < num_structural_) continue;
      int col = -1;
      for (int j = 0; j < num_structural_; ++j) {
        if (rows_[i][static_cast<size_t>(j)] != 0) {
          col = j;
          break;
        }
      }
      // A redundant row keeps its artificial basic at zero; phase 2 never
      // lets artificial columns re-enter.
      if (col >= 0) pivot(i, col);
    }
  }

  std::vector<std::vector<Rat>> rows_;
  std::vector<Rat> rhs_;
  std::vector<Rat> cost_row_;
  std::vector<int> basis_;
  Rat objective_;
  int num_structural_ = 0;
  int total_cols_ = 0;
};

struct StandardForm {
  // Structural columns: x_i = z_{2i} - z_{2i+1}, then one slack per
  // inequality row.
  std::vector<std::vector<Rat>> rows;
  std::vector<Rat> rhs;
  int num_vars = 0;
  int dim = 0;
};

StandardForm to_standard_form(const HPolyhedron& p) {
  StandardForm sf;
  sf.dim = p.dim;
  int slacks = 0;
  for (const LinConstraint& c : p.constraints)
    if (c.sense != Sense::eq) ++slacks;
  sf.num_vars = 2 * p.dim + slacks;
  int slack_index = 2 * p.dim;
  for (const LinConstraint& c : p.constraints) {
    if (static_cast<int>(c.coeffs.size()) != p.dim)
      throw dimension_mismatch_error("constraint width differs from polyhedron dimension");
    std::vector<Rat> row(static_cast<size_t>(sf.num_vars), Rat(0));
    for (int i = 0; i < p.dim; ++i) {
      row[static_cast<size_t>(2 * i)] = c.coeffs[static_cast<size_t>(i)];
      row[static_cast<size_t>(2 * i + 1)] = -c.coeffs[static_cast<size_t>(i)];
    }
    if (c.sense == Sense::le) row[static_cast<size_t>(slack_index++)] = 1;
    if (c.sense == Sense::ge) row[static_cast<size_t>(slack_index++)] = -1;
    sf.rows.push_back(std::move(row));
    sf.rhs.push_back(c.rhs);
  }
  return sf;
}

Point recover_point(const StandardForm& sf, const std::vector<Rat>& z) {
  Point x(static_cast<size_t>(sf.dim));
  for (int i = 0; i < sf.dim; ++i)
    x[static_cast<size_t>(i)] = z[static_cast<size_t>(2 * i)] - z[static_cast<size_t>(2 * i + 1)];
  return x;
}

}  // namespace

LpResult lp_solve(const std::vector<Rat>& objective, const HPolyhedron& p, bool maximize) {
  if (static_cast<int>(objective.size()) != p.dim)
    throw dimension_mismatch_error("objective width differs from polyhedron dimension");
  StandardForm sf = to_standard_form(p);
  Tableau tab(sf.rows, sf.rhs, sf.num_vars);
  LpResult res;
  if (!tab.phase1()) {
    res.status = LpStatus::infeasible;
    return res;
  }
  std::vector<Rat> cost(static_cast<size_t>(sf.num_vars), Rat(0));
  for (int i = 0; i < p.dim; ++i) {
    const Rat c = maximize ? -objective[static_cast<size_t>(i)] : objective[static_cast<size_t>(i)];
    cost[static_cast<size_t>(2 * i)] = c;
    cost[static_cast<size_t>(2 * i + 1)] = -c;
  }
  if (!tab.phase2(cost)) {
    res.status = LpStatus::unbounded;
    return res;
  }
  res.status = LpStatus::optimal;
  res.point = recover_point(sf, tab.solution());
  res.value = 0;
  for (int i = 0; i < p.dim; ++i)
    res.value += objective[static_cast<size_t>(i)] * res.point[static_cast<size_t>(i)];
  return res;
}

std::optional<Point> feasible_point(const HPolyhedron& p) {
  StandardForm sf = to_standard_form(p);
  Tableau tab(sf.rows, sf.rhs, sf.num_vars);
  if (!tab.phase1()) return std::nullopt;
  return recover_point(sf, tab.solution());
}

std::optional<std::vector<Point>> enumerate_vertices(const HPolyhedron& p, size_t subset_cap) {
  const int n = p.dim;
  const int m = static_cast<int>(p.constraints.size());
  if (m < n) return std::vector<Point>{};
  // Count candidate bases first.
  size_t combos = 1;
  for (int k = 0; k < n; ++k) {
    combos = combos * static_cast<size_t>(m - k) / static_cast<size_t>(k + 1);
    if (combos > subset_cap) return std::nullopt;
  }
  std::vector<Point> out;
  std::vector<int> idx(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) idx[static_cast<size_t>(k)] = k;
  for (;;) {
    // Solve the n x n system given by the selected constraints as equalities.
    std::vector<std::vector<Rat>> a(static_cast<size_t>(n),
                                    std::vector<Rat>(static_cast<size_t>(n + 1), Rat(0)));
    for (int r = 0; r < n; ++r) {
      const LinConstraint& c = p.constraints[static_cast<size_t>(idx[static_cast<size_t>(r)])];
      for (int j = 0; j < n; ++j) a[static_cast<size_t>(r)][static_cast<size_t>(j)] = c.coeffs[static_cast<size_t>(j)];
      a[static_cast<size_t>(r)][static_cast<size_t>(n)] = c.rhs;
    }
    bool singular = false;
    for (int col = 0; col < n && !singular; ++col) {
      int piv = -1;
      for (int r = col; r < n; ++r) {
        if (a[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) {
          piv = r;
          break;
        }
      }
      if (piv < 0) {
        singular = true;
        break;
      }
      std::swap(a[static_cast<size_t>(col)], a[static_cast<size_t>(piv)]);
      const Rat inv = Rat(1) / a[static_cast<size_t>(col)][static_cast<size_t>(col)];
      for (int j = col; j <= n; ++j) a[static_cast<size_t>(col)][static_cast<size_t>(j)] *= inv;
      for (int r = 0; r < n; ++r) {
        if (r == col) continue;
        const Rat f = a[static_cast<size_t>(r)][static_cast<size_t>(col)];
        if (f == 0) continue;
        for (int j = col; j <= n; ++j)
          a[static_cast<size_t>(r)][static_cast<size_t>(j)] -= f * a[static_cast<size_t>(col)][static_cast<size_t>(j)];
      }
    }
    if (!singular) {
      Point x(static_cast<size_t>(n));
      for (int r = 0; r < n; ++r) x[static_cast<size_t>(r)] = a[static_cast<size_t>(r)][static_cast<size_t>(n)];
      if (contains_point(p, x)) out.push_back(std::move(x));
    }
    // Next combination.
    int k = n - 1;
    while (k >= 0 && idx[static_cast<size_t>(k)] == m - n + k) --k;
    if (k < 0) break;
    ++idx[static_cast<size_t>(k)];
    for (int j = k + 1; j < n; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
  }
  std::sort(out.begin(), out.end(), lex_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool polyhedron_subset(const HPolyhedron& inner, const HPolyhedron& outer) {
  if (inner.dim != outer.dim) throw dimension_mismatch_error("subset check dimensions differ");
  if (!feasible_point(inner)) return true;
  for (const LinConstraint& c : outer.constraints) {
    if (c.sense == Sense::le || c.sense == Sense::eq) {
      const LpResult r = lp_solve(c.coeffs, inner, /*maximize=*/true);
      if (r.status != LpStatus::optimal || r.value > c.rhs) return false;
    }
    if (c.sense == Sense::ge || c.sense == Sense::eq) {
      const LpResult r = lp_solve(c.coeffs, inner, /*maximize=*/false);
      if (r.status != LpStatus::optimal || r.value < c.rhs) return false;
    }
  }
  return true;
}

HPolyhedron box_polyhedron(const Point& corner) {
  HPolyhedron p;
  p.dim = static_cast<int>(corner.size());
  for (int i = 0; i < p.dim; ++i) {
    LinConstraint lo;
    lo.coeffs.assign(static_cast<size_t>(p.dim), Rat(0));
    lo.coeffs[static_cast<size_t>(i)] = 1;
    lo.sense = Sense::ge;
    lo.rhs = 0;
    p.constraints.push_back(std::move(lo));
  }
  for (int i = 0; i < p.dim; ++i) {
    LinConstraint hi;
    hi.coeffs.assign(static_cast<size_t>(p.dim), Rat(0));
    hi.coeffs[static_cast<size_t>(i)] = 1;
    hi.sense = Sense::le;
    hi.rhs = corner[static_cast<size_t>(i)];
    p.constraints.push_back(std::move(hi));
  }
  return p;
}

HPolyhedron point_polyhedron(const Point& pt) {
  HPolyhedron p;
  p.dim = static_cast<int>(pt.size());
  for (int i = 0; i < p.dim; ++i) {
    LinConstraint c;
    c.coeffs.assign(static_cast<size_t>(p.dim), Rat(0));
    c.coeffs[static_cast<size_t>(i)] = 1;
    c.sense = Sense::eq;
    c.rhs = pt[static_cast<size_t>(i)];
    p.constraints.push_back(std::move(c));
  }
  return p;
}

HPolyhedron intersect(const HPolyhedron& a, const HPolyhedron& b) {
  if (a.dim != b.dim) throw dimension_mismatch_error("intersect dimensions differ");
  HPolyhedron out = a;
  out.constraints.insert(out.constraints.end(), b.constraints.begin(), b.constraints.end());
  return out;
}

HPolyhedron scale_image(const HPolyhedron& p, const Point& a) {
  HPolyhedron out = p;
  for (LinConstraint& c : out.constraints)
    for (size_t i = 0; i < c.coeffs.size(); ++i) c.coeffs[i] /= a[i];
  return out;
}

HPolyhedron translate_image(const HPolyhedron& p, const Rat& alpha) {
  HPolyhedron out = p;
  for (LinConstraint& c : out.constraints) {
    Rat coeff_sum = 0;
    for (const Rat& v : c.coeffs) coeff_sum += v;
    c.rhs += alpha * coeff_sum;
  }
  return out;
}

HPolyhedron permute_image(const HPolyhedron& p, const Permutation& pi) {
  HPolyhedron out = p;
  for (LinConstraint& c : out.constraints) c.coeffs = pi.apply(c.coeffs);
  return out;
}

}  // namespace relfair
