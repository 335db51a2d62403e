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

#include "relfair/axioms.hpp"

#include <algorithm>
#include <set>

#include "relfair/errors.hpp"
#include "relfair/parallel.hpp"
#include "relfair/prng.hpp"

namespace relfair {

std::string axiom_name(AxiomId id) {
  switch (id) {
    case AxiomId::strong_pareto: return "strong_pareto";
    case AxiomId::weak_pareto: return "weak_pareto";
    case AxiomId::intermediate_pareto: return "intermediate_pareto";
    case AxiomId::scale_invariance: return "scale_invariance";
    case AxiomId::anonymity: return "anonymity";
    case AxiomId::contraction_eai: return "contraction_eai";
    case AxiomId::continuity: return "continuity";
    case AxiomId::equal_addition_eai: return "equal_addition_eai";
    case AxiomId::compromisability_eai: return "compromisability_eai";
    case AxiomId::hammond_eai: return "hammond_eai";
    case AxiomId::separability_eai: return "separability_eai";
    case AxiomId::strong_symmetry: return "strong_symmetry";
  }
  return "?";
}

AxiomId axiom_from_name(const std::string& name) {
  for (AxiomId id : {AxiomId::strong_pareto, AxiomId::weak_pareto, AxiomId::intermediate_pareto,
                     AxiomId::scale_invariance, AxiomId::anonymity, AxiomId::contraction_eai,
                     AxiomId::continuity, AxiomId::equal_addition_eai,
                     AxiomId::compromisability_eai, AxiomId::hammond_eai,
                     AxiomId::separability_eai, AxiomId::strong_symmetry})
    if (axiom_name(id) == name) return id;
  throw parse_error("unknown axiom '" + name + "'");
}

std::string status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::violation: return "violation";
    case Status::inconclusive: return "inconclusive";
  }
  return "?";
}

CheckOptions search_options() {
  CheckOptions opts;
  opts.sample_points = 12;
  opts.vertex_dim_cap = 2;
  opts.certify_containment = false;
  return opts;
}

namespace {

Point pt(std::initializer_list<Rat> coords) { return Point(coords); }

Verdict verdict(Status s, std::string note, std::optional<AxiomInstance> witness = std::nullopt) {
  Verdict v;
  v.status = s;
  v.note = std::move(note);
  v.witness = std::move(witness);
  return v;
}

// Candidate points probed in set-level comparisons: generators, witnesses,
// halved-coordinate face points, argmax-piece vertices (small dimensions),
// and seeded boundary samples.
std::vector<Point> candidate_points(const Problem& x, const ChoiceSet& cs,
                                    const CheckOptions& opts, uint64_t salt) {
  std::vector<Point> out = x.generators();
  out.insert(out.end(), cs.witnesses.begin(), cs.witnesses.end());
  for (const Point& g : x.generators()) {
    for (size_t i = 0; i < g.size(); ++i) {
      Point face = g;
      face[i] /= 2;
      out.push_back(std::move(face));
    }
  }
  if (cs.mode == ChoiceMode::exact && opts.enumerate_piece_vertices &&
      x.dim() <= opts.vertex_dim_cap) {
    for (const HPolyhedron& piece : cs.pieces) {
      if (auto vertices = enumerate_vertices(piece, 3000))
        out.insert(out.end(), vertices->begin(), vertices->end());
    }
  }
  Prng rng(salt ^ 0xab12cd34ef56ULL);
  const auto& gens = x.generators();
  for (int s = 0; s < opts.sample_points; ++s) {
    Point p = gens[s % gens.size()];
    const size_t i = rng.below(p.size());
    p[i] *= Rat(static_cast<int>(rng.below(17)), 16);
    out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end(), lex_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

AxiomInstance with_point(AxiomInstance inst, const Point& p) {
  inst.pt_x = p;
  return inst;
}

// Piece-level certificate that the unions agree: every piece of one side
// sits inside a single piece of the other. Sufficient, not necessary, so a
// failure only downgrades the note, never the verdict.
bool pieces_cross_contained(const std::vector<HPolyhedron>& a, const std::vector<HPolyhedron>& b) {
  auto covered = [](const HPolyhedron& piece, const std::vector<HPolyhedron>& cover) {
    for (const HPolyhedron& candidate : cover)
      if (polyhedron_subset(piece, candidate)) return true;
    return false;
  };
  for (const HPolyhedron& piece : a)
    if (!covered(piece, b)) return false;
  for (const HPolyhedron& piece : b)
    if (!covered(piece, a)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Individual axiom checks.
// ---------------------------------------------------------------------------

Verdict check_pareto_family(const Rule& rule, AxiomId level, const AxiomInstance& inst,
                            const CheckOptions& opts) {
  if (!inst.x) throw bad_instance_error("pareto checks need a problem");
  const Problem& x = *inst.x;
  const ChoiceSet cs = solve(rule, x);
  std::vector<Point> cands = candidate_points(x, cs, opts, inst.seed);
  if (inst.pt_x) cands.push_back(*inst.pt_x);

  bool undecided = false;
  const bool want_strong_everywhere = level == AxiomId::strong_pareto;
  for (const Point& c : cands) {
    const auto member = membership_certain(rule, x, cs, c);
    if (!member) {
      undecided = true;
      continue;
    }
    if (!*member) continue;
    if (!is_weak_pareto(x, c))
      return verdict(Status::violation,
                     "chosen point " + format_point(c) + " is strictly dominated in X",
                     with_point(inst, c));
    if (want_strong_everywhere && !is_strong_pareto(x, c))
      return verdict(Status::violation, "chosen point " + format_point(c) + " is dominated in X",
                     with_point(inst, c));
  }

  // Universal weak-Pareto part: certified when the objective strictly
  // increases along >>, when membership is pointwise Pareto by definition,
  // or when the choice set is the single KS point.
  bool weak_certified = rule.strictly_monotone() || rule.kind == RuleKind::weak_pareto_set;
  if (rule.kind == RuleKind::ks) weak_certified = is_weak_pareto(x, cs.witnesses.front());

  if (level == AxiomId::intermediate_pareto) {
    bool strong_found = false;
    for (const Point& w : cs.witnesses) {
      if (is_strong_pareto(x, w)) {
        strong_found = true;
        break;
      }
    }
    if (!strong_found) {
      for (const Point& c : cands) {
        const auto member = membership_certain(rule, x, cs, c);
        if (member && *member && is_strong_pareto(x, c)) {
          strong_found = true;
          break;
        }
      }
    }
    if (!strong_found) {
      if (rule.kind == RuleKind::ks)
        return verdict(Status::violation,
                       "F(X) = {" + format_point(cs.witnesses.front()) +
                           "} and that point is dominated in X",
                       inst);
      return verdict(Status::inconclusive, "no strongly Pareto chosen point among candidates");
    }
  }

  if (want_strong_everywhere) {
    const bool strong_certified =
        (rule.kind == RuleKind::ks && is_strong_pareto(x, cs.witnesses.front())) ||
        (rule.kind == RuleKind::relative_fair && rule.weights->strictly_positive());
    if (strong_certified && !undecided) return verdict(Status::pass, "certified");
    return verdict(Status::inconclusive, "candidates only");
  }

  if (weak_certified && !undecided) return verdict(Status::pass, "certified");
  return verdict(Status::inconclusive, "candidates only");
}

Verdict check_scale_invariance(const Rule& rule, const AxiomInstance& inst,
                               const CheckOptions& opts) {
  if (!inst.x || !inst.a) throw bad_instance_error("scale invariance needs a problem and a vector");
  const Problem& x = *inst.x;
  const Point& a = *inst.a;
  if (static_cast<int>(a.size()) != x.dim()) throw bad_instance_error("scale vector dimension");
  for (const Rat& c : a)
    if (c <= 0) throw bad_instance_error("scale vector must be strictly positive");

  const ChoiceSet cs1 = solve(rule, x);
  const Problem x2 = scale(x, a);
  const ChoiceSet cs2 = solve(rule, x2);

  std::vector<Point> cands = candidate_points(x, cs1, opts, inst.seed);
  for (const Point& c2 : candidate_points(x2, cs2, opts, inst.seed + 1)) {
    Point back(c2.size());
    for (size_t i = 0; i < c2.size(); ++i) back[i] = c2[i] / a[i];
    cands.push_back(std::move(back));
  }
  if (inst.pt_x) cands.push_back(*inst.pt_x);

  bool undecided = false;
  for (const Point& c : cands) {
    const auto m1 = membership_certain(rule, x, cs1, c);
    const auto m2 = membership_certain(rule, x2, cs2, mul(a, c));
    if (!m1 || !m2) {
      undecided = true;
      continue;
    }
    if (*m1 != *m2)
      return verdict(Status::violation,
                     format_point(c) + (*m1 ? " is chosen in X but " : " is not chosen in X yet ") +
                         format_point(mul(a, c)) + (*m2 ? " is chosen in aX" : " is not chosen in aX"),
                     with_point(inst, c));
  }
  if (!undecided && cs1.mode == ChoiceMode::exact && cs2.mode == ChoiceMode::exact) {
    if (opts.certify_containment) {
      std::vector<HPolyhedron> scaled;
      for (const HPolyhedron& piece : cs1.pieces) scaled.push_back(scale_image(piece, a));
      if (pieces_cross_contained(scaled, cs2.pieces))
        return verdict(Status::pass, "certified: scaled argmax pieces coincide");
    }
    return verdict(Status::pass, "membership agreed on all candidates");
  }
  return verdict(Status::inconclusive, "corner-witness candidates agreed");
}

Verdict check_anonymity(const Rule& rule, const AxiomInstance& inst, const CheckOptions& opts) {
  if (!inst.x) throw bad_instance_error("anonymity needs a problem");
  const Problem& x = *inst.x;
  if (!is_symmetric(x)) throw bad_instance_error("anonymity quantifies over symmetric problems");
  const ChoiceSet cs = solve(rule, x);
  std::vector<Point> cands = candidate_points(x, cs, opts, inst.seed);
  if (inst.pt_x) cands.push_back(*inst.pt_x);
  const std::vector<Permutation> perms = Permutation::all(x.dim());

  bool undecided = false;
  for (const Point& c : cands) {
    const auto member = membership_certain(rule, x, cs, c);
    if (!member) {
      undecided = true;
      continue;
    }
    if (!*member) continue;
    for (const Permutation& pi : perms) {
      if (pi.is_identity()) continue;
      const auto image_member = membership_certain(rule, x, cs, pi.apply(c));
      if (!image_member) {
        undecided = true;
        continue;
      }
      if (!*image_member) {
        AxiomInstance witness = with_point(inst, c);
        witness.pi = pi.image();
        return verdict(Status::violation,
                       format_point(c) + " is chosen but its permutation " +
                           format_point(pi.apply(c)) + " is not",
                       witness);
      }
    }
  }
  if (!undecided && cs.mode == ChoiceMode::exact) {
    if (opts.certify_containment) {
      bool certified = true;
      for (const Permutation& pi : perms) {
        if (pi.is_identity()) continue;
        std::vector<HPolyhedron> permuted;
        for (const HPolyhedron& piece : cs.pieces) permuted.push_back(permute_image(piece, pi));
        if (!pieces_cross_contained(permuted, cs.pieces)) {
          certified = false;
          break;
        }
      }
      if (certified) return verdict(Status::pass, "certified: argmax is permutation-invariant");
    }
    return verdict(Status::pass, "membership agreed on all candidates");
  }
  return verdict(Status::inconclusive, "corner-witness candidates agreed");
}

Verdict check_strong_symmetry(const Rule& rule, const AxiomInstance& inst,
                              const CheckOptions& opts) {
  if (!inst.x) throw bad_instance_error("strong symmetry needs a problem");
  const Problem& x = *inst.x;
  if (!is_symmetric(x)) throw bad_instance_error("strong symmetry quantifies over symmetric problems");
  const ChoiceSet cs = solve(rule, x);
  std::vector<Point> cands = candidate_points(x, cs, opts, inst.seed);
  if (inst.pt_x) cands.push_back(*inst.pt_x);

  bool undecided = false;
  for (const Point& c : cands) {
    const auto member = membership_certain(rule, x, cs, c);
    if (!member) {
      undecided = true;
      continue;
    }
    if (!*member) continue;
    for (size_t i = 1; i < c.size(); ++i) {
      if (c[i] != c[0])
        return verdict(Status::violation,
                       "chosen point " + format_point(c) + " has unequal coordinates",
                       with_point(inst, c));
    }
  }
  if (rule.kind == RuleKind::ks) return verdict(Status::pass, "certified: single proportional point");
  if (!undecided && cs.mode == ChoiceMode::exact)
    return verdict(Status::pass, "membership agreed on all candidates");
  return verdict(Status::inconclusive, "corner-witness candidates agreed");
}

Verdict check_contraction(const Rule& rule, const AxiomInstance& inst, const CheckOptions& opts) {
  if (!inst.x || !inst.x2) throw bad_instance_error("contraction needs X and X'");
  const Problem& x = *inst.x;
  const Problem& x2 = *inst.x2;
  if (x.dim() != x2.dim()) throw bad_instance_error("dimension mismatch");
  if (!is_equal_able(x) || !is_equal_able(x2))
    throw bad_instance_error("contraction for EAI quantifies over equal-able problems");
  for (const Point& g : x2.generators())
    if (!contains(x, g)) throw bad_instance_error("X' is not a subset of X");

  const ChoiceSet cs = solve(rule, x);
  const auto hypothesis = choice_set_intersects(rule, x, cs, x2);
  if (!hypothesis) return verdict(Status::inconclusive, "cannot establish X' meets F(X)");
  if (!*hypothesis) return verdict(Status::pass, "hypothesis empty: X' misses F(X)");

  const ChoiceSet cs2 = solve(rule, x2);
  std::vector<Point> cands = candidate_points(x2, cs2, opts, inst.seed);
  {
    const std::vector<Point> outer = candidate_points(x, cs, opts, inst.seed + 1);
    cands.insert(cands.end(), outer.begin(), outer.end());
  }
  if (inst.pt_x) cands.push_back(*inst.pt_x);

  bool undecided = false;
  for (const Point& c : cands) {
    const auto in_sub_choice = membership_certain(rule, x2, cs2, c);
    std::optional<bool> in_cut;  // c in X' and chosen in X
    if (!contains(x2, c)) {
      in_cut = false;
    } else {
      in_cut = membership_certain(rule, x, cs, c);
    }
    if (!in_sub_choice || !in_cut) {
      undecided = true;
      continue;
    }
    if (*in_sub_choice != *in_cut)
      return verdict(Status::violation,
                     format_point(c) +
                         (*in_sub_choice ? " is chosen in X' but not in X' intersect F(X)"
                                         : " lies in X' intersect F(X) but is not chosen in X'"),
                     with_point(inst, c));
  }
  if (!undecided && cs.mode == ChoiceMode::exact && cs2.mode == ChoiceMode::exact)
    return verdict(Status::pass, "membership agreed on all candidates");
  return verdict(Status::inconclusive, "corner-witness candidates agreed");
}

Verdict check_equal_addition(const Rule& rule, const AxiomInstance& inst,
                             const CheckOptions& opts) {
  if (!inst.x || !inst.alpha) throw bad_instance_error("equal addition needs a problem and alpha");
  const Problem& x = *inst.x;
  const Rat& alpha = *inst.alpha;
  if (alpha <= 0) throw bad_instance_error("alpha must be positive");
  if (!is_equal_able(x))
    throw bad_instance_error("equal addition for EAI quantifies over equal-able problems");
  if (inst.pt_x && !contains(x, *inst.pt_x))
    throw bad_instance_error("the instance point must be feasible in X");

  const Problem x2 = translate_cmp(x, alpha);
  const ChoiceSet cs1 = solve(rule, x);
  const ChoiceSet cs2 = solve(rule, x2);

  std::vector<Point> cands = candidate_points(x, cs1, opts, inst.seed);
  for (const Point& c2 : candidate_points(x2, cs2, opts, inst.seed + 1)) {
    bool nonneg = true;
    Point back(c2.size());
    for (size_t i = 0; i < c2.size(); ++i) {
      back[i] = c2[i] - alpha;
      if (back[i] < 0) nonneg = false;
    }
    if (nonneg && contains(x, back)) cands.push_back(std::move(back));
  }
  if (inst.pt_x) cands.push_back(*inst.pt_x);

  bool undecided = false;
  for (const Point& c : cands) {
    if (!contains(x, c)) continue;  // the axiom quantifies over x in X
    const auto m1 = membership_certain(rule, x, cs1, c);
    const auto m2 = membership_certain(rule, x2, cs2, shift(c, alpha));
    if (!m1 || !m2) {
      undecided = true;
      continue;
    }
    if (*m1 != *m2)
      return verdict(Status::violation,
                     format_point(c) + (*m1 ? " is chosen in X but its shift " : " is not chosen in X yet its shift ") +
                         format_point(shift(c, alpha)) +
                         (*m2 ? " is chosen after the equal addition" : " is not chosen after the equal addition"),
                     with_point(inst, c));
  }
  if (!undecided && cs1.mode == ChoiceMode::exact && cs2.mode == ChoiceMode::exact)
    return verdict(Status::pass, "membership agreed on all candidates");
  return verdict(Status::inconclusive, "corner-witness candidates agreed");
}

Verdict check_compromisability(const Rule& rule, const AxiomInstance& inst,
                               const CheckOptions& opts) {
  (void)opts;
  if (!inst.x || !inst.pt_x || !inst.pt_y || !inst.alpha)
    throw bad_instance_error("compromisability needs X, x, y and alpha");
  const Problem& x = *inst.x;
  const Rat& alpha = *inst.alpha;
  if (alpha < 0 || alpha > 1) throw bad_instance_error("alpha must lie in [0,1]");
  if (!is_equal_able(x))
    throw bad_instance_error("compromisability for EAI quantifies over equal-able problems");
  const ChoiceSet cs = solve(rule, x);
  const auto mx = membership_certain(rule, x, cs, *inst.pt_x);
  const auto my = membership_certain(rule, x, cs, *inst.pt_y);
  if (!mx || !my) return verdict(Status::inconclusive, "membership of x or y too close to call");
  if (!*mx || !*my) throw bad_instance_error("x and y must be chosen in X");

  Point combo(inst.pt_x->size());
  for (size_t i = 0; i < combo.size(); ++i)
    combo[i] = alpha * (*inst.pt_x)[i] + (1 - alpha) * (*inst.pt_y)[i];
  if (!contains(x, combo)) throw bad_instance_error("the convex combination must stay feasible");

  const auto above = exists_choice_above(rule, x, cs, combo);
  if (!above) return verdict(Status::inconclusive, "no dominating chosen candidate found");
  if (*above) return verdict(Status::pass, "a chosen point dominates the compromise");
  return verdict(Status::violation,
                 "no chosen point weakly dominates " + format_point(combo), inst);
}

Verdict check_hammond(const Rule& rule, const AxiomInstance& inst, const CheckOptions& opts) {
  (void)opts;
  if (!inst.x || !inst.pt_x || !inst.pt_y || !inst.i || !inst.j)
    throw bad_instance_error("hammond equity needs X, x, y, i, j");
  const Problem& x = *inst.x;
  const Point& px = *inst.pt_x;
  const Point& py = *inst.pt_y;
  const int i = *inst.i;
  const int j = *inst.j;
  const int n = x.dim();
  if (i == j || i < 0 || j < 0 || i >= n || j >= n) throw bad_instance_error("bad coordinate pair");
  if (!is_equal_able(x))
    throw bad_instance_error("hammond equity for EAI quantifies over equal-able problems");
  if (static_cast<int>(px.size()) != n || static_cast<int>(py.size()) != n)
    throw bad_instance_error("point dimensions");
  const bool pattern = px[static_cast<size_t>(i)] < py[static_cast<size_t>(i)] &&
                       py[static_cast<size_t>(i)] < py[static_cast<size_t>(j)] &&
                       py[static_cast<size_t>(j)] < px[static_cast<size_t>(j)];
  if (!pattern) throw bad_instance_error("x_i < y_i < y_j < x_j must hold");
  for (int k = 0; k < n; ++k)
    if (k != i && k != j && px[static_cast<size_t>(k)] != py[static_cast<size_t>(k)])
      throw bad_instance_error("x and y must agree outside {i, j}");
  if (!contains(x, px) || !contains(x, py)) throw bad_instance_error("x and y must be feasible");

  const ChoiceSet cs = solve(rule, x);
  const auto mx = membership_certain(rule, x, cs, px);
  const auto my = membership_certain(rule, x, cs, py);
  if (!mx || !my) return verdict(Status::inconclusive, "membership too close to call");
  if (*mx && !*my)
    return verdict(Status::violation,
                   "the less equal point " + format_point(px) + " is chosen but " +
                       format_point(py) + " is not",
                   inst);
  return verdict(Status::pass, *mx ? "both chosen" : "premise x in F(X) does not hold");
}

Verdict check_separability(const Rule& rule, const AxiomInstance& inst, const CheckOptions& opts) {
  (void)opts;
  if (!inst.x || !inst.x2 || !inst.pt_x || !inst.pt_y || !inst.subset_m)
    throw bad_instance_error("separability needs X, X', x, y and M");
  const Problem& x_problem = *inst.x;
  const Problem& x2_problem = *inst.x2;
  const Point& px = *inst.pt_x;
  const Point& py = *inst.pt_y;
  const int n = x_problem.dim();
  if (x2_problem.dim() != n || static_cast<int>(px.size()) != n ||
      static_cast<int>(py.size()) != n)
    throw bad_instance_error("dimension mismatch");
  if (!is_equal_able(x_problem) || !is_equal_able(x2_problem))
    throw bad_instance_error("separability for EAI quantifies over equal-able problems");
  std::vector<bool> in_m(static_cast<size_t>(n), false);
  for (int k : *inst.subset_m) {
    if (k < 0 || k >= n) throw bad_instance_error("coalition index out of range");
    in_m[static_cast<size_t>(k)] = true;
  }
  int m_size = 0;
  for (bool b : in_m) m_size += b ? 1 : 0;
  if (m_size == 0 || m_size == n) throw bad_instance_error("M must be a nonempty proper subset");

  auto compose = [&](const Point& from_m, const Point& from_rest) {
    Point z(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k)
      z[static_cast<size_t>(k)] =
          in_m[static_cast<size_t>(k)] ? from_m[static_cast<size_t>(k)] : from_rest[static_cast<size_t>(k)];
    return z;
  };
  const Point u = compose(px, px);    // (x_M, x_rest)
  const Point v = compose(py, px);    // (y_M, x_rest)
  const Point u2 = compose(px, py);   // (x_M, y_rest)
  const Point v2 = compose(py, py);   // (y_M, y_rest)

  if (!contains(x_problem, u) || !contains(x_problem, v))
    return verdict(Status::pass, "premise fails: composed points not feasible in X");
  if (!contains(x2_problem, u2))
    return verdict(Status::pass, "premise fails: (x_M, y_rest) not feasible in X'");

  const ChoiceSet cs = solve(rule, x_problem);
  const auto mu = membership_certain(rule, x_problem, cs, u);
  const auto mv = membership_certain(rule, x_problem, cs, v);
  if (!mu || !mv) return verdict(Status::inconclusive, "premise membership too close to call");
  if (!*mu || *mv) return verdict(Status::pass, "premise does not bind");

  if (!contains(x2_problem, v2)) return verdict(Status::pass, "conclusion holds: point infeasible");
  const ChoiceSet cs2 = solve(rule, x2_problem);
  const auto mv2 = membership_certain(rule, x2_problem, cs2, v2);
  if (!mv2) return verdict(Status::inconclusive, "conclusion membership too close to call");
  if (*mv2)
    return verdict(Status::violation,
                   format_point(v2) + " is chosen in X' although " + format_point(v) +
                       " lost to " + format_point(u) + " in X",
                   inst);
  return verdict(Status::pass, "conclusion holds");
}

Verdict check_continuity(const Rule& rule, const AxiomInstance& inst, const CheckOptions& opts) {
  if (!inst.sequence) throw bad_instance_error("continuity needs a sequence");
  return continuity_probe(rule, *inst.sequence, opts);
}

}  // namespace

Verdict continuity_probe(const Rule& rule, const SequenceSpec& seq, const CheckOptions& opts) {
  if (!seq.limit_problem || seq.problems.empty() || seq.problems.size() != seq.points.size())
    throw bad_instance_error("sequence must list problems with their chosen points and a limit");
  const Problem& limit = *seq.limit_problem;

  // Premise (i): every x^k is chosen in X^k.
  for (size_t k = 0; k < seq.problems.size(); ++k) {
    const ChoiceSet cs = solve(rule, seq.problems[k]);
    const auto member = membership_certain(rule, seq.problems[k], cs, seq.points[k]);
    if (!member)
      return verdict(Status::inconclusive, "membership at index " + std::to_string(k) + " too close to call");
    if (!*member)
      return verdict(Status::pass,
                     "premise fails: point at index " + std::to_string(k) + " is not chosen");
  }

  // Premise (ii): certified problem convergence.
  Rat prev_d;
  for (size_t k = 0; k < seq.problems.size(); ++k) {
    const Rat d = hausdorff_upper(seq.problems[k], limit, Rat(1, 16));
    if (k > 0 && d > prev_d)
      return verdict(Status::inconclusive, "hausdorff bounds are not nonincreasing");
    prev_d = d;
  }
  if (prev_d > opts.sequence_tol)
    return verdict(Status::inconclusive, "problem convergence not certified: final bound " +
                                             format_rat(prev_d));

  // Premise (iii): certified point convergence.
  Rat prev_p;
  for (size_t k = 0; k < seq.points.size(); ++k) {
    if (seq.points[k].size() != seq.limit_point.size())
      throw bad_instance_error("point dimensions in sequence");
    const Rat d = sup_norm(seq.points[k], seq.limit_point);
    if (k > 0 && d > prev_p)
      return verdict(Status::inconclusive, "point distances are not nonincreasing");
    prev_p = d;
  }
  if (prev_p > opts.sequence_tol)
    return verdict(Status::inconclusive, "point convergence not certified: final distance " +
                                             format_rat(prev_p));

  const ChoiceSet cs = solve(rule, limit);
  const auto member = membership_certain(rule, limit, cs, seq.limit_point);
  if (!member) return verdict(Status::inconclusive, "limit membership too close to call");
  if (*member) return verdict(Status::pass, "limit point is chosen in the limit problem");
  AxiomInstance witness;
  witness.sequence = seq;
  return verdict(Status::violation,
                 "the limit point " + format_point(seq.limit_point) +
                     " of chosen points is not chosen in the limit problem",
                 witness);
}

Verdict check_axiom(const Rule& rule, AxiomId axiom, const AxiomInstance& instance,
                    const CheckOptions& options) {
  switch (axiom) {
    case AxiomId::strong_pareto:
    case AxiomId::weak_pareto:
    case AxiomId::intermediate_pareto:
      return check_pareto_family(rule, axiom, instance, options);
    case AxiomId::scale_invariance:
      return check_scale_invariance(rule, instance, options);
    case AxiomId::anonymity:
      return check_anonymity(rule, instance, options);
    case AxiomId::contraction_eai:
      return check_contraction(rule, instance, options);
    case AxiomId::continuity:
      return check_continuity(rule, instance, options);
    case AxiomId::equal_addition_eai:
      return check_equal_addition(rule, instance, options);
    case AxiomId::compromisability_eai:
      return check_compromisability(rule, instance, options);
    case AxiomId::hammond_eai:
      return check_hammond(rule, instance, options);
    case AxiomId::separability_eai:
      return check_separability(rule, instance, options);
    case AxiomId::strong_symmetry:
      return check_strong_symmetry(rule, instance, options);
  }
  throw bad_parameter_error("unknown axiom");
}

Verdict check_hammond_instance(const Rule& rule, const Problem& x_problem, const Point& x,
                               const Point& y, int i, int j, const CheckOptions& options) {
  AxiomInstance inst;
  inst.x = x_problem;
  inst.pt_x = x;
  inst.pt_y = y;
  inst.i = i;
  inst.j = j;
  return check_axiom(rule, AxiomId::hammond_eai, inst, options);
}

Verdict check_separability_instance(const Rule& rule, const std::vector<int>& m, const Point& x,
                                    const Point& y, const Problem& x_problem,
                                    const Problem& x2_problem, const CheckOptions& options) {
  AxiomInstance inst;
  inst.x = x_problem;
  inst.x2 = x2_problem;
  inst.pt_x = x;
  inst.pt_y = y;
  inst.subset_m = m;
  return check_axiom(rule, AxiomId::separability_eai, inst, options);
}

Verdict check_function_monotonicity(const Rule& rule,
                                    const std::vector<std::pair<Point, Point>>& ordered_pairs) {
  for (const auto& [lo, hi] : ordered_pairs) {
    if (lo.size() != hi.size()) throw bad_instance_error("profile dimensions differ");
    if (!leq(lo, hi)) throw bad_instance_error("pairs must satisfy lo <= hi");
    const RuleValue wl = welfare_value(rule, lo);
    const RuleValue wh = welfare_value(rule, hi);
    if (wl.compare(wh) > 0) {
      AxiomInstance witness;
      witness.pt_x = lo;
      witness.pt_y = hi;
      return verdict(Status::violation,
                     "W" + format_point(lo) + " = " + wl.str() + " > " + wh.str() + " = W" +
                         format_point(hi) + " although the profiles are ordered",
                     witness);
    }
  }
  return verdict(Status::pass, "monotone on all tested pairs");
}

// ---------------------------------------------------------------------------
// Random instance generators.
// ---------------------------------------------------------------------------

namespace {

Problem random_problem_impl(int n, int max_gens, int coord_range, Prng& rng, bool symmetric) {
  for (;;) {
    const int count = rng.range(1, max_gens);
    std::vector<Point> pts;
    for (int g = 0; g < count; ++g) {
      Point p(static_cast<size_t>(n));
      for (auto& c : p) c = rng.rat(coord_range);
      pts.push_back(std::move(p));
    }
    try {
      return symmetric ? scmp_hull(pts) : make_problem(pts);
    } catch (const degenerate_problem_error&) {
      continue;  // redraw until every coordinate can be positive
    }
  }
}

}  // namespace

Problem random_problem(int n, int max_gens, int coord_range, uint64_t seed) {
  Prng rng(seed);
  return random_problem_impl(n, max_gens, coord_range, rng, false);
}

Problem random_symmetric(int n, int max_gens, int coord_range, uint64_t seed) {
  Prng rng(seed);
  return random_problem_impl(n, max_gens, coord_range, rng, true);
}

Problem random_equal_able(int n, int max_gens, int coord_range, uint64_t seed) {
  Prng rng(seed);
  const Problem base = random_problem_impl(n, max_gens, coord_range, rng, false);
  // Rescale so every ability equals the largest one.
  const Point b = ideal_point(base);
  Rat target = b[0];
  for (const Rat& c : b) target = std::max(target, c);
  Point a(b.size());
  for (size_t i = 0; i < b.size(); ++i) a[i] = target / b[i];
  return scale(base, a);
}

Problem random_subproblem(const Problem& x, uint64_t seed) {
  if (!is_symmetric(x)) throw bad_parameter_error("subproblem shrinking needs a symmetric problem");
  Prng rng(seed);
  const Rat factors[] = {Rat(1), Rat(15, 16), Rat(7, 8), Rat(3, 4), Rat(1, 2)};
  for (;;) {
    std::vector<Point> shrunk;
    for (const Point& g : x.generators()) {
      if (x.generators().size() > 1 && rng.below(4) == 0) continue;  // drop some generators
      Point p = g;
      for (auto& c : p) c *= factors[rng.below(5)];
      shrunk.push_back(std::move(p));
    }
    if (shrunk.empty()) continue;
    try {
      return scmp_hull(shrunk);
    } catch (const degenerate_problem_error&) {
      continue;
    }
  }
}

std::vector<SequenceSpec> continuity_fixtures(int n) {
  std::vector<SequenceSpec> out;
  const std::vector<int> ks = {4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14};

  if (n == 2) {
    // The sequence that separates the lexicographic rule: X^k converges to
    // scmp{(1,2)} while (1,1) stays chosen, but (1,1) loses in the limit.
    SequenceSpec lex_killer;
    for (int k : {4, 8, 16, 32, 64, 128, 256, 512, 1024, 2048}) {
      lex_killer.problems.push_back(scmp_hull({pt({1, 1}), pt({Rat(k - 1, k), 2})}));
      lex_killer.points.push_back(pt({1, 1}));
    }
    lex_killer.limit_problem = scmp_hull({pt({1, 2})});
    lex_killer.limit_point = pt({1, 1});
    out.push_back(std::move(lex_killer));
  }

  // Seeded base problems; the bundle is fixed, so the internal seed is too.
  const uint64_t bundle_seed = 0xF1C5ULL + static_cast<uint64_t>(n);
  int base_index = 0;
  while (static_cast<int>(out.size()) < (n == 2 ? 50 : 50)) {
    const Problem base =
        random_symmetric(n, 3, 4, Prng::derive(bundle_seed, 3, static_cast<uint64_t>(base_index)).next());
    const Point anchor = base.generators()[static_cast<size_t>(base_index) % base.generators().size()];
    const int family = base_index % 3;
    SequenceSpec seq;
    if (family == 0) {  // constant
      for (size_t r = 0; r < ks.size(); ++r) {
        seq.problems.push_back(base);
        seq.points.push_back(anchor);
      }
      seq.limit_problem = base;
      seq.limit_point = anchor;
    } else if (family == 1) {  // uniform scaling down to the base
      for (int k : ks) {
        const Rat factor = 1 + Rat(1, Int(1) << k);
        seq.problems.push_back(scale(base, constant_point(n, factor)));
        seq.points.push_back(scale_point(anchor, factor));
      }
      seq.limit_problem = base;
      seq.limit_point = anchor;
    } else {  // equal addition shrinking to the base
      for (int k : ks) {
        const Rat delta = Rat(1, Int(1) << k);
        seq.problems.push_back(translate_cmp(base, delta));
        seq.points.push_back(shift(anchor, delta));
      }
      seq.limit_problem = base;
      seq.limit_point = anchor;
    }
    out.push_back(std::move(seq));
    ++base_index;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Search instance streams: fixtures first, then seeded random instances.
// ---------------------------------------------------------------------------

namespace {

std::vector<AxiomInstance> axiom_fixtures(AxiomId axiom, int n) {
  std::vector<AxiomInstance> out;
  auto inst = []() { return AxiomInstance{}; };
  if (axiom == AxiomId::continuity) {
    for (const SequenceSpec& seq : continuity_fixtures(n)) {
      AxiomInstance i = inst();
      i.sequence = seq;
      out.push_back(std::move(i));
    }
    return out;
  }
  if (n == 2) {
    const Problem wedge = scmp_hull({pt({1, 2})});
    const Problem kite = make_problem({pt({1, 4}), pt({2, 2}), pt({4, 1})});
    const Problem wedge_mid = scmp_hull({pt({1, 2}), pt({Rat(3, 2), Rat(3, 2)})});
    switch (axiom) {
      case AxiomId::strong_pareto:
      case AxiomId::weak_pareto:
      case AxiomId::intermediate_pareto: {
        for (const Problem& p : {wedge, kite, wedge_mid}) {
          AxiomInstance i = inst();
          i.x = p;
          out.push_back(std::move(i));
        }
        break;
      }
      case AxiomId::scale_invariance: {
        AxiomInstance i = inst();
        i.x = wedge;
        i.a = pt({2, 1});
        out.push_back(std::move(i));
        AxiomInstance i2 = inst();
        i2.x = kite;
        i2.a = pt({Rat(1, 2), 3});
        out.push_back(std::move(i2));
        break;
      }
      case AxiomId::anonymity:
      case AxiomId::strong_symmetry: {
        for (const Problem& p : {wedge, wedge_mid}) {
          AxiomInstance i = inst();
          i.x = p;
          out.push_back(std::move(i));
        }
        break;
      }
      case AxiomId::contraction_eai: {
        AxiomInstance i = inst();
        i.x = wedge;
        i.x2 = scmp_hull({pt({1, 1})});
        out.push_back(std::move(i));
        AxiomInstance i2 = inst();
        i2.x = wedge_mid;
        i2.x2 = wedge;
        out.push_back(std::move(i2));
        break;
      }
      case AxiomId::equal_addition_eai: {
        AxiomInstance i = inst();
        i.x = kite;
        i.pt_x = pt({2, 2});
        i.alpha = 1;
        out.push_back(std::move(i));
        AxiomInstance i2 = inst();
        i2.x = wedge;
        i2.pt_x = pt({1, 2});
        i2.alpha = Rat(1, 2);
        out.push_back(std::move(i2));
        break;
      }
      case AxiomId::compromisability_eai: {
        AxiomInstance i = inst();
        i.x = wedge_mid;
        i.pt_x = pt({1, 2});
        i.pt_y = pt({2, 1});
        i.alpha = Rat(1, 2);
        out.push_back(std::move(i));
        break;
      }
      case AxiomId::hammond_eai: {
        AxiomInstance i = inst();
        i.x = scmp_hull({pt({1, 4}), pt({2, Rat(29, 10)})});
        i.pt_x = pt({1, 4});
        i.pt_y = pt({2, Rat(29, 10)});
        i.i = 0;
        i.j = 1;
        out.push_back(std::move(i));
        break;
      }
      default:
        break;
    }
  }
  if (n == 3 && axiom == AxiomId::separability_eai) {
    AxiomInstance i = inst();
    i.x = scmp_hull({pt({2, 2, 3}), pt({1, 3, 3})});
    i.x2 = scmp_hull({pt({2, 2, 1}), pt({1, 3, 1})});
    i.pt_x = pt({2, 2, 3});
    i.pt_y = pt({1, 3, 1});
    i.subset_m = std::vector<int>{0, 1};
    out.push_back(std::move(i));
  }
  return out;
}

int instance_dim(const Rule& rule, AxiomId axiom, const CheckOptions& opts, uint64_t index) {
  if (opts.dim > 0) return opts.dim;
  if (rule.kind == RuleKind::relative_fair) return rule.weights->dim();
  if (axiom == AxiomId::separability_eai) return 3;
  return index % 4 == 3 ? 3 : 2;
}

// Builds instance #index of the stream for (rule, axiom). Fixtures come
// first; the rest are seeded draws. Returns nothing when the stream is
// exhausted (finite fixture-only axioms) or the draw is unusable.
std::optional<AxiomInstance> make_search_instance(const Rule& rule, AxiomId axiom, uint64_t index,
                                                  uint64_t seed, const CheckOptions& opts) {
  const int n_fixture = instance_dim(rule, axiom, opts, 0);
  const std::vector<AxiomInstance> fixtures = axiom_fixtures(axiom, n_fixture);
  if (index < fixtures.size()) {
    AxiomInstance inst = fixtures[index];
    inst.seed = Prng::derive(seed, static_cast<uint64_t>(axiom) + 100, index).next();
    return inst;
  }
  if (axiom == AxiomId::continuity) return std::nullopt;  // finite fixture family

  const uint64_t draw = index - fixtures.size();
  Prng rng = Prng::derive(seed, static_cast<uint64_t>(axiom) * 1000003ULL + 7ULL, draw);
  const int n = instance_dim(rule, axiom, opts, draw);
  AxiomInstance inst;
  inst.seed = rng.next();

  switch (axiom) {
    case AxiomId::strong_pareto:
    case AxiomId::weak_pareto:
    case AxiomId::intermediate_pareto:
      inst.x = random_problem(n, 3, 4, rng.next());
      break;
    case AxiomId::scale_invariance: {
      inst.x = random_problem(n, 3, 4, rng.next());
      Point a(static_cast<size_t>(n));
      for (auto& c : a) c = rng.positive_rat(3);
      inst.a = std::move(a);
      break;
    }
    case AxiomId::anonymity:
    case AxiomId::strong_symmetry:
      inst.x = random_symmetric(n, 3, 4, rng.next());
      break;
    case AxiomId::contraction_eai: {
      const Problem x = random_symmetric(n, 3, 4, rng.next());
      const ChoiceSet cs = solve(rule, x);
      Problem sub = random_subproblem(x, rng.next());
      // Keep the hypothesis satisfiable: put one chosen point into X'.
      std::vector<Point> gens = sub.generators();
      gens.push_back(cs.witnesses.front());
      inst.x = x;
      inst.x2 = scmp_hull(gens);
      break;
    }
    case AxiomId::equal_addition_eai: {
      const Problem x = random_equal_able(n, 3, 4, rng.next());
      const auto& gens = x.generators();
      Point p = gens[rng.below(gens.size())];
      if (rng.below(2) == 0) p[rng.below(p.size())] /= 2;  // interior face point
      const Rat alphas[] = {Rat(1), Rat(1, 2), Rat(2)};
      inst.x = x;
      inst.pt_x = std::move(p);
      inst.alpha = alphas[rng.below(3)];
      break;
    }
    case AxiomId::compromisability_eai: {
      const Problem x = rng.below(2) == 0 ? random_equal_able(n, 3, 4, rng.next())
                                          : random_symmetric(n, 3, 4, rng.next());
      const ChoiceSet cs = solve(rule, x);
      const auto& ws = cs.witnesses;
      const Point wx = ws[rng.below(ws.size())];
      const Point wy = ws[rng.below(ws.size())];
      const Rat alphas[] = {Rat(1, 2), Rat(1, 3), Rat(2, 3), Rat(1, 4), Rat(3, 4)};
      Rat alpha = 0;  // alpha = 0 keeps the instance valid when no midpoint is feasible
      for (const Rat& a : alphas) {
        Point combo(wx.size());
        for (size_t i = 0; i < combo.size(); ++i) combo[i] = a * wx[i] + (1 - a) * wy[i];
        if (contains(x, combo)) {
          alpha = a;
          break;
        }
      }
      inst.x = x;
      inst.pt_x = wx;
      inst.pt_y = wy;
      inst.alpha = alpha;
      break;
    }
    case AxiomId::hammond_eai: {
      // Draw the pattern x_i < y_i < y_j < x_j around a random base point.
      std::set<Rat> levels;
      while (levels.size() < 4) levels.insert(rng.rat(4));
      std::vector<Rat> sorted(levels.begin(), levels.end());
      const int i = rng.range(0, n - 1);
      int j = rng.range(0, n - 2);
      if (j >= i) ++j;
      Point base(static_cast<size_t>(n));
      for (auto& c : base) c = rng.rat(4);
      Point px = base, py = base;
      px[static_cast<size_t>(i)] = sorted[0];
      py[static_cast<size_t>(i)] = sorted[1];
      py[static_cast<size_t>(j)] = sorted[2];
      px[static_cast<size_t>(j)] = sorted[3];
      inst.x = scmp_hull({px, py});
      inst.pt_x = px;
      inst.pt_y = py;
      inst.i = i;
      inst.j = j;
      break;
    }
    case AxiomId::separability_eai: {
      auto draw_point = [&]() {
        Point p(static_cast<size_t>(n));
        bool positive = false;
        while (!positive) {
          for (auto& c : p) {
            c = rng.rat(4);
            if (c > 0) positive = true;
          }
        }
        return p;
      };
      const Point px = draw_point();
      const Point py = draw_point();
      std::vector<int> m;
      for (int k = 0; k < n; ++k)
        if (rng.below(2) == 0) m.push_back(k);
      if (m.empty()) m.push_back(static_cast<int>(rng.below(static_cast<uint64_t>(n))));
      if (static_cast<int>(m.size()) == n) m.pop_back();
      std::vector<bool> in_m(static_cast<size_t>(n), false);
      for (int k : m) in_m[static_cast<size_t>(k)] = true;
      auto compose = [&](const Point& a, const Point& b) {
        Point z(static_cast<size_t>(n));
        for (int k = 0; k < n; ++k)
          z[static_cast<size_t>(k)] = in_m[static_cast<size_t>(k)] ? a[static_cast<size_t>(k)] : b[static_cast<size_t>(k)];
        return z;
      };
      try {
        inst.x = scmp_hull({compose(px, px), compose(py, px)});
        inst.x2 = scmp_hull({compose(px, py), compose(py, py)});
      } catch (const degenerate_problem_error&) {
        return std::nullopt;
      }
      inst.pt_x = px;
      inst.pt_y = py;
      inst.subset_m = std::move(m);
      break;
    }
    case AxiomId::continuity:
      return std::nullopt;
  }
  return inst;
}

}  // namespace

Verdict search_violation(const Rule& rule, AxiomId axiom, int budget, uint64_t seed,
                         const CheckOptions& options) {
  if (budget <= 0) throw bad_parameter_error("budget must be positive");
  long passes = 0, inconclusive = 0, skipped = 0, exhausted = 0;
  const int block = 32;
  for (int start = 0; start < budget; start += block) {
    const int count = std::min(block, budget - start);
    struct Slot {
      int kind = 3;  // 0 pass, 1 violation, 2 inconclusive, 3 skipped, 4 exhausted
      Verdict v;
    };
    const std::vector<Slot> slots = parallel_map<Slot>(
        static_cast<size_t>(count), [&](size_t offset) {
          Slot slot;
          const uint64_t index = static_cast<uint64_t>(start) + offset;
          try {
            const auto inst = make_search_instance(rule, axiom, index, seed, options);
            if (!inst) {
              slot.kind = 4;
              return slot;
            }
            slot.v = check_axiom(rule, axiom, *inst, options);
            slot.kind = slot.v.status == Status::violation ? 1
                        : slot.v.status == Status::pass    ? 0
                                                           : 2;
          } catch (const bad_instance_error&) {
            slot.kind = 3;
          } catch (const error&) {
            slot.kind = 3;
          }
          return slot;
        });
    for (int i = 0; i < count; ++i) {
      const Slot& slot = slots[static_cast<size_t>(i)];
      switch (slot.kind) {
        case 0: ++passes; break;
        case 1: {
          Verdict out = slot.v;
          out.note = "instance " + std::to_string(start + i) + ": " + out.note;
          return out;
        }
        case 2: ++inconclusive; break;
        case 3: ++skipped; break;
        case 4: ++exhausted; break;
      }
    }
    if (exhausted > 0) break;  // finite stream (continuity fixtures)
  }
  const std::string counts = "pass=" + std::to_string(passes) +
                             " inconclusive=" + std::to_string(inconclusive) +
                             " skipped=" + std::to_string(skipped);
  if (passes > 0) return verdict(Status::pass, counts);
  return verdict(Status::inconclusive, counts);
}

MatrixReport axiom_matrix(const std::vector<Rule>& rules, const std::vector<AxiomId>& axioms,
                          int budget, uint64_t seed, const CheckOptions& options) {
  if (rules.empty() || axioms.empty()) throw empty_input_error("matrix needs rules and axioms");
  MatrixReport report;
  for (const Rule& r : rules) report.rule_names.push_back(r.name());
  for (AxiomId a : axioms) report.axiom_names.push_back(axiom_name(a));
  for (const Rule& r : rules) {
    for (AxiomId a : axioms) {
      MatrixCell cell;
      cell.rule = r.name();
      cell.axiom = axiom_name(a);
      cell.verdict = search_violation(r, a, budget, seed, options);
      report.cells.push_back(std::move(cell));
    }
  }
  return report;
}

std::vector<Rule> independence_example_rules() {
  return {ks_rule(),          egalitarian_rule(), dictator_rule(), weak_pareto_set_rule(),
          leximin_rule(),     nash_rule(),        relative_max_rule()};
}

std::vector<AxiomId> characterizing_axioms() {
  return {AxiomId::intermediate_pareto, AxiomId::scale_invariance,
          AxiomId::anonymity,           AxiomId::contraction_eai,
          AxiomId::continuity,          AxiomId::equal_addition_eai,
          AxiomId::compromisability_eai};
}

}  // namespace relfair
