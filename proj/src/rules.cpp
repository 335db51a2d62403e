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

#include "relfair/rules.hpp"

#include <algorithm>

#include "relfair/errors.hpp"
#include "relfair/prng.hpp"

namespace relfair {

std::string rule_kind_name(RuleKind kind) {
  switch (kind) {
    case RuleKind::relative_fair: return "relative_fair";
    case RuleKind::ks: return "ks";
    case RuleKind::nash: return "nash";
    case RuleKind::leximin: return "leximin";
    case RuleKind::relative_max: return "relative_max";
    case RuleKind::egalitarian: return "egalitarian";
    case RuleKind::dictator: return "dictator";
    case RuleKind::weak_pareto_set: return "weak_pareto_set";
    case RuleKind::mean_sd: return "mean_sd";
    case RuleKind::mean_norm: return "mean_norm";
    case RuleKind::minmax_blend: return "minmax_blend";
  }
  return "?";
}

RuleKind rule_kind_from_name(const std::string& name) {
  for (RuleKind k :
       {RuleKind::relative_fair, RuleKind::ks, RuleKind::nash, RuleKind::leximin,
        RuleKind::relative_max, RuleKind::egalitarian, RuleKind::dictator,
        RuleKind::weak_pareto_set, RuleKind::mean_sd, RuleKind::mean_norm, RuleKind::minmax_blend})
    if (rule_kind_name(k) == name) return k;
  throw parse_error("unknown rule kind '" + name + "'");
}

int RuleValue::compare(const RuleValue& other) const {
  if (is_lex() || other.is_lex()) {
    if (!is_lex() || !other.is_lex())
      throw bad_parameter_error("cannot compare lexicographic and scalar welfare values");
    const auto& a = vec();
    const auto& b = other.vec();
    if (a.size() != b.size()) throw dimension_mismatch_error("lex values of unequal length");
    for (size_t i = 0; i < a.size(); ++i) {
      if (a[i] > b[i]) return 1;
      if (a[i] < b[i]) return -1;
    }
    return 0;
  }
  if (is_exact() && other.is_exact()) {
    if (rat() > other.rat()) return 1;
    if (rat() < other.rat()) return -1;
    return 0;
  }
  const Real a = is_exact() ? to_real(rat()) : real();
  const Real b = other.is_exact() ? to_real(other.rat()) : other.real();
  const Real diff = a - b;
  if (diff > real_tol()) return 1;
  if (diff < -real_tol()) return -1;
  return 0;
}

bool RuleValue::tolerance_tie(const RuleValue& other) const {
  if (is_lex() || other.is_lex()) return false;
  if (is_exact() && other.is_exact()) return false;
  const Real a = is_exact() ? to_real(rat()) : real();
  const Real b = other.is_exact() ? to_real(other.rat()) : other.real();
  const Real diff = a < b ? Real(b - a) : Real(a - b);
  return diff != 0 && diff <= real_tol();
}

std::string RuleValue::str() const {
  if (is_exact()) return format_rat(rat());
  if (is_approx()) return real().str(24);
  std::string out = "[";
  for (size_t i = 0; i < vec().size(); ++i) {
    if (i) out += ",";
    out += format_rat(vec()[i]);
  }
  return out + "]";
}

bool Rule::flagged_non_monotone() const { return kind == RuleKind::mean_sd && theta > 1; }

std::string Rule::name() const {
  std::string out = rule_kind_name(kind);
  switch (kind) {
    case RuleKind::relative_fair:
      out += "(" + std::to_string(weights->vertices().size()) + " vertices)";
      break;
    case RuleKind::mean_sd:
      out += "(theta=" + format_rat(theta) + (flagged_non_monotone() ? ",non-monotone)" : ")");
      break;
    case RuleKind::mean_norm:
      out += "(" + norm_kind_name(norm.kind) + ",theta=" + format_rat(norm.theta) + ")";
      break;
    case RuleKind::minmax_blend:
      out += "(" + format_rat(alpha1) + "," + format_rat(alpha2) + ")";
      break;
    default: break;
  }
  if (p != 1) out += "[p=" + format_rat(p) + "]";
  return out;
}

bool Rule::exact_valued() const {
  if (p != 0 && p != 1) return false;
  if (kind == RuleKind::mean_sd) return false;
  if (kind == RuleKind::mean_norm) return norm.kind != NormKind::euclidean;
  return true;
}

bool Rule::strictly_monotone() const {
  switch (kind) {
    case RuleKind::mean_sd:
    case RuleKind::mean_norm:
    case RuleKind::weak_pareto_set:
      return false;
    default:
      return true;
  }
}

bool Rule::piecewise_linear() const {
  if (p != 0 && p != 1) return false;
  switch (kind) {
    case RuleKind::relative_fair:
    case RuleKind::ks:
    case RuleKind::egalitarian:
    case RuleKind::dictator:
    case RuleKind::relative_max:
      return true;
    default:
      return false;
  }
}

namespace {

void check_p(const Rat& p) {
  if (p < 0 || p > 1) throw bad_parameter_error("responsibility exponent must lie in [0,1]");
}

}  // namespace

Rule relative_fair_rule(WeightSet w, Rat p) {
  check_p(p);
  if (!w.is_symmetric())
    throw bad_parameter_error("relative fair rules need a permutation-closed weight set");
  Rule r;
  r.kind = RuleKind::relative_fair;
  r.weights = std::move(w);
  r.p = std::move(p);
  return r;
}

Rule ks_rule(Rat p) {
  check_p(p);
  Rule r;
  r.kind = RuleKind::ks;
  r.p = std::move(p);
  return r;
}

Rule nash_rule() {
  Rule r;
  r.kind = RuleKind::nash;
  return r;
}

Rule leximin_rule(Rat p) {
  check_p(p);
  Rule r;
  r.kind = RuleKind::leximin;
  r.p = std::move(p);
  return r;
}

Rule relative_max_rule(Rat p) {
  check_p(p);
  Rule r;
  r.kind = RuleKind::relative_max;
  r.p = std::move(p);
  return r;
}

Rule egalitarian_rule() {
  Rule r;
  r.kind = RuleKind::egalitarian;
  return r;
}

Rule dictator_rule() {
  Rule r;
  r.kind = RuleKind::dictator;
  return r;
}

Rule weak_pareto_set_rule() {
  Rule r;
  r.kind = RuleKind::weak_pareto_set;
  return r;
}

Rule mean_sd_rule(Rat theta, Rat p) {
  check_p(p);
  if (theta < 0) throw bad_parameter_error("mean_sd scale must be nonnegative");
  Rule r;
  r.kind = RuleKind::mean_sd;
  r.theta = std::move(theta);
  r.p = std::move(p);
  return r;
}

Rule mean_norm_rule(Norm norm, Rat p) {
  check_p(p);
  if (norm.theta < 0) throw bad_norm_error("norm scale must be nonnegative");
  Rule r;
  r.kind = RuleKind::mean_norm;
  r.norm = std::move(norm);
  r.p = std::move(p);
  return r;
}

Rule minmax_blend_rule(Rat alpha1, Rat alpha2, Rat p) {
  check_p(p);
  if (alpha1 <= 0 || alpha2 <= 0 || alpha1 == alpha2)
    throw bad_parameter_error("blend coefficients must be positive and distinct");
  Rule r;
  r.kind = RuleKind::minmax_blend;
  r.alpha1 = std::move(alpha1);
  r.alpha2 = std::move(alpha2);
  r.p = std::move(p);
  return r;
}

namespace {

// Everything solve/evaluate needs about the problem context.
struct Context {
  const Problem* x = nullptr;
  Point abilities;        // b(X)
  Point divisor;          // b(X)^p for p in {0,1}, else empty
  std::vector<Real> divisor_real;  // b(X)^p otherwise
  bool exact_profile = true;
};

Context make_context(const Rule& rule, const Problem& x) {
  Context ctx;
  ctx.x = &x;
  ctx.abilities = ideal_point(x);
  if (rule.p == 1) {
    ctx.divisor = ctx.abilities;
  } else if (rule.p == 0) {
    ctx.divisor = constant_point(x.dim(), Rat(1));
  } else {
    ctx.exact_profile = false;
    const Real pw = to_real(rule.p);
    for (const Rat& b : ctx.abilities)
      ctx.divisor_real.push_back(boost::multiprecision::pow(to_real(b), pw));
  }
  return ctx;
}

Point rat_profile(const Context& ctx, const Point& pt) {
  Point out(pt.size());
  for (size_t i = 0; i < pt.size(); ++i) out[i] = pt[i] / ctx.divisor[i];
  return out;
}

std::vector<Real> real_profile(const Context& ctx, const Point& pt) {
  std::vector<Real> out(pt.size());
  for (size_t i = 0; i < pt.size(); ++i) out[i] = to_real(pt[i]) / ctx.divisor_real[i];
  return out;
}

RuleValue scalar_welfare_rat(const Rule& rule, const Point& y) {
  const int n = static_cast<int>(y.size());
  switch (rule.kind) {
    case RuleKind::relative_fair:
      return RuleValue::exact(min_dot(*rule.weights, y));
    case RuleKind::ks:
    case RuleKind::egalitarian:
      return RuleValue::exact(*std::min_element(y.begin(), y.end()));
    case RuleKind::relative_max:
      return RuleValue::exact(*std::max_element(y.begin(), y.end()));
    case RuleKind::dictator:
      return RuleValue::exact(y[0]);
    case RuleKind::nash: {
      Rat prod = 1;
      for (const Rat& c : y) prod *= c;
      return RuleValue::exact(prod);
    }
    case RuleKind::minmax_blend: {
      const Rat lo = *std::min_element(y.begin(), y.end());
      const Rat hi = *std::max_element(y.begin(), y.end());
      return RuleValue::exact(rule.alpha1 * lo + rule.alpha2 * hi);
    }
    case RuleKind::leximin: {
      Point sorted = y;
      std::sort(sorted.begin(), sorted.end());
      return RuleValue::lex(std::move(sorted));
    }
    case RuleKind::mean_sd: {
      Rat mean = 0;
      for (const Rat& c : y) mean += c;
      mean /= n;
      Rat var = 0;
      for (const Rat& c : y) var += (c - mean) * (c - mean);
      var /= n;
      if (auto root = exact_sqrt(var)) return RuleValue::exact(mean - rule.theta * *root);
      return RuleValue::approx(to_real(mean) -
                               to_real(rule.theta) * boost::multiprecision::sqrt(to_real(var)));
    }
    case RuleKind::mean_norm: {
      Rat mean = 0;
      for (const Rat& c : y) mean += c;
      mean /= n;
      switch (rule.norm.kind) {
        case NormKind::sup: {
          Rat dev = 0;
          for (const Rat& c : y) {
            Rat d = c - mean;
            if (d < 0) d = -d;
            dev = std::max(dev, d);
          }
          return RuleValue::exact(mean - rule.norm.theta * dev);
        }
        case NormKind::one: {
          Rat dev = 0;
          for (const Rat& c : y) dev += (c >= mean) ? Rat(c - mean) : Rat(mean - c);
          return RuleValue::exact(mean - rule.norm.theta * dev);
        }
        case NormKind::euclidean: {
          Rat sq = 0;
          for (const Rat& c : y) sq += (c - mean) * (c - mean);
          if (auto root = exact_sqrt(sq)) return RuleValue::exact(mean - rule.norm.theta * *root);
          return RuleValue::approx(to_real(mean) - to_real(rule.norm.theta) *
                                                       boost::multiprecision::sqrt(to_real(sq)));
        }
      }
      throw bad_norm_error();
    }
    case RuleKind::weak_pareto_set:
      throw bad_parameter_error("the weak-Pareto-set rule has no welfare function");
  }
  throw bad_parameter_error("unknown rule kind");
}

RuleValue scalar_welfare_real(const Rule& rule, const std::vector<Real>& y) {
  const int n = static_cast<int>(y.size());
  auto mean_of = [&]() {
    Real m = 0;
    for (const Real& c : y) m += c;
    return Real(m / n);
  };
  switch (rule.kind) {
    case RuleKind::relative_fair: {
      bool first = true;
      Real best = 0;
      for (const Point& w : rule.weights->vertices()) {
        Real dot = 0;
        for (size_t i = 0; i < y.size(); ++i) dot += to_real(w[i]) * y[i];
        if (first || dot < best) {
          best = dot;
          first = false;
        }
      }
      return RuleValue::approx(best);
    }
    case RuleKind::ks:
    case RuleKind::egalitarian:
      return RuleValue::approx(*std::min_element(y.begin(), y.end()));
    case RuleKind::relative_max:
      return RuleValue::approx(*std::max_element(y.begin(), y.end()));
    case RuleKind::dictator:
      return RuleValue::approx(y[0]);
    case RuleKind::minmax_blend:
      return RuleValue::approx(to_real(rule.alpha1) * *std::min_element(y.begin(), y.end()) +
                               to_real(rule.alpha2) * *std::max_element(y.begin(), y.end()));
    case RuleKind::mean_sd: {
      const Real mean = mean_of();
      Real var = 0;
      for (const Real& c : y) var += (c - mean) * (c - mean);
      var /= n;
      return RuleValue::approx(mean - to_real(rule.theta) * boost::multiprecision::sqrt(var));
    }
    case RuleKind::mean_norm: {
      const Real mean = mean_of();
      Real dev = 0;
      switch (rule.norm.kind) {
        case NormKind::sup:
          for (const Real& c : y) dev = std::max(dev, Real(boost::multiprecision::abs(c - mean)));
          break;
        case NormKind::one:
          for (const Real& c : y) dev += boost::multiprecision::abs(c - mean);
          break;
        case NormKind::euclidean: {
          Real sq = 0;
          for (const Real& c : y) sq += (c - mean) * (c - mean);
          dev = boost::multiprecision::sqrt(sq);
          break;
        }
      }
      return RuleValue::approx(mean - to_real(rule.norm.theta) * dev);
    }
    case RuleKind::leximin:
      throw precision_unavailable_error("leximin needs an exact profile; use p in {0,1}");
    default:
      throw bad_parameter_error("rule has no real-profile welfare");
  }
}

bool uses_normalization(RuleKind kind) {
  switch (kind) {
    case RuleKind::nash:
    case RuleKind::egalitarian:
    case RuleKind::dictator:
      return false;
    default:
      return true;
  }
}

RuleValue evaluate_in_context(const Rule& rule, const Context& ctx, const Point& pt) {
  if (rule.kind == RuleKind::weak_pareto_set)
    return RuleValue::exact(is_weak_pareto(*ctx.x, pt) ? Rat(1) : Rat(0));
  if (!uses_normalization(rule.kind)) return scalar_welfare_rat(rule, pt);
  if (ctx.exact_profile) return scalar_welfare_rat(rule, rat_profile(ctx, pt));
  return scalar_welfare_real(rule, real_profile(ctx, pt));
}

Point ks_point(const Context& ctx, const Rat& lambda) {
  Point q(ctx.divisor.size());
  for (size_t i = 0; i < q.size(); ++i) q[i] = lambda * ctx.divisor[i];
  return q;
}

LinConstraint ge_cut(std::vector<Rat> coeffs, Rat rhs) {
  LinConstraint c;
  c.coeffs = std::move(coeffs);
  c.sense = Sense::ge;
  c.rhs = std::move(rhs);
  return c;
}

std::vector<HPolyhedron> build_pieces(const Rule& rule, const Context& ctx, const Rat& value,
                                      const std::vector<Point>& witnesses) {
  const int n = static_cast<int>(ctx.divisor.size());
  std::vector<HPolyhedron> pieces;
  for (const Point& g : witnesses) {
    switch (rule.kind) {
      case RuleKind::relative_fair: {
        HPolyhedron piece = box_polyhedron(g);
        for (const Point& w : rule.weights->vertices()) {
          std::vector<Rat> coeffs(static_cast<size_t>(n));
          for (int i = 0; i < n; ++i)
            coeffs[static_cast<size_t>(i)] = w[static_cast<size_t>(i)] / ctx.divisor[static_cast<size_t>(i)];
          piece.constraints.push_back(ge_cut(std::move(coeffs), value));
        }
        pieces.push_back(std::move(piece));
        break;
      }
      case RuleKind::egalitarian: {
        HPolyhedron piece = box_polyhedron(g);
        for (int i = 0; i < n; ++i) {
          std::vector<Rat> coeffs(static_cast<size_t>(n), Rat(0));
          coeffs[static_cast<size_t>(i)] = 1;
          piece.constraints.push_back(ge_cut(std::move(coeffs), value));
        }
        pieces.push_back(std::move(piece));
        break;
      }
      case RuleKind::dictator: {
        HPolyhedron piece = box_polyhedron(g);
        std::vector<Rat> coeffs(static_cast<size_t>(n), Rat(0));
        coeffs[0] = 1;
        piece.constraints.push_back(ge_cut(std::move(coeffs), value));
        pieces.push_back(std::move(piece));
        break;
      }
      case RuleKind::relative_max: {
        for (int i = 0; i < n; ++i) {
          const Rat cut = value * ctx.divisor[static_cast<size_t>(i)];
          if (g[static_cast<size_t>(i)] < cut) continue;  // empty face
          HPolyhedron piece = box_polyhedron(g);
          std::vector<Rat> coeffs(static_cast<size_t>(n), Rat(0));
          coeffs[static_cast<size_t>(i)] = 1;
          piece.constraints.push_back(ge_cut(std::move(coeffs), cut));
          pieces.push_back(std::move(piece));
        }
        break;
      }
      default:
        break;
    }
  }
  return pieces;
}

}  // namespace

RuleValue welfare_value(const Rule& rule, const Point& profile) {
  if (profile.empty()) throw empty_input_error("empty profile");
  return scalar_welfare_rat(rule, profile);
}

RuleValue evaluate(const Rule& rule, const Problem& x, const Point& pt) {
  if (!contains(x, pt)) throw point_not_in_problem_error();
  if (rule.kind == RuleKind::relative_fair && rule.weights->dim() != x.dim())
    throw dimension_mismatch_error("weight set dimension differs from problem");
  return evaluate_in_context(rule, make_context(rule, x), pt);
}

ChoiceSet solve(const Rule& rule, const Problem& x) {
  if (rule.kind == RuleKind::relative_fair && rule.weights->dim() != x.dim())
    throw dimension_mismatch_error("weight set dimension differs from problem");
  const Context ctx = make_context(rule, x);
  ChoiceSet cs;

  if (rule.kind == RuleKind::ks) {
    if (!ctx.exact_profile)
      throw precision_unavailable_error("the KS point is irrational for fractional p");
    bool first = true;
    Rat lambda = 0;
    for (const Point& g : x.generators()) {
      const Point prof = rat_profile(ctx, g);
      const Rat m = *std::min_element(prof.begin(), prof.end());
      if (first || m > lambda) {
        lambda = m;
        first = false;
      }
    }
    const Point q = ks_point(ctx, lambda);
    cs.value = RuleValue::exact(lambda);
    cs.witnesses = {q};
    cs.pieces = {point_polyhedron(q)};
    cs.mode = ChoiceMode::exact;
    return cs;
  }

  if (rule.kind == RuleKind::weak_pareto_set) {
    cs.value = RuleValue::exact(Rat(1));
    cs.witnesses = x.generators();
    cs.mode = ChoiceMode::corner_witness;
    return cs;
  }

  std::vector<RuleValue> values;
  values.reserve(x.generators().size());
  for (const Point& g : x.generators()) values.push_back(evaluate_in_context(rule, ctx, g));
  size_t best = 0;
  for (size_t i = 1; i < values.size(); ++i)
    if (values[i].compare(values[best]) > 0) best = i;
  cs.value = values[best];
  for (size_t i = 0; i < values.size(); ++i)
    if (values[i].compare(cs.value) == 0) cs.witnesses.push_back(x.generators()[i]);
  std::sort(cs.witnesses.begin(), cs.witnesses.end(), lex_less);

  if (rule.piecewise_linear() && cs.value.is_exact()) {
    cs.pieces = build_pieces(rule, ctx, cs.value.rat(), cs.witnesses);
    cs.mode = ChoiceMode::exact;
  } else {
    cs.mode = ChoiceMode::corner_witness;
  }
  return cs;
}

bool in_choice_set_with(const Rule& rule, const Problem& x, const ChoiceSet& cs, const Point& pt) {
  if (static_cast<int>(pt.size()) != x.dim()) return false;
  if (!contains(x, pt)) return false;
  if (rule.kind == RuleKind::ks) return pt == cs.witnesses.front();
  if (rule.kind == RuleKind::weak_pareto_set) return is_weak_pareto(x, pt);
  const RuleValue v = evaluate_in_context(rule, make_context(rule, x), pt);
  return v.compare(cs.value) == 0;
}

bool in_choice_set(const Rule& rule, const Problem& x, const Point& pt) {
  if (static_cast<int>(pt.size()) != x.dim()) return false;
  return in_choice_set_with(rule, x, solve(rule, x), pt);
}

std::optional<bool> membership_certain(const Rule& rule, const Problem& x, const ChoiceSet& cs,
                                       const Point& pt) {
  if (static_cast<int>(pt.size()) != x.dim()) return false;
  if (!contains(x, pt)) return false;
  if (rule.kind == RuleKind::ks) return pt == cs.witnesses.front();
  if (rule.kind == RuleKind::weak_pareto_set) return is_weak_pareto(x, pt);
  const RuleValue v = evaluate_in_context(rule, make_context(rule, x), pt);
  if (v.tolerance_tie(cs.value)) return std::nullopt;
  return v.compare(cs.value) == 0;
}

std::optional<bool> choice_set_intersects(const Rule& rule, const Problem& x, const ChoiceSet& cs,
                                          const Problem& sub) {
  if (rule.kind == RuleKind::ks) return contains(sub, cs.witnesses.front());
  if (rule.kind == RuleKind::weak_pareto_set) {
    // Any generator of sub lies in sub; if one is weakly Pareto in x we are
    // done, but a miss proves nothing.
    for (const Point& g : sub.generators())
      if (is_weak_pareto(x, g)) return true;
    return std::nullopt;
  }
  if (cs.mode == ChoiceMode::exact) {
    // Each argmax piece is a box cut by a nondecreasing objective, so a piece
    // meets [0, g'] exactly when the meet of the two corners is still optimal.
    const Context ctx = make_context(rule, x);
    for (const Point& w : cs.witnesses) {
      for (const Point& g : sub.generators()) {
        Point meet(w.size());
        for (size_t i = 0; i < w.size(); ++i) meet[i] = std::min(w[i], g[i]);
        if (evaluate_in_context(rule, ctx, meet).compare(cs.value) == 0) return true;
      }
    }
    return false;
  }
  for (const Point& w : cs.witnesses)
    if (contains(sub, w)) return true;
  return std::nullopt;
}

std::optional<bool> exists_choice_above(const Rule& rule, const Problem& x, const ChoiceSet& cs,
                                        const Point& floor_pt) {
  for (const Point& w : cs.witnesses)
    if (geq(w, floor_pt)) return true;
  if (rule.kind == RuleKind::ks) return false;
  if (rule.kind == RuleKind::weak_pareto_set) {
    // floor_pt is feasible in the callers' usage, so some generator covers
    // it, and generators are weakly Pareto.
    return contains(x, floor_pt);
  }
  if (cs.mode == ChoiceMode::exact) {
    // z in piece(g) with z >= floor implies g >= floor and g optimal, so the
    // witness scan above was already exhaustive.
    return false;
  }
  if (in_choice_set_with(rule, x, cs, floor_pt)) return true;
  return std::nullopt;
}

Rat equal_equivalent(const Rule& rule, const Point& x, const Rat& tol, int max_iter) {
  if (x.empty()) throw empty_input_error("empty point");
  if (tol <= 0) throw bad_parameter_error("tolerance must be positive");
  bool positive = false;
  for (const Rat& c : x) {
    if (c < 0) throw bad_parameter_error("point must be nonnegative");
    if (c > 0) positive = true;
  }
  if (!positive) throw bad_parameter_error("point must be nonzero");
  const int n = static_cast<int>(x.size());
  auto member = [&](const Rat& alpha) {
    const Point level = constant_point(n, alpha);
    const Problem p = scmp_hull({x, level});
    return in_choice_set(rule, p, level);
  };
  Rat lo = *std::min_element(x.begin(), x.end());
  Rat hi = *std::max_element(x.begin(), x.end());
  if (member(lo)) return lo;
  if (!member(hi)) throw nonconvergence_error("equal-equivalent bracket failed at the top");
  int iter = 0;
  while (hi - lo > 2 * tol) {
    if (++iter > max_iter) throw nonconvergence_error();
    const Rat mid = (lo + hi) / 2;
    if (member(mid))
      hi = mid;
    else
      lo = mid;
  }
  return (lo + hi) / 2;
}

std::vector<PairRelation> revealed_relation(const Rule& rule,
                                            const std::vector<std::pair<Point, Point>>& pairs) {
  std::vector<PairRelation> out;
  out.reserve(pairs.size());
  for (const auto& [x, y] : pairs) {
    for (const Point* pt : {&x, &y}) {
      bool positive = false;
      for (const Rat& c : *pt) {
        if (c < 0) throw bad_parameter_error("points must be nonnegative");
        if (c > 0) positive = true;
      }
      if (!positive) throw bad_parameter_error("points must be nonzero");
    }
    const Problem p = scmp_hull({x, y});
    const ChoiceSet cs = solve(rule, p);
    PairRelation rel;
    rel.x_r_y = in_choice_set_with(rule, p, cs, x);
    rel.y_r_x = in_choice_set_with(rule, p, cs, y);
    out.push_back(rel);
  }
  return out;
}

OrderingReport check_ordering_properties(const Rule& rule, int n, int samples, uint64_t seed) {
  OrderingReport report;
  auto note = [&](const std::string& what) {
    if (report.first_counterexample.empty()) report.first_counterexample = what;
  };
  auto relate = [&](const Point& a, const Point& b) {
    return revealed_relation(rule, {{a, b}}).front();
  };
  for (int s = 0; s < samples; ++s) {
    Prng rng = Prng::derive(seed, /*stream=*/17, static_cast<uint64_t>(s));
    auto sample_point = [&]() {
      Point p(static_cast<size_t>(n));
      for (;;) {
        bool positive = false;
        for (auto& c : p) {
          c = rng.rat(4);
          if (c > 0) positive = true;
        }
        if (positive) return p;
      }
    };
    const Point x = sample_point();
    const Point y = sample_point();
    const Point z = sample_point();

    const PairRelation xy = relate(x, y);
    const PairRelation yz = relate(y, z);
    const PairRelation xz = relate(x, z);

    report.completeness_checked += 3;
    for (const auto& [rel, a, b] :
         {std::tuple{xy, &x, &y}, std::tuple{yz, &y, &z}, std::tuple{xz, &x, &z}}) {
      if (!rel.x_r_y && !rel.y_r_x) {
        ++report.completeness_violations;
        note("completeness fails on " + format_point(*a) + " vs " + format_point(*b));
      }
    }

    // All six ordered triples over {x, y, z}.
    const bool r[3][3] = {
        {true, xy.x_r_y, xz.x_r_y}, {xy.y_r_x, true, yz.x_r_y}, {xz.y_r_x, yz.y_r_x, true}};
    const Point* pts[3] = {&x, &y, &z};
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        for (int c = 0; c < 3; ++c) {
          if (a == b || b == c || a == c) continue;
          ++report.transitivity_checked;
          if (r[a][b] && r[b][c] && !r[a][c]) {
            ++report.transitivity_violations;
            note("transitivity fails on " + format_point(*pts[a]) + ", " + format_point(*pts[b]) +
                 ", " + format_point(*pts[c]));
          }
        }

    // Weak monotonicity against a shrunken copy of x.
    Point lower(x.size());
    bool equal = true, strict = true;
    for (size_t i = 0; i < x.size(); ++i) {
      lower[i] = x[i] * Rat(static_cast<int>(rng.below(9)), 8);
      if (lower[i] != x[i]) equal = false;
      if (lower[i] >= x[i]) strict = false;
    }
    bool lower_positive = false;
    for (const Rat& c : lower)
      if (c > 0) lower_positive = true;
    if (!equal && lower_positive) {
      ++report.monotonicity_checked;
      const PairRelation rel = relate(x, lower);
      if (strict ? !(rel.x_r_y && !rel.y_r_x) : !rel.x_r_y) {
        ++report.monotonicity_violations;
        note("weak monotonicity fails on " + format_point(x) + " vs " + format_point(lower));
      }
    }

    // Symmetry: x I x^pi.
    const Permutation pi(rng.permutation(n));
    if (!pi.is_identity()) {
      ++report.symmetry_checked;
      const PairRelation rel = relate(x, pi.apply(x));
      if (!rel.x_r_y || !rel.y_r_x) {
        ++report.symmetry_violations;
        note("symmetry fails on " + format_point(x));
      }
    }

    // Homogeneity: x R y <=> ax R ay.
    const Rat factors[] = {Rat(1, 2), Rat(2), Rat(3)};
    const Rat& f = factors[rng.below(3)];
    ++report.homogeneity_checked;
    const PairRelation scaled = relate(scale_point(x, f), scale_point(y, f));
    if (scaled.x_r_y != xy.x_r_y || scaled.y_r_x != xy.y_r_x) {
      ++report.homogeneity_violations;
      note("homogeneity fails on " + format_point(x) + " vs " + format_point(y) + " at factor " +
           format_rat(f));
    }
  }
  return report;
}

}  // namespace relfair
