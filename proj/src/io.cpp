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

#include "relfair/io.hpp"

#include <fstream>

#include "relfair/errors.hpp"

namespace relfair {

Json rat_to_json(const Rat& q) { return format_rat(q); }

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(static_cast<long long>(j.get<long long>()));
  if (j.is_string()) return parse_rat(j.get<std::string>());
  throw parse_error("expected a rational as integer or \"p/q\" string, got " + j.dump());
}

Json point_to_json(const Point& p) {
  Json arr = Json::array();
  for (const Rat& c : p) arr.push_back(rat_to_json(c));
  return arr;
}

Point point_from_json(const Json& j) {
  if (!j.is_array()) throw parse_error("expected a coordinate array, got " + j.dump());
  Point p;
  for (const Json& c : j) p.push_back(rat_from_json(c));
  return p;
}

Json problem_to_json(const Problem& x) {
  Json j;
  j["n"] = x.dim();
  j["kind"] = "cmp";
  Json gens = Json::array();
  for (const Point& g : x.generators()) gens.push_back(point_to_json(g));
  j["generators"] = gens;
  return j;
}

Problem problem_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("generators"))
    throw parse_error("problem JSON needs a 'generators' array");
  std::vector<Point> pts;
  for (const Json& g : j.at("generators")) pts.push_back(point_from_json(g));
  const std::string kind = j.value("kind", "cmp");
  Problem out = kind == "scmp" ? scmp_hull(pts) : make_problem(pts);
  if (j.contains("n") && j.at("n").get<int>() != out.dim())
    throw parse_error("problem 'n' disagrees with generator width");
  if (kind != "cmp" && kind != "scmp") throw parse_error("problem kind must be cmp or scmp");
  return out;
}

Json weight_set_to_json(const WeightSet& w) {
  Json j;
  j["n"] = w.dim();
  Json vs = Json::array();
  for (const Point& v : w.vertices()) vs.push_back(point_to_json(v));
  j["vertices"] = vs;
  j["symmetrize"] = false;
  return j;
}

WeightSet weight_set_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vertices"))
    throw parse_error("weight set JSON needs a 'vertices' array");
  std::vector<Point> vs;
  for (const Json& v : j.at("vertices")) vs.push_back(point_from_json(v));
  WeightSet w = make_weight_set(vs);
  if (j.value("symmetrize", false)) w = symmetrize(w);
  if (j.contains("n") && j.at("n").get<int>() != w.dim())
    throw parse_error("weight set 'n' disagrees with vertex width");
  return w;
}

Json rule_to_json(const Rule& r) {
  Json j;
  j["kind"] = rule_kind_name(r.kind);
  if (r.weights) j["weights"] = weight_set_to_json(*r.weights);
  if (r.kind == RuleKind::mean_sd) j["theta"] = rat_to_json(r.theta);
  if (r.kind == RuleKind::mean_norm) {
    j["norm"] = norm_kind_name(r.norm.kind);
    j["theta"] = rat_to_json(r.norm.theta);
  }
  if (r.kind == RuleKind::minmax_blend) {
    j["alpha1"] = rat_to_json(r.alpha1);
    j["alpha2"] = rat_to_json(r.alpha2);
  }
  if (r.p != 1) j["p"] = rat_to_json(r.p);
  return j;
}

Rule rule_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind")) throw parse_error("rule JSON needs a 'kind'");
  const RuleKind kind = rule_kind_from_name(j.at("kind").get<std::string>());
  const Rat p = j.contains("p") ? rat_from_json(j.at("p")) : Rat(1);
  switch (kind) {
    case RuleKind::relative_fair: {
      if (!j.contains("weights")) throw parse_error("relative_fair needs a 'weights' object");
      return relative_fair_rule(weight_set_from_json(j.at("weights")), p);
    }
    case RuleKind::ks: return ks_rule(p);
    case RuleKind::nash: return nash_rule();
    case RuleKind::leximin: return leximin_rule(p);
    case RuleKind::relative_max: return relative_max_rule(p);
    case RuleKind::egalitarian: return egalitarian_rule();
    case RuleKind::dictator: return dictator_rule();
    case RuleKind::weak_pareto_set: return weak_pareto_set_rule();
    case RuleKind::mean_sd: {
      if (!j.contains("theta")) throw parse_error("mean_sd needs 'theta'");
      return mean_sd_rule(rat_from_json(j.at("theta")), p);
    }
    case RuleKind::mean_norm: {
      if (!j.contains("norm") || !j.contains("theta"))
        throw parse_error("mean_norm needs 'norm' and 'theta'");
      Norm norm;
      norm.kind = norm_kind_from_name(j.at("norm").get<std::string>());
      norm.theta = rat_from_json(j.at("theta"));
      return mean_norm_rule(norm, p);
    }
    case RuleKind::minmax_blend: {
      if (!j.contains("alpha1") || !j.contains("alpha2"))
        throw parse_error("minmax_blend needs 'alpha1' and 'alpha2'");
      return minmax_blend_rule(rat_from_json(j.at("alpha1")), rat_from_json(j.at("alpha2")), p);
    }
  }
  throw parse_error("unknown rule kind");
}

namespace {

Json sequence_to_json(const SequenceSpec& seq) {
  Json j;
  Json problems = Json::array();
  for (const Problem& p : seq.problems) problems.push_back(problem_to_json(p));
  j["problems"] = problems;
  Json points = Json::array();
  for (const Point& p : seq.points) points.push_back(point_to_json(p));
  j["points"] = points;
  if (seq.limit_problem) j["limit_problem"] = problem_to_json(*seq.limit_problem);
  j["limit_point"] = point_to_json(seq.limit_point);
  return j;
}

SequenceSpec sequence_from_json(const Json& j) {
  SequenceSpec seq;
  for (const Json& p : j.at("problems")) seq.problems.push_back(problem_from_json(p));
  for (const Json& p : j.at("points")) seq.points.push_back(point_from_json(p));
  if (j.contains("limit_problem")) seq.limit_problem = problem_from_json(j.at("limit_problem"));
  seq.limit_point = point_from_json(j.at("limit_point"));
  return seq;
}

}  // namespace

Json instance_to_json(const AxiomInstance& inst) {
  Json j;
  if (inst.x) j["X"] = problem_to_json(*inst.x);
  if (inst.x2) j["X2"] = problem_to_json(*inst.x2);
  if (inst.a) j["a"] = point_to_json(*inst.a);
  if (inst.pt_x) j["x"] = point_to_json(*inst.pt_x);
  if (inst.pt_y) j["y"] = point_to_json(*inst.pt_y);
  if (inst.alpha) j["alpha"] = rat_to_json(*inst.alpha);
  if (inst.subset_m) j["M"] = *inst.subset_m;
  if (inst.i) j["i"] = *inst.i;
  if (inst.j) j["j"] = *inst.j;
  if (inst.pi) j["pi"] = *inst.pi;
  if (inst.sequence) j["sequence"] = sequence_to_json(*inst.sequence);
  j["seed"] = inst.seed;
  return j;
}

AxiomInstance instance_from_json(const Json& j) {
  AxiomInstance inst;
  if (j.contains("X")) inst.x = problem_from_json(j.at("X"));
  if (j.contains("X2")) inst.x2 = problem_from_json(j.at("X2"));
  if (j.contains("a")) inst.a = point_from_json(j.at("a"));
  if (j.contains("x")) inst.pt_x = point_from_json(j.at("x"));
  if (j.contains("y")) inst.pt_y = point_from_json(j.at("y"));
  if (j.contains("alpha")) inst.alpha = rat_from_json(j.at("alpha"));
  if (j.contains("M")) inst.subset_m = j.at("M").get<std::vector<int>>();
  if (j.contains("i")) inst.i = j.at("i").get<int>();
  if (j.contains("j")) inst.j = j.at("j").get<int>();
  if (j.contains("pi")) inst.pi = j.at("pi").get<std::vector<int>>();
  if (j.contains("sequence")) inst.sequence = sequence_from_json(j.at("sequence"));
  inst.seed = j.value("seed", static_cast<uint64_t>(0));
  return inst;
}

Json verdict_to_json(const Verdict& v) {
  Json j;
  j["status"] = status_name(v.status);
  j["note"] = v.note;
  if (v.witness) j["witness"] = instance_to_json(*v.witness);
  return j;
}

Verdict verdict_from_json(const Json& j) {
  Verdict v;
  const std::string status = j.at("status").get<std::string>();
  if (status == "pass")
    v.status = Status::pass;
  else if (status == "violation")
    v.status = Status::violation;
  else if (status == "inconclusive")
    v.status = Status::inconclusive;
  else
    throw parse_error("unknown status '" + status + "'");
  v.note = j.value("note", "");
  if (j.contains("witness")) v.witness = instance_from_json(j.at("witness"));
  return v;
}

Json matrix_to_json(const MatrixReport& report) {
  Json j;
  j["rules"] = report.rule_names;
  j["axioms"] = report.axiom_names;
  Json cells = Json::array();
  for (const MatrixCell& cell : report.cells) {
    Json c;
    c["rule"] = cell.rule;
    c["axiom"] = cell.axiom;
    c["status"] = status_name(cell.verdict.status);
    c["note"] = cell.verdict.note;
    if (cell.verdict.witness) c["witness"] = instance_to_json(*cell.verdict.witness);
    cells.push_back(std::move(c));
  }
  j["cells"] = cells;
  return j;
}

Json oracle_comparison_to_json(const OracleComparison& cmp) {
  Json j;
  j["exact_value"] = cmp.exact_value.str();
  j["oracle_value"] = cmp.oracle_value.str();
  j["values_equal"] = cmp.values_equal;
  j["gap"] = rat_to_json(cmp.gap);
  j["all_argmax_chosen"] = cmp.all_argmax_chosen;
  j["lipschitz_bound"] = rat_to_json(cmp.lipschitz_bound);
  j["gap_within_bound"] = cmp.gap_within_bound;
  j["points_evaluated"] = cmp.points_evaluated;
  return j;
}

Json choice_set_to_json(const ChoiceSet& cs) {
  Json j;
  j["value"] = cs.value.str();
  j["mode"] = cs.mode == ChoiceMode::exact ? "exact" : "corner_witness";
  Json ws = Json::array();
  for (const Point& w : cs.witnesses) ws.push_back(point_to_json(w));
  j["witnesses"] = ws;
  Json pieces = Json::array();
  for (const HPolyhedron& piece : cs.pieces) {
    Json pj = Json::array();
    for (const LinConstraint& c : piece.constraints) {
      Json cj;
      cj["coeffs"] = point_to_json(c.coeffs);
      cj["sense"] = c.sense == Sense::le ? "<=" : (c.sense == Sense::ge ? ">=" : "=");
      cj["rhs"] = rat_to_json(c.rhs);
      pj.push_back(std::move(cj));
    }
    pieces.push_back(std::move(pj));
  }
  j["pieces"] = pieces;
  return j;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw parse_error("invalid JSON in '" + path + "': " + e.what());
  }
  return j;
}

Problem load_problem_file(const std::string& path) { return problem_from_json(load_json_file(path)); }

Rule load_rule_file(const std::string& path) { return rule_from_json(load_json_file(path)); }

std::string dump_report(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace relfair
