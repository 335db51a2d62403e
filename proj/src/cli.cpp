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

#include "relfair/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "relfair/errors.hpp"
#include "relfair/io.hpp"
#include "relfair/svg.hpp"

namespace relfair {

namespace {

Point parse_point_text(const std::string& text) {
  Point p;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) p.push_back(parse_rat(part));
  if (p.empty()) throw parse_error("empty point literal");
  return p;
}

int emit(const RunConfig& config, const std::string& body, std::ostream& os) {
  if (config.out.empty()) {
    os << body;
    return 0;
  }
  std::ofstream file(config.out, std::ios::binary);
  if (!file) throw parse_error("cannot write '" + config.out + "'");
  file << body;
  return 0;
}

std::string describe_choice_set(const ChoiceSet& cs) {
  std::ostringstream out;
  out << "value: " << cs.value.str() << "\n";
  out << "mode: " << (cs.mode == ChoiceMode::exact ? "exact" : "corner_witness") << "\n";
  out << "witnesses:";
  for (const Point& w : cs.witnesses) out << " " << format_point(w);
  out << "\n";
  for (size_t k = 0; k < cs.pieces.size(); ++k) {
    out << "piece " << k + 1 << ":";
    for (const LinConstraint& c : cs.pieces[k].constraints) {
      out << " [";
      for (size_t i = 0; i < c.coeffs.size(); ++i) {
        if (i) out << ",";
        out << format_rat(c.coeffs[i]);
      }
      out << (c.sense == Sense::le ? "]<=" : (c.sense == Sense::ge ? "]>=" : "]="))
          << format_rat(c.rhs);
    }
    out << "\n";
  }
  return out.str();
}

int exit_code_for(const std::vector<Verdict>& verdicts) {
  bool any_violation = false, any_inconclusive = false;
  for (const Verdict& v : verdicts) {
    any_violation |= v.status == Status::violation;
    any_inconclusive |= v.status == Status::inconclusive;
  }
  if (any_violation) return 1;
  if (any_inconclusive) return 3;
  return 0;
}

}  // namespace

int cmd_solve(const std::string& problem_path, const std::string& rule_path,
              const RunConfig& config, std::ostream& os) {
  const Problem x = load_problem_file(problem_path);
  const Rule rule = load_rule_file(rule_path);
  const ChoiceSet cs = solve(rule, x);
  if (config.format == "json") {
    Json j = choice_set_to_json(cs);
    j["rule"] = rule_to_json(rule);
    j["problem"] = problem_to_json(x);
    return emit(config, dump_report(j), os);
  }
  return emit(config, "rule: " + rule.name() + "\n" + describe_choice_set(cs), os);
}

int cmd_axioms(const std::string& rule_path, const std::vector<std::string>& axioms,
               const RunConfig& config, std::ostream& os) {
  const Rule rule = load_rule_file(rule_path);
  std::vector<AxiomId> ids;
  if (axioms.empty()) {
    ids = characterizing_axioms();
  } else {
    for (const std::string& name : axioms) ids.push_back(axiom_from_name(name));
  }
  std::vector<Verdict> verdicts;
  Json cells = Json::array();
  std::ostringstream text;
  for (AxiomId id : ids) {
    const Verdict v = search_violation(rule, id, config.budget, config.seed);
    verdicts.push_back(v);
    text << axiom_name(id) << ": " << status_name(v.status) << " (" << v.note << ")\n";
    Json cell;
    cell["rule"] = rule.name();
    cell["axiom"] = axiom_name(id);
    cell["status"] = status_name(v.status);
    cell["note"] = v.note;
    if (v.witness) cell["witness"] = instance_to_json(*v.witness);
    cells.push_back(std::move(cell));
  }
  if (config.format == "json") {
    emit(config, dump_report(cells), os);
  } else {
    emit(config, text.str(), os);
  }
  return exit_code_for(verdicts);
}

int cmd_matrix(const RunConfig& config, std::ostream& os) {
  const MatrixReport report =
      axiom_matrix(independence_example_rules(), characterizing_axioms(), config.budget, config.seed);
  if (config.format == "json") {
    emit(config, dump_report(matrix_to_json(report)), os);
    return 0;
  }
  // Text: one row per rule with one-letter cells (P/V/I).
  std::ostringstream text;
  size_t width = 4;
  for (const std::string& r : report.rule_names) width = std::max(width, r.size() + 1);
  text << std::string(width, ' ');
  for (size_t a = 0; a < report.axiom_names.size(); ++a) text << " A" << a + 1;
  text << "\n";
  for (size_t r = 0; r < report.rule_names.size(); ++r) {
    std::string row = report.rule_names[r];
    row.resize(width, ' ');
    text << row;
    for (size_t a = 0; a < report.axiom_names.size(); ++a) {
      const Verdict& v = report.cells[r * report.axiom_names.size() + a].verdict;
      const char c = v.status == Status::pass ? 'P' : (v.status == Status::violation ? 'V' : 'I');
      text << "  " << c;
    }
    text << "\n";
  }
  for (size_t a = 0; a < report.axiom_names.size(); ++a)
    text << "A" << a + 1 << " = " << report.axiom_names[a] << "\n";
  emit(config, text.str(), os);
  return 0;
}

int cmd_oracle(const std::string& problem_path, const std::string& rule_path,
               const RunConfig& config, std::ostream& os) {
  const Problem x = load_problem_file(problem_path);
  const Rule rule = load_rule_file(rule_path);
  GridSpec grid;
  grid.spacing = parse_rat(config.grid);
  const OracleComparison cmp = compare_oracle(rule, x, grid);
  if (config.format == "json") {
    emit(config, dump_report(oracle_comparison_to_json(cmp)), os);
  } else {
    emit(config, cmp.summary() + "\n", os);
  }
  return (cmp.values_equal && cmp.all_argmax_chosen) ? 0 : 1;
}

int cmd_eqeq(const std::string& rule_path, const std::string& point_text, const RunConfig& config,
             std::ostream& os) {
  const Rule rule = load_rule_file(rule_path);
  const Point p = parse_point_text(point_text);
  const Rat tol = parse_rat(config.tol);
  const Rat value = equal_equivalent(rule, p, tol);
  if (config.format == "json") {
    Json j;
    j["rule"] = rule_to_json(rule);
    j["point"] = point_to_json(p);
    j["tol"] = rat_to_json(tol);
    j["equal_equivalent"] = rat_to_json(value);
    return emit(config, dump_report(j), os);
  }
  return emit(config, format_rat(value) + "\n", os);
}

int cmd_plot(const std::string& problem_path, const std::string& rule_path,
             const RunConfig& config, std::ostream& os) {
  const Problem x = load_problem_file(problem_path);
  const Rule rule = load_rule_file(rule_path);
  const std::string svg = render_svg(x, rule);
  return emit(config, svg, os);
}

int run_cli(int argc, const char* const* argv, std::ostream& os, std::ostream& err) {
  CLI::App app{"relfair: exact solver and axiom workbench for ability-normalized choice rules"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  RunConfig config;
  app.add_option("--seed", config.seed, "random seed");
  app.add_option("--budget", config.budget, "instance budget for searches");
  app.add_option("--grid", config.grid, "oracle grid spacing, as a rational");
  app.add_option("--tol", config.tol, "bisection tolerance, as a rational");
  app.add_option("--format", config.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", config.out, "output file (default stdout)");

  std::string problem_path, rule_path, point_text;
  std::vector<std::string> axiom_names_arg;

  CLI::App* solve_cmd = app.add_subcommand("solve", "compute the full choice set");
  solve_cmd->add_option("problem", problem_path, "problem JSON file")->required();
  solve_cmd->add_option("rule", rule_path, "rule JSON file")->required();

  CLI::App* axioms_cmd = app.add_subcommand("axioms", "search axioms for violations");
  axioms_cmd->add_option("rule", rule_path, "rule JSON file")->required();
  axioms_cmd->add_option("--axiom", axiom_names_arg, "axiom names (default: the seven)")
      ->delimiter(',');

  CLI::App* matrix_cmd = app.add_subcommand("matrix", "independence matrix of the example rules");

  CLI::App* oracle_cmd = app.add_subcommand("oracle", "grid-oracle cross check");
  oracle_cmd->add_option("problem", problem_path, "problem JSON file")->required();
  oracle_cmd->add_option("rule", rule_path, "rule JSON file")->required();

  CLI::App* eqeq_cmd = app.add_subcommand("eqeq", "equal-equivalent level of a point");
  eqeq_cmd->add_option("rule", rule_path, "rule JSON file")->required();
  eqeq_cmd->add_option("--point", point_text, "comma-separated rationals")->required();

  CLI::App* plot_cmd = app.add_subcommand("plot", "SVG plot for two-person problems");
  plot_cmd->add_option("problem", problem_path, "problem JSON file")->required();
  plot_cmd->add_option("rule", rule_path, "rule JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      os << app.help();
      return 0;
    }
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (solve_cmd->parsed()) return cmd_solve(problem_path, rule_path, config, os);
    if (axioms_cmd->parsed()) return cmd_axioms(rule_path, axiom_names_arg, config, os);
    if (matrix_cmd->parsed()) return cmd_matrix(config, os);
    if (oracle_cmd->parsed()) return cmd_oracle(problem_path, rule_path, config, os);
    if (eqeq_cmd->parsed()) return cmd_eqeq(rule_path, point_text, config, os);
    if (plot_cmd->parsed()) return cmd_plot(problem_path, rule_path, config, os);
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace relfair
