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

#ifndef RELFAIR_IO_HPP
#define RELFAIR_IO_HPP

#include <string>

#include <json.hpp>

#include "relfair/axioms.hpp"
#include "relfair/oracle.hpp"
#include "relfair/rules.hpp"

namespace relfair {

using Json = nlohmann::json;

// Rationals travel as decimal-free strings "p/q" (or plain integers).
Json rat_to_json(const Rat& q);
Rat rat_from_json(const Json& j);

Json point_to_json(const Point& p);
Point point_from_json(const Json& j);

Json problem_to_json(const Problem& x);
Problem problem_from_json(const Json& j);

Json weight_set_to_json(const WeightSet& w);
WeightSet weight_set_from_json(const Json& j);

Json rule_to_json(const Rule& r);
Rule rule_from_json(const Json& j);

Json instance_to_json(const AxiomInstance& inst);
AxiomInstance instance_from_json(const Json& j);

Json verdict_to_json(const Verdict& v);
Verdict verdict_from_json(const Json& j);

Json matrix_to_json(const MatrixReport& report);
Json oracle_comparison_to_json(const OracleComparison& cmp);
Json choice_set_to_json(const ChoiceSet& cs);

Problem load_problem_file(const std::string& path);
Rule load_rule_file(const std::string& path);
Json load_json_file(const std::string& path);

/// Canonical dump used everywhere a report is emitted: 2-space indent,
/// sorted keys (nlohmann objects are ordered maps), trailing newline.
std::string dump_report(const Json& j);

}  // namespace relfair

#endif  // RELFAIR_IO_HPP
