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

#ifndef RELFAIR_CLI_HPP
#define RELFAIR_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace relfair {

/// Shared run configuration. Exit-code contract across subcommands:
/// 0 all-pass, 1 violation found, 2 input/validation error, 3 only
/// inconclusive results.
struct RunConfig {
  uint64_t seed = 0;
  int budget = 10000;
  std::string grid = "1/16";
  std::string tol = "1/1073741824";  // 2^-30
  std::string format = "text";      // text | json
  std::string out;                  // empty = stdout
};

int cmd_solve(const std::string& problem_path, const std::string& rule_path,
              const RunConfig& config, std::ostream& os);
int cmd_axioms(const std::string& rule_path, const std::vector<std::string>& axioms,
               const RunConfig& config, std::ostream& os);
int cmd_matrix(const RunConfig& config, std::ostream& os);
int cmd_oracle(const std::string& problem_path, const std::string& rule_path,
               const RunConfig& config, std::ostream& os);
int cmd_eqeq(const std::string& rule_path, const std::string& point_text, const RunConfig& config,
             std::ostream& os);
int cmd_plot(const std::string& problem_path, const std::string& rule_path,
             const RunConfig& config, std::ostream& os);

/// Full argv entry point used by the binary.
int run_cli(int argc, const char* const* argv, std::ostream& os, std::ostream& err);

}  // namespace relfair

#endif  // RELFAIR_CLI_HPP
