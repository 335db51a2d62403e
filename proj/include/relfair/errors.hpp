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

#ifndef RELFAIR_ERRORS_HPP
#define RELFAIR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace relfair {

/// Base class for all validation and computation errors raised by the library.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

class empty_input_error : public error {
 public:
  explicit empty_input_error(const std::string& what = "empty input") : error(what) {}
};

class dimension_mismatch_error : public error {
 public:
  explicit dimension_mismatch_error(const std::string& what = "dimension mismatch") : error(what) {}
};

class degenerate_problem_error : public error {
 public:
  explicit degenerate_problem_error(const std::string& what = "degenerate problem") : error(what) {}
};

class nonpositive_scale_error : public error {
 public:
  explicit nonpositive_scale_error(const std::string& what = "scale vector must be strictly positive") : error(what) {}
};

class nonpositive_shift_error : public error {
 public:
  explicit nonpositive_shift_error(const std::string& what = "shift must be positive") : error(what) {}
};

class point_not_in_problem_error : public error {
 public:
  explicit point_not_in_problem_error(const std::string& what = "point is not in the problem") : error(what) {}
};

class not_in_simplex_error : public error {
 public:
  explicit not_in_simplex_error(const std::string& what = "vertex is not in the probability simplex") : error(what) {}
};

class bad_parameter_error : public error {
 public:
  explicit bad_parameter_error(const std::string& what = "bad parameter") : error(what) {}
};

class bad_norm_error : public error {
 public:
  explicit bad_norm_error(const std::string& what = "unknown norm") : error(what) {}
};

class monotonicity_violation_error : public error {
 public:
  explicit monotonicity_violation_error(const std::string& what = "norm penalty breaks weak monotonicity") : error(what) {}
};

class bad_instance_error : public error {
 public:
  explicit bad_instance_error(const std::string& what = "instance violates axiom preconditions") : error(what) {}
};

class nonconvergence_error : public error {
 public:
  explicit nonconvergence_error(const std::string& what = "iteration budget exceeded") : error(what) {}
};

class precision_unavailable_error : public error {
 public:
  explicit precision_unavailable_error(const std::string& what = "exact value not representable") : error(what) {}
};

class budget_exceeded_error : public error {
 public:
  explicit budget_exceeded_error(const std::string& what = "budget exceeded") : error(what) {}
};

class parse_error : public error {
 public:
  explicit parse_error(const std::string& what = "parse error") : error(what) {}
};

}  // namespace relfair

#endif  // RELFAIR_ERRORS_HPP
