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

#ifndef RELFAIR_SVG_HPP
#define RELFAIR_SVG_HPP

#include <string>

#include "relfair/rules.hpp"

namespace relfair {

/// Deterministic SVG for two-person problems: generator boxes in gray, the
/// choice set in red (shaded argmax pieces / witness markers), the KS point
/// in blue, and the ideal point marked. Byte-identical for identical inputs.
std::string render_svg(const Problem& x, const Rule& rule);

}  // namespace relfair

#endif  // RELFAIR_SVG_HPP
