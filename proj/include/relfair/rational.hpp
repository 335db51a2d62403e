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

#ifndef RELFAIR_RATIONAL_HPP
#define RELFAIR_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>
#include <optional>
#include <string>
#include <vector>

#include "relfair/errors.hpp"

namespace relfair {

/// Exact rational carrier for every coordinate, weight and welfare value.
using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

/// High-precision real used only where square roots or general powers make
/// exactness impossible (mean-minus-SD and friends). 40 decimal digits is a
/// ~133-bit mantissa, comfortably above the 2^-64 comparison tolerance.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<40>>;

/// Comparison tolerance for Real-valued welfare: |a - b| <= real_tol() is a tie.
inline const Real& real_tol() {
  static const Real tol = []() {
    Real t = 1;
    for (int i = 0; i < 64; ++i) t /= 2;
    return t;
  }();
  return tol;
}

inline Real to_real(const Rat& q) {
  return Real(boost::multiprecision::numerator(q)) / Real(boost::multiprecision::denominator(q));
}

/// Parses a decimal-free rational: "p", "-p" or "p/q" with q > 0 after
/// canonicalization. Anything else (including decimals) is rejected.
Rat parse_rat(const std::string& text);

/// Renders canonically: "p" when the denominator is one, otherwise "p/q".
std::string format_rat(const Rat& q);

/// Fixed-precision decimal rendering used for SVG coordinates; deterministic.
std::string format_decimal(const Rat& q, int digits);

/// Exact square root when the radicand is a perfect rational square.
std::optional<Rat> exact_sqrt(const Rat& q);

/// Smallest convenient rational upper bound on sqrt(q); q >= 0.
Rat sqrt_upper_bound(const Rat& q);

std::string format_point(const std::vector<Rat>& p);

}  // namespace relfair

#endif  // RELFAIR_RATIONAL_HPP
