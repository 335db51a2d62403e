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

#include "relfair/rational.hpp"

#include <cctype>

namespace relfair {

namespace {

bool all_digits(const std::string& s, size_t from, size_t to) {
  if (from >= to) return false;
  for (size_t i = from; i < to; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rat parse_rat(const std::string& text) {
  if (text.empty()) throw parse_error("empty rational literal");
  size_t start = 0;
  bool negative = false;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    start = 1;
  }
  const size_t slash = text.find('/');
  Int num, den = 1;
  if (slash == std::string::npos) {
    if (!all_digits(text, start, text.size()))
      throw parse_error("malformed rational '" + text + "'");
    num = Int(text.substr(start));
  } else {
    if (!all_digits(text, start, slash) || !all_digits(text, slash + 1, text.size()))
      throw parse_error("malformed rational '" + text + "'");
    num = Int(text.substr(start, slash - start));
    den = Int(text.substr(slash + 1));
    if (den == 0) throw parse_error("zero denominator in '" + text + "'");
  }
  if (negative) num = -num;
  return Rat(num, den);
}

std::string format_rat(const Rat& q) {
  const Int num = boost::multiprecision::numerator(q);
  const Int den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string format_decimal(const Rat& q, int digits) {
  Int scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const bool negative = q < 0;
  const Rat abs_q = negative ? Rat(-q) : q;
  // Round half up on the scaled integer, exactly.
  const Int scaled = Int((boost::multiprecision::numerator(abs_q) * scale * 2 +
                          boost::multiprecision::denominator(abs_q)) /
                         (boost::multiprecision::denominator(abs_q) * 2));
  std::string body = scaled.str();
  if (static_cast<int>(body.size()) <= digits) {
    body.insert(0, std::string(digits + 1 - body.size(), '0'));
  }
  std::string out = body.substr(0, body.size() - digits) + "." + body.substr(body.size() - digits);
  // Trim trailing zeros but keep at least one fractional digit.
  size_t last = out.find_last_not_of('0');
  if (out[last] == '.') ++last;
  out.erase(last + 1);
  if (negative && out != "0.0") out.insert(0, "-");
  return out;
}

std::optional<Rat> exact_sqrt(const Rat& q) {
  if (q < 0) return std::nullopt;
  const Int num = boost::multiprecision::numerator(q);
  const Int den = boost::multiprecision::denominator(q);
  const Int sn = boost::multiprecision::sqrt(num);
  const Int sd = boost::multiprecision::sqrt(den);
  if (sn * sn == num && sd * sd == den) return Rat(sn, sd);
  return std::nullopt;
}

Rat sqrt_upper_bound(const Rat& q) {
  if (q < 0) throw bad_parameter_error("sqrt of negative rational");
  if (q == 0) return Rat(0);
  const Int num = boost::multiprecision::numerator(q);
  const Int den = boost::multiprecision::denominator(q);
  // sqrt(p/q) = sqrt(p*q)/q; an integer ceiling sqrt of p*q gives a tight
  // rational upper bound.
  const Int prod = num * den;
  Int root = boost::multiprecision::sqrt(prod);
  if (root * root < prod) root += 1;
  return Rat(root, den);
}

std::string format_point(const std::vector<Rat>& p) {
  std::string out = "(";
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) out += ",";
    out += format_rat(p[i]);
  }
  out += ")";
  return out;
}

}  // namespace relfair
