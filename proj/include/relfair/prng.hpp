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

#ifndef RELFAIR_PRNG_HPP
#define RELFAIR_PRNG_HPP

#include <cstdint>
#include <vector>

#include "relfair/rational.hpp"

namespace relfair {

/// Deterministic splitmix64 generator. Standard-library engines are avoided
/// because distribution outputs are not pinned across implementations, and
/// byte-identical reports across platforms are part of the contract.
class Prng {
 public:
  explicit Prng(uint64_t seed) : state_(seed) {}

  /// Derives an independent stream from (seed, stream, index); used so that
  /// instance k of a search is the same regardless of execution order.
  static Prng derive(uint64_t seed, uint64_t stream, uint64_t index) {
    Prng mix(seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1)));
    mix.next();
    Prng out(mix.next() ^ (0xbf58476d1ce4e5b9ULL * (index + 1)));
    out.next();
    return out;
  }

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [0, bound); bound > 0. Modulo bias is irrelevant here.
  uint64_t below(uint64_t bound) { return next() % bound; }

  int range(int lo, int hi) {  // inclusive ends
    return lo + static_cast<int>(below(static_cast<uint64_t>(hi - lo + 1)));
  }

  /// Rational k/den with k in [0, span*den]; den drawn from small powers of two.
  Rat rat(int span) {
    static const int dens[] = {1, 2, 4, 8, 16};
    const int den = dens[below(5)];
    const int k = static_cast<int>(below(static_cast<uint64_t>(span * den + 1)));
    return Rat(k, den);
  }

  /// Strictly positive rational in (0, span].
  Rat positive_rat(int span) {
    Rat r = rat(span);
    while (r == 0) r = rat(span);
    return r;
  }

  std::vector<int> permutation(int n) {
    std::vector<int> image(n);
    for (int i = 0; i < n; ++i) image[i] = i;
    for (int i = n - 1; i > 0; --i) {
      const int j = static_cast<int>(below(static_cast<uint64_t>(i + 1)));
      std::swap(image[i], image[j]);
    }
    return image;
  }

 private:
  uint64_t state_;
};

}  // namespace relfair

#endif  // RELFAIR_PRNG_HPP
