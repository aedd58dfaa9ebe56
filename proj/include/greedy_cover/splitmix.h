// Copyright 2026 The greedy-cover Authors
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

#ifndef GREEDY_COVER_SPLITMIX_H_
#define GREEDY_COVER_SPLITMIX_H_

#include <cstdint>

namespace greedy_cover {

// SplitMix64 (Steele, Lea, Flood 2014). Chosen over the <random> engines and
// distributions because the latter are implementation-defined; this stream
// and the bounded draws below are identical on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t Next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound), bound > 0. Rejection sampling, no modulo bias.
  uint64_t Below(uint64_t bound) {
    const uint64_t limit = -bound % bound;  // 2^64 mod bound
    for (;;) {
      const uint64_t r = Next();
      if (r >= limit) return r % bound;
    }
  }

  // Uniform in [0, 1) with 53 random bits.
  double UnitDouble() { return static_cast<double>(Next() >> 11) * 0x1.0p-53; }

 private:
  uint64_t state_;
};

}  // namespace greedy_cover

#endif  // GREEDY_COVER_SPLITMIX_H_
