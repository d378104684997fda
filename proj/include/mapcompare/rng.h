// Copyright 2026 The mapcompare Authors.
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
#ifndef MAPCOMPARE_RNG_H_
#define MAPCOMPARE_RNG_H_

#include <cstdint>
#include <limits>

namespace mapcompare {

// SplitMix64 (Steele, Lea & Flood 2014). The state is a Weyl counter
// advanced by a fixed odd gamma; each output is a bijective mix of the
// counter. Output n of a stream seeded with s is Mix(s + (n + 1) * kGamma),
// which makes streams reproducible in any language with 64-bit wrapping
// arithmetic. Split() derives an independent child seed from the next output.
class SplitMix64 {
 public:
  using result_type = uint64_t;
  static constexpr uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  static constexpr uint64_t Mix(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  uint64_t operator()() {
    state_ += kGamma;
    return Mix(state_);
  }

  static constexpr uint64_t min() { return 0; }
  static constexpr uint64_t max() {
    return std::numeric_limits<uint64_t>::max();
  }

  // Uniform double in [0, 1) with 53 random bits.
  double NextDouble() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, n), n > 0. Lemire's multiply-shift with rejection.
  uint64_t NextBelow(uint64_t n) {
    uint64_t x = (*this)();
    __uint128_t m = static_cast<__uint128_t>(x) * n;
    uint64_t low = static_cast<uint64_t>(m);
    if (low < n) {
      const uint64_t threshold = (0 - n) % n;
      while (low < threshold) {
        x = (*this)();
        m = static_cast<__uint128_t>(x) * n;
        low = static_cast<uint64_t>(m);
      }
    }
    return static_cast<uint64_t>(m >> 64);
  }

  SplitMix64 Split() { return SplitMix64((*this)()); }

 private:
  uint64_t state_;
};

}  // namespace mapcompare

#endif  // MAPCOMPARE_RNG_H_
