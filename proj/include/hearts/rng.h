// Copyright 2026 The Hearts Arena Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HEARTS_RNG_H_
#define HEARTS_RNG_H_

#include <cstdint>
#include <random>
#include <vector>

namespace hearts {

// SplitMix64 finalizer, used to derive independent seeds from a master seed.
inline uint64_t MixSeed(uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline uint64_t DeriveSeed(uint64_t base, uint64_t a) {
  return MixSeed(base ^ MixSeed(a));
}

inline uint64_t DeriveSeed(uint64_t base, uint64_t a, uint64_t b) {
  return DeriveSeed(DeriveSeed(base, a), b);
}

// Deterministic uniform source. The mt19937_64 output sequence is fully
// specified by the standard; the bounded draw below avoids
// std::uniform_int_distribution, whose mapping is implementation-defined,
// so streams replay identically across compilers.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t NextU64() { return engine_(); }

  // Uniform integer in [0, n), n >= 1. Rejection sampling on the top of the
  // 64-bit range keeps the draw unbiased.
  uint64_t NextBelow(uint64_t n) {
    const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }

  // Uniform double in [0, 1).
  double NextUnit() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  template <typename T>
  void Shuffle(std::vector<T>& items) {
    for (size_t i = items.size(); i > 1; --i) {
      size_t j = static_cast<size_t>(NextBelow(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace hearts

#endif  // HEARTS_RNG_H_
