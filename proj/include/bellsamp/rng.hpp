// Copyright 2026 The bellsamp Authors
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

#ifndef BELLSAMP_RNG_HPP
#define BELLSAMP_RNG_HPP

#include <cstdint>
#include <random>

namespace bellsamp {

// Deterministic random stream. Everything stochastic in the library draws
// from an explicitly passed Rng, so runs are reproducible bit-for-bit from
// a seed. Independent trial streams derive from (root, n, trial) through
// derive_seed, making aggregates independent of thread scheduling.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  // Single fair bit, served from a 64-bit buffer.
  bool bit() {
    if (bits_left_ == 0) {
      bit_buf_ = next_u64();
      bits_left_ = 64;
    }
    bool b = bit_buf_ & 1u;
    bit_buf_ >>= 1;
    --bits_left_;
    return b;
  }

  // +1 or -1, each with probability 1/2.
  int sign() { return bit() ? -1 : +1; }

  // Uniform in [0, bound), bound >= 1. Rejection sampling, no modulo bias.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    for (;;) {
      std::uint64_t v = next_u64();
      if (v < limit) return v % bound;
    }
  }

  // Uniform double in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // splitmix64 finalizer; used as the seed-splitting mix.
  static std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
  }

  // Per-trial seed: mix the root, fold in `a` (e.g. qubit count), mix,
  // fold in `b` (e.g. trial index), mix again.
  static std::uint64_t derive_seed(std::uint64_t root, std::uint64_t a,
                                   std::uint64_t b) {
    return mix(mix(mix(root) ^ a) ^ b);
  }

 private:
  std::mt19937_64 eng_;
  std::uint64_t bit_buf_ = 0;
  int bits_left_ = 0;
};

}  // namespace bellsamp

#endif  // BELLSAMP_RNG_HPP
