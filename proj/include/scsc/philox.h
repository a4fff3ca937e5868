// Copyright 2026 The Authors.
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

//
// Counter-based random numbers
//

// Every random quantity in the library (edge liveness, ranks, oracle noise,
// sampled costs) is a pure function of (seed, stream, a, b). Nothing is drawn
// from a sequential stream, so any value can be reproduced in isolation and
// parallel construction is schedule-independent.

#ifndef SCSC_PHILOX_H_
#define SCSC_PHILOX_H_

#include <array>
#include <cstdint>
#include <span>

namespace scsc {

using PhiloxCounter = std::array<std::uint32_t, 4>;
using PhiloxKey = std::array<std::uint32_t, 2>;

// Philox4x32-10 (Salmon et al., SC'11).
constexpr PhiloxCounter Philox4x32(PhiloxCounter ctr, PhiloxKey key) {
  constexpr std::uint64_t kM0 = 0xD2511F53u;
  constexpr std::uint64_t kM1 = 0xCD9E8D57u;
  constexpr std::uint32_t kW0 = 0x9E3779B9u;
  constexpr std::uint32_t kW1 = 0xBB67AE85u;
  for (int round = 0; round < 10; ++round) {
    if (round > 0) {
      key[0] += kW0;
      key[1] += kW1;
    }
    const std::uint64_t p0 = kM0 * ctr[0];
    const std::uint64_t p1 = kM1 * ctr[2];
    ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0],
           static_cast<std::uint32_t>(p1),
           static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1],
           static_cast<std::uint32_t>(p0)};
  }
  return ctr;
}

// Domain separation between the independent uses of one seed.
enum class Stream : std::uint32_t {
  kEdgeLiveness = 1,
  kRank = 2,
  kNoise = 3,
  kCost = 4,
  kGraph = 5,
};

constexpr std::uint64_t RandomBits(std::uint64_t seed, Stream stream,
                                   std::uint32_t a, std::uint32_t b) {
  const PhiloxCounter out =
      Philox4x32({a, b, static_cast<std::uint32_t>(stream), 0u},
                 {static_cast<std::uint32_t>(seed),
                  static_cast<std::uint32_t>(seed >> 32)});
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

// Uniform on [0, 1), 53-bit resolution.
constexpr double UniformHalfOpen(std::uint64_t seed, Stream stream,
                                 std::uint32_t a, std::uint32_t b) {
  return static_cast<double>(RandomBits(seed, stream, a, b) >> 11) *
         0x1.0p-53;
}

// Uniform on the open interval (0, 1); never returns 0.
constexpr double UniformOpen(std::uint64_t seed, Stream stream,
                             std::uint32_t a, std::uint32_t b) {
  return (static_cast<double>(RandomBits(seed, stream, a, b) >> 11) + 0.5) *
         0x1.0p-53;
}

// splitmix64 finalizer.
constexpr std::uint64_t Mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Order-sensitive digest; callers canonicalize (sort) before hashing sets.
constexpr std::uint64_t HashSequence(std::span<const std::uint32_t> values) {
  std::uint64_t h = Mix64(values.size());
  for (std::uint32_t v : values) h = Mix64(h ^ v);
  return h;
}

}  // namespace scsc

#endif  // SCSC_PHILOX_H_
