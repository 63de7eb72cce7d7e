// Copyright 2026 The llkp Authors
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
// Internal seeded RNG. Hand-rolled on purpose: <random> distributions are
// implementation-defined, and generated instances must be bit-identical
// across standard libraries.

#ifndef LLKP_SRC_RNG_HPP_
#define LLKP_SRC_RNG_HPP_

#include <cmath>
#include <cstdint>
#include <numbers>

namespace llkp::detail {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform on (0, 1]: 53 mantissa bits, never 0, so logarithms stay finite.
  double uniform01() {
    return 1.0 - static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller. Draws both uniforms every call and keeps
  // no cache, so each call consumes exactly two raw draws and interleaved
  // streams stay reproducible.
  double normal() {
    const double u1 = uniform01();
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  std::uint64_t state_;
};

}  // namespace llkp::detail

#endif  // LLKP_SRC_RNG_HPP_
