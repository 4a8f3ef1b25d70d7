// Copyright 2026 The varbounds Authors
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

#ifndef VARBOUNDS_RANDOM_HPP_
#define VARBOUNDS_RANDOM_HPP_

#include <cstdint>
#include <random>

namespace varbounds {

// SplitMix64 finalizer.
std::uint64_t splitmix64(std::uint64_t x);

// Seed of the independent stream for trial `index` under master `seed`.
// Every fuzz and sweep trial draws from its own stream, so a failure is
// reproducible from (seed, index) alone.
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index);

// mt19937_64 with distributions implemented here rather than taken from
// <random>, whose distribution algorithms are implementation-defined. Output
// is bit-identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  Rng(std::uint64_t seed, std::uint64_t index)
      : engine_(stream_seed(seed, index)) {}

  std::uint64_t bits() { return engine_(); }
  // [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  // [0, n)
  std::uint64_t below(std::uint64_t n);
  // Standard normal, Box-Muller.
  double normal();

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace varbounds

#endif  // VARBOUNDS_RANDOM_HPP_
