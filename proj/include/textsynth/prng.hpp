// Copyright 2026 The textsynth Authors
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

#pragma once

#include <cstdint>

namespace textsynth {

/// Linear congruential generator X' = (a*X + c) mod 2^31 with the classic
/// a = 1103515245, c = 12345 constants.
///
/// The generator is a small value type: copy it to fork a stream, compare
/// states to check how many draws an operation consumed. Every stochastic
/// decision in the pipeline goes through one of these.
class Lcg {
 public:
  static constexpr std::uint64_t kMultiplier = 1103515245u;
  static constexpr std::uint64_t kIncrement = 12345u;
  static constexpr std::uint64_t kModulus = std::uint64_t{1} << 31;

  /// Seeds are reduced modulo 2^31.
  explicit constexpr Lcg(std::uint64_t seed = 42) noexcept
      : state_(static_cast<std::uint32_t>(seed % kModulus)) {}

  constexpr std::uint32_t state() const noexcept { return state_; }

  /// Advances one step and returns the new raw state.
  constexpr std::uint32_t next_state() noexcept {
    state_ = static_cast<std::uint32_t>(
        (kMultiplier * state_ + kIncrement) % kModulus);
    return state_;
  }

  /// U = X_{n+1} / 2^31, in [0, 1).
  constexpr double next() noexcept {
    return static_cast<double>(next_state()) / static_cast<double>(kModulus);
  }

  /// lo + U * (hi - lo). Throws kInvalidRange when lo > hi.
  double uniform_range(double lo, double hi);

  /// Inclusive integer range: floor(uniform_range(lo, hi + 1)).
  std::int64_t int_range(std::int64_t lo, std::int64_t hi);

  /// True iff the next uniform is below p. Throws kInvalidProbability
  /// outside [0, 1].
  bool bernoulli(double p);

  /// Standard normal deviate via Box-Muller (cosine branch). Consumes
  /// exactly two uniforms; a zero first uniform is replaced by 1/2^31.
  double gaussian();

  friend constexpr bool operator==(const Lcg&, const Lcg&) = default;

 private:
  std::uint32_t state_;
};

/// Box-Muller on explicit uniforms, exposed for testing.
double box_muller(double u1, double u2);

/// Per-sample stream: (seed XOR ((i * 2654435761) mod 2^31)) mod 2^31,
/// advanced three steps before first use.
Lcg substream_for_sample(std::uint64_t master_seed, std::uint64_t sample_index);

}  // namespace textsynth
