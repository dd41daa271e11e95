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

#include "textsynth/prng.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "textsynth/error.hpp"

namespace textsynth {

double Lcg::uniform_range(double lo, double hi) {
  if (!(lo <= hi)) {
    throw Error(ErrorCode::kInvalidRange,
                "invalid range [" + std::to_string(lo) + ", " +
                    std::to_string(hi) + ")");
  }
  return lo + next() * (hi - lo);
}

std::int64_t Lcg::int_range(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) {
    throw Error(ErrorCode::kInvalidRange,
                "invalid range [" + std::to_string(lo) + ", " +
                    std::to_string(hi) + "]");
  }
  const double span = static_cast<double>(hi - lo) + 1.0;
  auto value = lo + static_cast<std::int64_t>(std::floor(next() * span));
  // U < 1 keeps this in range mathematically; rounding in the multiply
  // must not produce hi + 1 for very wide ranges.
  return value > hi ? hi : value;
}

bool Lcg::bernoulli(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorCode::kInvalidProbability,
                "probability " + std::to_string(p) + " outside [0, 1]");
  }
  return next() < p;
}

double box_muller(double u1, double u2) {
  if (u1 <= 0.0) u1 = 1.0 / static_cast<double>(Lcg::kModulus);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

double Lcg::gaussian() {
  const double u1 = next();
  const double u2 = next();
  return box_muller(u1, u2);
}

Lcg substream_for_sample(std::uint64_t master_seed,
                         std::uint64_t sample_index) {
  constexpr std::uint64_t kGolden = 2654435761u;
  const std::uint64_t mixed = (sample_index * kGolden) % Lcg::kModulus;
  Lcg stream((master_seed ^ mixed) % Lcg::kModulus);
  for (int i = 0; i < 3; ++i) stream.next_state();
  return stream;
}

}  // namespace textsynth
