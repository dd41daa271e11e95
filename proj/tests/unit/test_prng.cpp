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


#include <cmath>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "textsynth/error.hpp"
#include "textsynth/prng.hpp"

using namespace textsynth;

TEST_SUITE("prng") {

TEST_CASE("zero seed steps to the increment") {
  Lcg rng(0);
  CHECK(rng.next() == doctest::Approx(12345.0 / 2147483648.0).epsilon(1e-15));
  CHECK(rng.state() == 12345u);
}

TEST_CASE("seed 42 matches the arbitrary-precision evaluation") {
  const auto expected = oracle::lcg_states(42, 1);
  Lcg rng(42);
  CHECK(rng.next_state() == expected[0]);
  CHECK(expected[0] == 1250496027u);
  CHECK(Lcg(42).next() == doctest::Approx(1250496027.0 / 2147483648.0));
}

TEST_CASE("first ten thousand states match the oracle") {
  for (std::uint64_t seed : {0ull, 1ull, 42ull, 2147483647ull, 0xFFFFFFFFFFFFull}) {
    const auto expected = oracle::lcg_states(seed, 10000);
    Lcg rng(seed);
    for (std::size_t i = 0; i < expected.size(); ++i) {
      REQUIRE(rng.next_state() == expected[i]);
    }
  }
}

TEST_CASE("uniforms stay in [0, 1) and average one half") {
  Lcg rng(7);
  double sum = 0.0;
  for (int i = 0; i < 1000000; ++i) {
    const double u = rng.next();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    sum += u;
  }
  CHECK(std::abs(sum / 1e6 - 0.5) < 0.003);
}

TEST_CASE("uniform_range") {
  Lcg rng(5);
  CHECK(rng.uniform_range(5.0, 5.0) == 5.0);
  CHECK(Lcg(42).uniform_range(0.0, 100.0) == doctest::Approx(58.2305).epsilon(1e-5));
  CHECK_THROWS_AS(rng.uniform_range(2.0, 1.0), Error);
  double sum = 0.0;
  for (int i = 0; i < 100000; ++i) sum += rng.uniform_range(-10.0, 10.0);
  CHECK(std::abs(sum / 1e5) < 0.2);
}

TEST_CASE("int_range") {
  Lcg rng(11);
  CHECK(rng.int_range(3, 3) == 3);
  CHECK_THROWS_AS(rng.int_range(4, 3), Error);
  int counts[5] = {0, 0, 0, 0, 0};
  for (int i = 0; i < 100000; ++i) {
    const auto v = rng.int_range(1, 4);
    REQUIRE(v >= 1);
    REQUIRE(v <= 4);
    ++counts[v];
  }
  for (int v = 1; v <= 4; ++v) CHECK(std::abs(counts[v] / 1e5 - 0.25) < 0.01);
}

TEST_CASE("int_range never reaches hi + 1 at the largest state") {
  // Predecessor of state 2^31 - 1: x = (m - 1 - c) * a^-1 mod m.
  const std::uint64_t m = 1ull << 31;
  std::uint64_t inv = 1;
  for (int i = 0; i < 5; ++i) inv = (inv * (2 - 1103515245ull * inv)) % m;  // Newton
  const std::uint64_t x = ((m - 1 - 12345) % m) * inv % m;
  Lcg rng(x);
  CHECK(Lcg(x).next_state() == m - 1);
  CHECK(rng.int_range(0, 9) == 9);
}

TEST_CASE("bernoulli") {
  Lcg rng(3);
  for (int i = 0; i < 1000; ++i) {
    REQUIRE_FALSE(rng.bernoulli(0.0));
    REQUIRE(rng.bernoulli(1.0));
  }
  CHECK_THROWS_AS(rng.bernoulli(1.5), Error);
  CHECK_THROWS_AS(rng.bernoulli(-0.1), Error);
  int hits = 0;
  for (int i = 0; i < 100000; ++i) hits += rng.bernoulli(0.7) ? 1 : 0;
  CHECK(std::abs(hits / 1e5 - 0.7) < 0.01);
}

TEST_CASE("gaussian") {
  CHECK(box_muller(1.0, 0.25) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(std::isfinite(box_muller(0.0, 0.0)));

  Lcg rng(99);
  const Lcg before = rng;
  rng.gaussian();
  Lcg two = before;
  two.next();
  two.next();
  CHECK(rng == two);

  double sum = 0.0, sq = 0.0;
  for (int i = 0; i < 100000; ++i) {
    const double z = rng.gaussian();
    sum += z;
    sq += z * z;
  }
  const double mean = sum / 1e5;
  const double sd = std::sqrt(sq / 1e5 - mean * mean);
  CHECK(std::abs(mean) < 0.02);
  CHECK(std::abs(sd - 1.0) < 0.02);
}

TEST_CASE("substreams") {
  // Index 0 is the master seed warmed up by three steps.
  Lcg warm(42);
  for (int i = 0; i < 3; ++i) warm.next();
  CHECK(substream_for_sample(42, 0) == warm);

  const std::uint64_t mixed = (42ull ^ ((7ull * 2654435761ull) % (1ull << 31))) % (1ull << 31);
  Lcg manual(mixed);
  for (int i = 0; i < 3; ++i) manual.next();
  CHECK(substream_for_sample(42, 7) == manual);

  std::set<std::vector<std::uint32_t>> seen;
  for (std::uint64_t i = 0; i < 100; ++i) {
    Lcg s = substream_for_sample(42, i);
    std::vector<std::uint32_t> seq;
    for (int k = 0; k < 100; ++k) seq.push_back(s.next_state());
    CHECK(seen.insert(seq).second);
  }
}

}
