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

#include "doctest.h"
#include "oracles.hpp"
#include "textsynth/error.hpp"
#include "textsynth/fonts.hpp"
#include "textsynth/image_io.hpp"
#include "textsynth/textprep.hpp"

using namespace textsynth;

TEST_SUITE("fonts") {

TEST_CASE("oracle predecessor lands on the requested uniform") {
  Lcg rng(oracle::state_before_uniform(0.5));
  CHECK(rng.next() == 0.5);
}

TEST_CASE("load a valid font") {
  const FontEntry e = load_font(oracle::font_path("DejaVuSans.ttf"), 100.0);
  REQUIRE(e.face);
  CHECK(e.face->glyph_count() > 0);
  CHECK(e.display_name == "DejaVu Sans");
  CHECK(e.face->has_glyph(U'ب'));
}

TEST_CASE("truncated and missing fonts") {
  Bytes data = read_file(oracle::font_path("DejaVuSans.ttf"));
  data.resize(100);
  try {
    FontFace::from_bytes(data, "cut.ttf");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kFontUnparseable);
  }
  try {
    FontFace::load("/nonexistent/font.ttf");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kFontUnreadable);
  }
}

TEST_CASE("coverage warning matches a direct glyph scan") {
  const auto serif = FontFace::load(oracle::font_path("DejaVuSerif.ttf"));
  const auto sans = FontFace::load(oracle::font_path("DejaVuSans.ttf"));
  const ScriptPolicy policy = ScriptPolicy::kashmiri();
  CHECK_FALSE(coverage_warning(*sans, policy).has_value());
  std::size_t missing = 0;
  for (char32_t c : arabic_coverage_probe()) missing += serif->has_glyph(c) ? 0 : 1;
  REQUIRE(missing > 0);
  const auto w = coverage_warning(*serif, policy);
  REQUIRE(w.has_value());
  std::size_t listed = 0;
  for (std::size_t pos = 0; (pos = w->find("U+", pos)) != std::string::npos; pos += 2) ++listed;
  CHECK(listed == missing);
  ScriptPolicy latin;
  latin.allowed = {{0x20, 0x7F}};
  CHECK_FALSE(coverage_warning(*serif, latin).has_value());
}

TEST_CASE("inverse-transform selection") {
  const std::vector<double> p{40, 35, 25};
  Lcg zero(oracle::state_before_uniform(0.0));
  CHECK(select_font_index(p, zero) == 0);
  Lcg half(oracle::state_before_uniform(0.5));
  CHECK(select_font_index(p, half) == 1);
  Lcg edge(oracle::state_before_uniform(0.75));
  CHECK(select_font_index(p, edge) == 2);
  Lcg rng(1);
  for (int i = 0; i < 100; ++i) CHECK(select_font_index({100.0}, rng) == 0);
  // Rounding leakage past the total falls back to the last entry.
  Lcg top(oracle::state_before_uniform(0.9995));
  CHECK(select_font_index({33.3, 33.3, 33.3}, top) == 2);
}

TEST_CASE("selection consumes one uniform") {
  Lcg a(9), b(9);
  select_font_index({50, 50}, a);
  b.next();
  CHECK(a == b);
}

TEST_CASE("percentage checks") {
  CHECK(check_percentages({40, 35, 25}).empty());
  CHECK(check_percentages({33.33, 33.33, 33.33}).size() == 1);
  CHECK(check_percentages({33.334, 33.333, 33.333}).empty());
  const auto p = check_percentages({60, 50});
  REQUIRE(p.size() == 1);
  CHECK(p[0].find("percentages sum to 110") != std::string::npos);
  CHECK_FALSE(check_percentages({}).empty());
  CHECK_FALSE(check_percentages({0, 100}).empty());
}

TEST_CASE("size sampling") {
  SizePolicy s;
  CHECK(size_from_deviate(s, 0.0) == 35);
  CHECK(size_from_deviate(s, 10.0) == 42);
  CHECK(size_from_deviate(s, -10.0) == 28);

  Lcg rng(4);
  for (int i = 0; i < 100000; ++i) {
    const int z = sample_size(s, rng);
    REQUIRE(z >= 28);
    REQUIRE(z <= 42);
  }

  SizePolicy fixed{30, 30, SizeDistribution::kUniform};
  for (int i = 0; i < 100; ++i) CHECK(sample_size(fixed, rng) == 30);

  SizePolicy u{28, 42, SizeDistribution::kUniform};
  bool lo = false, hi = false;
  for (int i = 0; i < 100000; ++i) {
    const int z = sample_size(u, rng);
    REQUIRE(z >= 28);
    REQUIRE(z <= 42);
    lo |= z == 28;
    hi |= z == 42;
  }
  CHECK(lo);
  CHECK(hi);
}

TEST_CASE("size draws per call") {
  Lcg a(1), b(1);
  sample_size(SizePolicy{}, a);
  b.next();
  b.next();
  CHECK(a == b);
  Lcg c(1), d(1);
  sample_size(SizePolicy{28, 42, SizeDistribution::kUniform}, c);
  d.next();
  CHECK(c == d);
}

TEST_CASE("size policy validation") {
  CHECK_THROWS_AS((SizePolicy{0, 10}.validate()), ConfigError);
  CHECK_THROWS_AS((SizePolicy{20, 10}.validate()), ConfigError);
  CHECK_NOTHROW(SizePolicy{}.validate());
}

}
