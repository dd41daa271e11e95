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


#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "textsynth/config.hpp"
#include "textsynth/error.hpp"

using namespace textsynth;
using nlohmann::json;

namespace {

GeneratorConfig sample_config() {
  GeneratorConfig c;
  c.corpus_path = "corpus.txt";
  c.fonts = {{"a.ttf", 40.0}, {"b.ttf", 35.0}, {"c.ttf", 25.0}};
  c.segmentation.mode = SegmentationMode::kNgram;
  c.segmentation.max_graphemes = 30;
  c.script.allowed = {{0x0600, 0x06FF}, {0x0020, 0x007F}};
  c.script.preserved_diacritics = {{0x0654, 0x0657}};
  c.direction = TextDirection::kLtr;
  c.alignment = Alignment::kCenter;
  c.text_color = {0x12, 0x34, 0x56};
  c.antialias = false;
  c.size = {20, 30, SizeDistribution::kUniform};
  c.background = combine_backgrounds({parse_background_argument("#EFE4CC:70"),
                                      parse_background_argument("white:30")});
  c.augmentation.p_aug = 0.5;
  c.augmentation.m_max = 3;
  c.augmentation.disable(TransformKind::kJpeg);
  c.augmentation.contrast = {0.8, 1.2};
  c.count = 1234;
  c.width = 320;
  c.height = 48;
  c.seed = 7;
  c.split = 0.8;
  c.format = OutputFormat::kHuggingface;
  c.storage = StorageMode::kChunked;
  c.batch_size = 100;
  c.memory_budget = 1 << 20;
  c.timestamp = true;
  c.output = "out";
  c.workers = 3;
  return c;
}

bool has_issue(const ConfigError& e, const std::string& path) {
  return std::any_of(e.issues().begin(), e.issues().end(),
                     [&](const FieldIssue& i) { return i.path == path; });
}

}  // namespace

TEST_SUITE("config") {

TEST_CASE("canonical JSON round-trips") {
  const GeneratorConfig c = sample_config();
  CHECK_NOTHROW(c.validate());
  const GeneratorConfig back = GeneratorConfig::from_json(json::parse(c.to_json().dump()));
  CHECK(back == c);
  CHECK(back.to_json().dump() == c.to_json().dump());
  const GeneratorConfig defaults;
  CHECK(GeneratorConfig::from_json(json::parse(defaults.to_json().dump())) == defaults);
}

TEST_CASE("manifest echo omits runtime fields") {
  const auto j = sample_config().to_json(false);
  CHECK_FALSE(j.contains("workers"));
  CHECK_FALSE(j["output"].contains("path"));
}

TEST_CASE("merge overlays only the given keys") {
  const GeneratorConfig base = sample_config();
  const GeneratorConfig m = GeneratorConfig::merge(base, json{{"seed", 99}, {"size", {{"max", 40}}}});
  CHECK(m.seed == 99);
  CHECK(m.size.max_px == 40);
  CHECK(m.size.min_px == 20);
  CHECK(m.count == 1234);
}

TEST_CASE("unknown keys and wrong types are reported with paths") {
  try {
    GeneratorConfig::from_json(json{{"sed", 1}, {"size", {{"min", "big"}}}, {"layout", {{"colour", 1}}}});
    FAIL("expected a configuration error");
  } catch (const ConfigError& e) {
    CHECK(has_issue(e, "sed"));
    CHECK(has_issue(e, "size.min"));
    CHECK(has_issue(e, "layout.colour"));
  }
}

TEST_CASE("validation collects every problem") {
  GeneratorConfig c;
  c.width = 4;
  c.split = 1.0;
  c.count = 0;
  c.fonts = {{"a.ttf", 60.0}, {"b.ttf", 50.0}};
  try {
    c.validate();
    FAIL("expected a configuration error");
  } catch (const ConfigError& e) {
    CHECK(has_issue(e, "corpus"));
    CHECK(has_issue(e, "width"));
    CHECK(has_issue(e, "split"));
    CHECK(has_issue(e, "count"));
    CHECK(has_issue(e, "fonts[].percentage"));
    CHECK(std::string(e.what()).find("percentages sum to 110") != std::string::npos);
  }
}

TEST_CASE("font arguments") {
  const FontSpec a = parse_font_argument("fonts/a.ttf:40");
  CHECK(a.path == "fonts/a.ttf");
  CHECK(a.percentage == 40.0);
  const FontSpec b = parse_font_argument("fonts/b.ttf");
  CHECK(b.path == "fonts/b.ttf");
  CHECK_FALSE(b.percentage.has_value());
  CHECK(parse_font_argument("C:/x.ttf").path == "C:/x.ttf");
}

TEST_CASE("equal split and mixed percentages") {
  const auto even = resolve_percentages({{"a", {}}, {"b", {}}, {"c", {}}});
  REQUIRE(even.size() == 3);
  CHECK(std::abs(even[0] + even[1] + even[2] - 100.0) < 1e-9);
  CHECK_THROWS_AS(resolve_percentages({{"a", 50.0}, {"b", {}}}), ConfigError);
}

TEST_CASE("background arguments") {
  const BackgroundSpec hex = parse_background_argument("#EFE4CC:30");
  CHECK(hex.mode == BackgroundSpec::Mode::kColor);
  CHECK(hex.color == Rgb{0xEF, 0xE4, 0xCC});
  CHECK(hex.percentage == 30.0);
  const BackgroundSpec preset = parse_background_argument("parchment");
  CHECK(preset.color == *background_preset("parchment"));
  CHECK(std::isnan(preset.percentage));
  const BackgroundSpec img = parse_background_argument("paper.jpg:20");
  CHECK(img.mode == BackgroundSpec::Mode::kImage);
  CHECK(img.image_path == "paper.jpg");
  CHECK_THROWS_AS(parse_background_argument("#GG0000"), ConfigError);

  const BackgroundSpec single = combine_backgrounds({parse_background_argument("book")});
  CHECK(single.mode == BackgroundSpec::Mode::kColor);
  const BackgroundSpec even =
      combine_backgrounds({parse_background_argument("book"), parse_background_argument("white")});
  REQUIRE(even.mode == BackgroundSpec::Mode::kMix);
  CHECK(even.options[0].percentage == 50.0);
  CHECK_THROWS_AS(combine_backgrounds({parse_background_argument("book:20"),
                                       parse_background_argument("white")}),
                  ConfigError);
}

TEST_CASE("background mix percentages are validated") {
  GeneratorConfig c = sample_config();
  c.background = combine_backgrounds({parse_background_argument("book:60"),
                                      parse_background_argument("white:50")});
  try {
    c.validate();
    FAIL("expected a configuration error");
  } catch (const ConfigError& e) {
    CHECK(has_issue(e, "background.options[].percentage"));
  }
}

}
