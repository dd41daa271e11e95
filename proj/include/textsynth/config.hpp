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
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "textsynth/augment.hpp"
#include "textsynth/fonts.hpp"
#include "textsynth/packaging.hpp"
#include "textsynth/renderer.hpp"
#include "textsynth/textprep.hpp"

namespace textsynth {

struct FontSpec {
  std::string path;
  std::optional<double> percentage;

  friend bool operator==(const FontSpec&, const FontSpec&) = default;
};

inline constexpr std::size_t kDefaultMemoryBudget = std::size_t{512} << 20;
inline constexpr int kMaxWorkers = 256;

/// Every knob of a generation run. Runtime-only fields (output path,
/// workers) are excluded from the manifest echo.
struct GeneratorConfig {
  std::string corpus_path;
  std::optional<std::string> corpus_text;  // inline corpus, wins over the path

  SegmentationConfig segmentation;
  ScriptPolicy script = ScriptPolicy::kashmiri();

  TextDirection direction = TextDirection::kRtl;
  Alignment alignment = Alignment::kLeft;
  double pad_left = 10.0;
  double pad_right = 10.0;
  Rgb text_color{0, 0, 0};
  bool antialias = true;

  std::vector<FontSpec> fonts;
  SizePolicy size;
  BackgroundSpec background;
  AugmentationConfig augmentation;

  std::uint64_t count = 1000;
  int width = 256;
  int height = 64;
  std::uint64_t seed = 42;
  double split = 0.9;

  OutputFormat format = OutputFormat::kCrnn;
  StorageMode storage = StorageMode::kZip;
  std::size_t batch_size = 1000;
  std::size_t memory_budget = kDefaultMemoryBudget;
  bool timestamp = false;

  std::string output;
  int workers = 1;

  /// Throws ConfigError listing every problem found.
  void validate() const;

  /// Canonical document; `runtime` adds output and workers.
  nlohmann::ordered_json to_json(bool runtime = true) const;
  /// Missing keys keep their defaults; unknown keys and type errors are
  /// reported as ConfigError with field paths.
  static GeneratorConfig from_json(const nlohmann::json& j);
  /// Overlays the keys present in `j` onto `base`.
  static GeneratorConfig merge(const GeneratorConfig& base, const nlohmann::json& j);

  friend bool operator==(const GeneratorConfig&, const GeneratorConfig&);
};

/// Applies the equal-split rule: all omitted -> 100 / K each; a mix of
/// explicit and omitted percentages is a ConfigError.
std::vector<double> resolve_percentages(const std::vector<FontSpec>& fonts);

/// "PATH" or "PATH:PCT".
FontSpec parse_font_argument(const std::string& arg);

/// "#RRGGBB", a preset name or an image path, each optionally ":PCT".
BackgroundSpec parse_background_argument(const std::string& arg);

/// Builds a mix when more than one option is given.
BackgroundSpec combine_backgrounds(std::vector<BackgroundSpec> options);

}  // namespace textsynth
