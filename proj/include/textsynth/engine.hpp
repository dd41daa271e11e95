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

#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "textsynth/augment.hpp"
#include "textsynth/config.hpp"
#include "textsynth/fonts.hpp"
#include "textsynth/packaging.hpp"
#include "textsynth/renderer.hpp"
#include "textsynth/textprep.hpp"

namespace textsynth {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr std::size_t kMaxPreviewCount = 64;

struct ProgressEvent {
  std::uint64_t produced = 0;
  std::uint64_t total = 0;
  double rate = 0.0;                // samples per second
  std::uint64_t skips = 0;          // slots that produced no image
  std::uint64_t segment_skips = 0;  // unfit segments passed over
  std::size_t memory_buffered = 0;  // bytes
};

using ProgressCallback = std::function<void(const ProgressEvent&)>;

/// Throttle with hysteresis: on above 70% of the budget, off again below
/// 50%.
class MemoryGuard {
 public:
  explicit MemoryGuard(std::size_t budget);

  /// Feeds the current buffered byte count; returns the throttle state.
  bool update(std::size_t buffered);
  bool throttled() const noexcept { return throttled_; }
  /// Number of off -> on transitions.
  std::uint64_t events() const noexcept { return events_; }
  std::size_t budget() const noexcept { return budget_; }

 private:
  std::size_t budget_;
  bool throttled_ = false;
  std::uint64_t events_ = 0;
};

/// Everything a slot resolved, plus its encoded output.
struct SlotResult {
  SampleRecord record;
  std::size_t segment_index = 0;  // into shuffled_segments()
  std::size_t font_index = 0;
  std::size_t background_option = 0;
  AugmentationRecipe recipe;
  RenderPlan plan;
  std::uint64_t segment_skips = 0;
  std::uint64_t missing_glyphs = 0;
  std::vector<std::string> warnings;
};

/// A prepared run: corpus segmented and shuffled, fonts and backgrounds
/// loaded. Slots are pure functions of (config, index), so any thread may
/// render any slot.
class Generator {
 public:
  /// Validates the configuration and loads every input. Throws
  /// ConfigError or Error.
  explicit Generator(GeneratorConfig config);

  const GeneratorConfig& config() const noexcept { return config_; }
  const PreparedSegments& prepared() const noexcept { return prepared_; }
  /// Valid segments after the seeded shuffle; slot i starts at i mod M.
  const std::vector<Segment>& shuffled_segments() const noexcept { return prepared_.segments; }
  const FontSet& fonts() const noexcept { return fonts_; }
  const std::vector<std::string>& font_names() const noexcept { return font_names_; }
  const BackgroundLibrary& backgrounds() const noexcept { return *backgrounds_; }
  /// Font coverage warnings found while loading.
  const std::vector<std::string>& warnings() const noexcept { return warnings_; }

  SlotResult render_slot(std::uint64_t index) const;

  /// Runs every slot and writes the dataset to config().output.
  DatasetManifest generate(const ProgressCallback& progress = {},
                           const std::atomic<bool>* cancel = nullptr) const;

  /// The first `count` records exactly as generate() would produce them.
  std::vector<SampleRecord> preview(std::size_t count) const;

 private:
  DatasetManifest run(const ProgressCallback& progress,
                      const std::atomic<bool>* cancel) const;

  GeneratorConfig config_;
  PreparedSegments prepared_;
  FontSet fonts_;
  std::vector<double> percentages_;
  std::vector<std::string> font_names_;
  std::unique_ptr<BackgroundLibrary> backgrounds_;
  std::vector<std::string> warnings_;
};

/// Fisher-Yates, descending, j = int_range(0, i).
template <typename T>
void shuffle_in_place(std::vector<T>& items, Lcg& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.int_range(0, static_cast<std::int64_t>(i - 1)));
    std::swap(items[i - 1], items[j]);
  }
}

DatasetManifest generate(const GeneratorConfig& config, const ProgressCallback& progress = {},
                         const std::atomic<bool>* cancel = nullptr);
std::vector<SampleRecord> preview(const GeneratorConfig& config, std::size_t count);

/// Loads the corpus named by the configuration (inline text wins).
Corpus load_corpus(const GeneratorConfig& config);

}  // namespace textsynth
