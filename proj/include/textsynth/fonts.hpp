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
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "textsynth/image_io.hpp"
#include "textsynth/prng.hpp"

struct hb_face_t;
struct hb_font_t;

namespace textsynth {

struct ScriptPolicy;

/// A parsed TrueType/OpenType face. Immutable and shareable across threads;
/// the HarfBuzz objects are made immutable at construction.
class FontFace : public std::enable_shared_from_this<FontFace> {
 public:
  ~FontFace();
  FontFace(const FontFace&) = delete;
  FontFace& operator=(const FontFace&) = delete;

  /// Throws kFontUnreadable / kFontUnparseable.
  static std::shared_ptr<const FontFace> load(const std::filesystem::path& path);
  static std::shared_ptr<const FontFace> from_bytes(Bytes data,
                                                    std::string source_name);

  /// Process-unique id, used to key per-thread rasterizer caches.
  std::uint64_t id() const noexcept { return id_; }
  const std::string& family_name() const noexcept { return family_name_; }
  const std::string& style_name() const noexcept { return style_name_; }
  const Bytes& data() const noexcept { return data_; }
  unsigned units_per_em() const noexcept { return units_per_em_; }
  unsigned glyph_count() const noexcept { return glyph_count_; }

  hb_face_t* hb_face() const noexcept { return hb_face_; }
  /// Unscaled font at units-per-em; callers create scaled sub-fonts.
  hb_font_t* hb_font() const noexcept { return hb_font_; }

  bool has_glyph(char32_t c) const;

 private:
  FontFace() = default;

  std::uint64_t id_ = 0;
  Bytes data_;
  std::string family_name_;
  std::string style_name_;
  unsigned units_per_em_ = 0;
  unsigned glyph_count_ = 0;
  hb_face_t* hb_face_ = nullptr;
  hb_font_t* hb_font_ = nullptr;
};

struct FontEntry {
  std::shared_ptr<const FontFace> face;
  std::string display_name;
  double percentage = 100.0;
  std::string source_path;
};

/// Loads and parses a face; no fallback substitution on failure.
FontEntry load_font(const std::filesystem::path& path, double percentage);

/// Empty when the face covers the policy's script; otherwise a message
/// naming the sample code points the face lacks. Only Arabic-script
/// policies are checked.
std::optional<std::string> coverage_warning(const FontFace& face,
                                            const ScriptPolicy& policy);

/// Code points probed by coverage_warning.
const std::vector<char32_t>& arabic_coverage_probe();

class FontSet {
 public:
  FontSet() = default;
  /// Throws ConfigError unless K >= 1, every percentage > 0 and the sum is
  /// 100 within 0.01.
  explicit FontSet(std::vector<FontEntry> entries);

  const std::vector<FontEntry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  const FontEntry& operator[](std::size_t i) const { return entries_[i]; }

 private:
  std::vector<FontEntry> entries_;
};

/// Validates percentages against the FontSet invariants and returns the
/// issues (field path fonts[].percentage) without loading anything.
std::vector<std::string> check_percentages(const std::vector<double>& percentages);

/// Inverse-transform selection by cumulative percentage; consumes exactly
/// one uniform. Returns the entry index.
std::size_t select_font_index(const std::vector<double>& percentages, Lcg& rng);
const FontEntry& select_font(const FontSet& fonts, Lcg& rng);

enum class SizeDistribution { kNormal, kUniform };

struct SizePolicy {
  int min_px = 28;
  int max_px = 42;
  SizeDistribution distribution = SizeDistribution::kNormal;

  double mean() const { return (min_px + max_px) / 2.0; }
  double stddev() const { return (max_px - min_px) / 6.0; }
  void validate() const;
};

/// Normal: round(mu + sigma * g) clipped (two uniforms). Uniform:
/// floor(uniform_range(min, max + 1)) (one uniform).
int sample_size(const SizePolicy& policy, Lcg& rng);

/// Normal-mode size for an explicit deviate, exposed for testing.
int size_from_deviate(const SizePolicy& policy, double g);

}  // namespace textsynth
