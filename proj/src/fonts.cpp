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

#include "textsynth/fonts.hpp"

#include <ft2build.h>
#include FT_FREETYPE_H
#include <hb.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>

#include "textsynth/error.hpp"
#include "textsynth/textprep.hpp"
#include "textsynth/unicode.hpp"

namespace textsynth {
namespace {

std::atomic<std::uint64_t> next_face_id{1};

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

}  // namespace

FontFace::~FontFace() {
  if (hb_font_ != nullptr) hb_font_destroy(hb_font_);
  if (hb_face_ != nullptr) hb_face_destroy(hb_face_);
}

std::shared_ptr<const FontFace> FontFace::load(const std::filesystem::path& path) {
  Bytes data;
  try {
    data = read_file(path);
  } catch (const Error&) {
    throw Error(ErrorCode::kFontUnreadable, "cannot read font " + path.string());
  }
  return from_bytes(std::move(data), path.string());
}

std::shared_ptr<const FontFace> FontFace::from_bytes(Bytes data,
                                                     std::string source_name) {
  std::shared_ptr<FontFace> font(new FontFace());
  font->data_ = std::move(data);

  FT_Library library = nullptr;
  if (FT_Init_FreeType(&library) != 0) {
    throw Error(ErrorCode::kFontUnparseable, "FreeType initialization failed");
  }
  FT_Face face = nullptr;
  const FT_Error err = FT_New_Memory_Face(
      library, reinterpret_cast<const FT_Byte*>(font->data_.data()),
      static_cast<FT_Long>(font->data_.size()), 0, &face);
  if (err != 0 || face == nullptr || !FT_IS_SCALABLE(face) ||
      face->num_glyphs <= 0 || face->units_per_EM == 0) {
    if (face != nullptr) FT_Done_Face(face);
    FT_Done_FreeType(library);
    throw Error(ErrorCode::kFontUnparseable,
                "not a usable TrueType/OpenType font: " + source_name);
  }
  font->family_name_ = face->family_name ? face->family_name : "";
  font->style_name_ = face->style_name ? face->style_name : "";
  font->units_per_em_ = face->units_per_EM;
  font->glyph_count_ = static_cast<unsigned>(face->num_glyphs);
  FT_Done_Face(face);
  FT_Done_FreeType(library);

  hb_blob_t* blob = hb_blob_create(
      reinterpret_cast<const char*>(font->data_.data()),
      static_cast<unsigned>(font->data_.size()), HB_MEMORY_MODE_READONLY,
      nullptr, nullptr);
  font->hb_face_ = hb_face_create(blob, 0);
  hb_blob_destroy(blob);
  hb_face_make_immutable(font->hb_face_);
  if (hb_face_get_glyph_count(font->hb_face_) == 0) {
    throw Error(ErrorCode::kFontUnparseable,
                "font has no glyphs: " + source_name);
  }
  font->hb_font_ = hb_font_create(font->hb_face_);
  hb_font_make_immutable(font->hb_font_);
  font->id_ = next_face_id.fetch_add(1);
  return font;
}

bool FontFace::has_glyph(char32_t c) const {
  hb_codepoint_t glyph = 0;
  return hb_font_get_nominal_glyph(hb_font_, c, &glyph) && glyph != 0;
}

FontEntry load_font(const std::filesystem::path& path, double percentage) {
  FontEntry entry;
  entry.face = FontFace::load(path);
  entry.display_name = entry.face->family_name();
  if (!entry.face->style_name().empty() && entry.face->style_name() != "Regular" &&
      entry.face->style_name() != "Book") {
    entry.display_name += " " + entry.face->style_name();
  }
  entry.percentage = percentage;
  entry.source_path = path.string();
  return entry;
}

const std::vector<char32_t>& arabic_coverage_probe() {
  static const std::vector<char32_t> probe = {
      0x0627, 0x0628, 0x062A, 0x062C, 0x062F, 0x0631, 0x0633, 0x0639,
      0x0641, 0x0642, 0x0644, 0x0645, 0x0646, 0x0647, 0x0648, 0x064A};
  return probe;
}

std::optional<std::string> coverage_warning(const FontFace& face,
                                            const ScriptPolicy& policy) {
  if (!policy.covers_arabic()) return std::nullopt;
  std::string missing;
  for (char32_t c : arabic_coverage_probe()) {
    if (!face.has_glyph(c)) {
      if (!missing.empty()) missing += ", ";
      missing += unicode::format_code_point(c);
    }
  }
  if (missing.empty()) return std::nullopt;
  return "font '" + face.family_name() + "' lacks Arabic glyphs: " + missing;
}

std::vector<std::string> check_percentages(const std::vector<double>& percentages) {
  std::vector<std::string> problems;
  if (percentages.empty()) {
    problems.push_back("at least one font is required");
    return problems;
  }
  double sum = 0.0;
  for (double p : percentages) {
    if (!(p > 0.0) || p > 100.0) {
      problems.push_back("percentage " + format_number(p) +
                         " outside (0, 100]");
    }
    sum += p;
  }
  if (std::abs(sum - 100.0) > 0.01) {
    problems.push_back("percentages sum to " + format_number(sum) +
                       ", expected 100");
  }
  return problems;
}

FontSet::FontSet(std::vector<FontEntry> entries) : entries_(std::move(entries)) {
  std::vector<double> percentages;
  for (const FontEntry& e : entries_) percentages.push_back(e.percentage);
  std::vector<FieldIssue> issues;
  for (std::string& p : check_percentages(percentages)) {
    issues.push_back({"fonts[].percentage", std::move(p)});
  }
  for (const FontEntry& e : entries_) {
    if (!e.face) issues.push_back({"fonts[].path", "font not loaded"});
  }
  if (!issues.empty()) throw ConfigError(std::move(issues));
}

std::size_t select_font_index(const std::vector<double>& percentages, Lcg& rng) {
  const double u = rng.next() * 100.0;
  double cumulative = 0.0;
  for (std::size_t i = 0; i < percentages.size(); ++i) {
    cumulative += percentages[i];
    if (u < cumulative) return i;
  }
  return percentages.empty() ? 0 : percentages.size() - 1;
}

const FontEntry& select_font(const FontSet& fonts, Lcg& rng) {
  std::vector<double> percentages;
  percentages.reserve(fonts.size());
  for (const FontEntry& e : fonts.entries()) percentages.push_back(e.percentage);
  return fonts[select_font_index(percentages, rng)];
}

void SizePolicy::validate() const {
  std::vector<FieldIssue> issues;
  if (min_px < 1) issues.push_back({"size.min", "must be at least 1 pixel"});
  if (max_px < min_px) {
    issues.push_back({"size.max", "must be >= size.min (" +
                                      std::to_string(min_px) + ")"});
  }
  if (!issues.empty()) throw ConfigError(std::move(issues));
}

int size_from_deviate(const SizePolicy& policy, double g) {
  const double z = std::round(policy.mean() + policy.stddev() * g);
  return static_cast<int>(std::clamp(z, double(policy.min_px), double(policy.max_px)));
}

int sample_size(const SizePolicy& policy, Lcg& rng) {
  if (policy.distribution == SizeDistribution::kNormal) {
    return size_from_deviate(policy, rng.gaussian());
  }
  const double v = rng.uniform_range(policy.min_px, policy.max_px + 1.0);
  return std::min(static_cast<int>(std::floor(v)), policy.max_px);
}

}  // namespace textsynth
