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

#include "textsynth/renderer.hpp"

#include <ft2build.h>
#include FT_FREETYPE_H
#include FT_OUTLINE_H
#include <hb.h>
#include <hb-ot.h>
#include <unicode/ubidi.h>
#include <unicode/unistr.h>

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "textsynth/error.hpp"
#include "textsynth/image_io.hpp"

namespace textsynth {
namespace {

constexpr std::size_t kMaxCachedFaces = 64;

// Per-thread FreeType faces and sized HarfBuzz fonts. FreeType faces are
// not safe for concurrent use, so each worker owns its own.
class ThreadFontCache {
 public:
  ThreadFontCache() {
    if (FT_Init_FreeType(&library_) != 0) library_ = nullptr;
  }
  ~ThreadFontCache() {
    clear();
    if (library_ != nullptr) FT_Done_FreeType(library_);
  }
  ThreadFontCache(const ThreadFontCache&) = delete;
  ThreadFontCache& operator=(const ThreadFontCache&) = delete;

  FT_Face ft_face(const FontFace& face, int size_px) {
    Entry& e = entry(face);
    if (e.ft == nullptr) {
      if (library_ == nullptr ||
          FT_New_Memory_Face(library_,
                             reinterpret_cast<const FT_Byte*>(face.data().data()),
                             static_cast<FT_Long>(face.data().size()), 0,
                             &e.ft) != 0) {
        e.ft = nullptr;
        throw Error(ErrorCode::kFontUnparseable,
                    "cannot open face " + face.family_name());
      }
    }
    if (e.ft_size != size_px) {
      FT_Set_Char_Size(e.ft, static_cast<FT_F26Dot6>(size_px) * 64, 0, 72, 72);
      e.ft_size = size_px;
    }
    return e.ft;
  }

  hb_font_t* hb_font(const FontFace& face, int size_px) {
    Entry& e = entry(face);
    auto it = e.hb_fonts.find(size_px);
    if (it != e.hb_fonts.end()) return it->second;
    hb_font_t* font = hb_font_create(face.hb_face());
    hb_ot_font_set_funcs(font);
    hb_font_set_scale(font, size_px * 64, size_px * 64);
    e.hb_fonts.emplace(size_px, font);
    return font;
  }

 private:
  struct Entry {
    std::shared_ptr<const FontFace> owner;
    FT_Face ft = nullptr;
    int ft_size = 0;
    std::unordered_map<int, hb_font_t*> hb_fonts;
  };

  Entry& entry(const FontFace& face) {
    auto it = entries_.find(face.id());
    if (it != entries_.end()) return it->second;
    if (entries_.size() >= kMaxCachedFaces) clear();
    Entry& e = entries_[face.id()];
    e.owner = face.shared_from_this();
    return e;
  }

  void clear() {
    for (auto& [id, e] : entries_) {
      for (auto& [size, font] : e.hb_fonts) hb_font_destroy(font);
      if (e.ft != nullptr) FT_Done_Face(e.ft);
    }
    entries_.clear();
  }

  FT_Library library_ = nullptr;
  std::unordered_map<std::uint64_t, Entry> entries_;
};

ThreadFontCache& font_cache() {
  thread_local ThreadFontCache cache;
  return cache;
}

std::int64_t floor_div64(std::int64_t v) {
  return v >= 0 ? v / 64 : -((-v + 63) / 64);
}

void shape_range(hb_font_t* font, const icu::UnicodeString& text, int32_t start,
                 int32_t length, bool rtl, ShapedRun& out) {
  hb_buffer_t* buf = hb_buffer_create();
  hb_buffer_add_utf16(buf, reinterpret_cast<const uint16_t*>(text.getBuffer()),
                      text.length(), static_cast<unsigned>(start), length);
  hb_buffer_set_direction(buf, rtl ? HB_DIRECTION_RTL : HB_DIRECTION_LTR);
  hb_buffer_guess_segment_properties(buf);
  hb_shape(font, buf, nullptr, 0);

  unsigned count = 0;
  const hb_glyph_info_t* info = hb_buffer_get_glyph_infos(buf, &count);
  const hb_glyph_position_t* pos = hb_buffer_get_glyph_positions(buf, &count);
  for (unsigned i = 0; i < count; ++i) {
    PositionedGlyph g;
    g.glyph_id = info[i].codepoint;
    g.x = out.advance + pos[i].x_offset;
    g.y = pos[i].y_offset;
    if (g.glyph_id == 0) ++out.missing_glyphs;
    out.glyphs.push_back(g);
    out.advance += pos[i].x_advance;
  }
  hb_buffer_destroy(buf);
}

}  // namespace

const char* to_string(TextDirection d) {
  return d == TextDirection::kRtl ? "rtl" : "ltr";
}

const char* to_string(Alignment a) {
  switch (a) {
    case Alignment::kLeft: return "left";
    case Alignment::kCenter: return "center";
    case Alignment::kRight: return "right";
  }
  return "left";
}

std::optional<TextDirection> parse_direction(std::string_view s) {
  if (s == "rtl") return TextDirection::kRtl;
  if (s == "ltr") return TextDirection::kLtr;
  return std::nullopt;
}

std::optional<Alignment> parse_alignment(std::string_view s) {
  if (s == "left") return Alignment::kLeft;
  if (s == "center") return Alignment::kCenter;
  if (s == "right") return Alignment::kRight;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Backgrounds

BackgroundSpec BackgroundSpec::solid(Rgb c, std::string name) {
  BackgroundSpec spec;
  spec.mode = Mode::kColor;
  spec.color = c;
  spec.name = std::move(name);
  return spec;
}

std::string BackgroundSpec::label() const {
  if (!name.empty()) return name;
  switch (mode) {
    case Mode::kColor: return to_hex(color);
    case Mode::kImage: return image_path;
    case Mode::kMix: return "mix";
  }
  return {};
}

void BackgroundSpec::validate() const {
  std::vector<FieldIssue> issues;
  auto check_leaf = [&](const BackgroundSpec& s, const std::string& path) {
    if (s.mode == Mode::kImage && s.image_path.empty()) {
      issues.push_back({path + ".image_path", "image background needs a path"});
    }
    if (s.mode == Mode::kMix) {
      issues.push_back({path + ".mode", "mix options cannot themselves be mixes"});
    }
  };
  if (mode != Mode::kMix) {
    check_leaf(*this, "background");
  } else {
    if (options.empty()) {
      issues.push_back({"background.options", "mix needs at least one option"});
    }
    double sum = 0.0;
    for (const BackgroundSpec& o : options) {
      check_leaf(o, "background.options[]");
      if (!(o.percentage > 0.0)) {
        issues.push_back({"background.options[].percentage", "must be positive"});
      }
      sum += o.percentage;
    }
    if (!options.empty() && std::abs(sum - 100.0) > 0.01) {
      char buf[64];
      std::snprintf(buf, sizeof(buf), "percentages sum to %g, expected 100", sum);
      issues.push_back({"background.options[].percentage", buf});
    }
  }
  if (!issues.empty()) throw ConfigError(std::move(issues));
}

std::vector<std::pair<std::string, Rgb>> background_presets() {
  return {
      {"white", {0xFF, 0xFF, 0xFF}},
      {"aged", {0xEF, 0xE4, 0xCC}},
      {"book", {0xF7, 0xF2, 0xE4}},
      {"newspaper", {0xE6, 0xE4, 0xDE}},
      {"parchment", {0xF1, 0xE2, 0xB9}},
  };
}

std::optional<Rgb> background_preset(std::string_view name) {
  for (const auto& [n, c] : background_presets()) {
    if (n == name) return c;
  }
  return std::nullopt;
}

BackgroundLibrary::BackgroundLibrary(const BackgroundSpec& spec, int width,
                                     int height)
    : width_(width), height_(height) {
  spec.validate();
  auto add = [&](const BackgroundSpec& s) {
    Option o;
    o.name = s.label();
    if (s.mode == BackgroundSpec::Mode::kImage) {
      RasterImage src = load_image(s.image_path);
      auto img = std::make_shared<RasterImage>(resize_bilinear(src, width, height));
      o.base_color = mean_color(*img);
      o.image = std::move(img);
    } else {
      o.base_color = s.color;
    }
    options_.push_back(std::move(o));
  };
  if (spec.mode == BackgroundSpec::Mode::kMix) {
    mix_ = true;
    for (const BackgroundSpec& o : spec.options) {
      add(o);
      weights_.push_back(o.percentage);
    }
  } else {
    add(spec);
  }
}

ResolvedBackground BackgroundLibrary::resolve(Lcg& rng) const {
  std::size_t index = 0;
  if (mix_) {
    const double u = rng.next() * 100.0;
    double cumulative = 0.0;
    index = weights_.size() - 1;
    for (std::size_t i = 0; i < weights_.size(); ++i) {
      cumulative += weights_[i];
      if (u < cumulative) {
        index = i;
        break;
      }
    }
  }
  return {index, options_[index].name, options_[index].base_color};
}

RasterImage BackgroundLibrary::render(const ResolvedBackground& resolved) const {
  const Option& o = options_.at(resolved.option);
  if (o.image) return *o.image;
  return RasterImage(width_, height_, o.base_color);
}

RasterImage render_background(const BackgroundSpec& spec, int width, int height,
                              Lcg& rng) {
  BackgroundLibrary library(spec, width, height);
  return library.render(library.resolve(rng));
}

// ---------------------------------------------------------------------------
// Shaping and layout

ShapedRun shape_text(const FontFace& face, std::string_view text, int size_px,
                     TextDirection direction) {
  if (size_px < 1) throw Error(ErrorCode::kInvalidArgument, "font size must be >= 1");
  ShapedRun run;
  run.size_px = size_px;
  hb_font_t* font = font_cache().hb_font(face, size_px);

  hb_font_extents_t extents{};
  hb_font_get_h_extents(font, &extents);
  run.ascender = extents.ascender;
  run.descender = extents.descender;

  const icu::UnicodeString utf16 = icu::UnicodeString::fromUTF8(
      icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
  if (utf16.isEmpty()) return run;

  UErrorCode status = U_ZERO_ERROR;
  UBiDi* bidi = ubidi_open();
  ubidi_setPara(bidi, utf16.getBuffer(), utf16.length(),
                direction == TextDirection::kRtl ? 1 : 0, nullptr, &status);
  const int32_t runs = U_SUCCESS(status) ? ubidi_countRuns(bidi, &status) : 0;
  if (U_FAILURE(status)) {
    ubidi_close(bidi);
    throw Error(ErrorCode::kEncoding, "bidi resolution failed");
  }
  for (int32_t i = 0; i < runs; ++i) {
    int32_t start = 0;
    int32_t length = 0;
    const UBiDiDirection dir = ubidi_getVisualRun(bidi, i, &start, &length);
    shape_range(font, utf16, start, length, dir == UBIDI_RTL, run);
  }
  ubidi_close(bidi);
  return run;
}

FitResult measure_and_fit(std::string_view text, const FontFace& face,
                          int size_px, int canvas_width, double pad_left,
                          double pad_right, TextDirection direction) {
  if (size_px < 1) throw Error(ErrorCode::kInvalidArgument, "font size must be >= 1");
  const double available = canvas_width - pad_left - pad_right;
  FitResult result;
  int z = size_px;
  ShapedRun run = shape_text(face, text, z, direction);
  while (run.width_px() > available && z > kMinFitSize) {
    --z;
    run = shape_text(face, text, z, direction);
  }
  result.size_px = z;
  result.text_width = run.width_px();
  result.fits = result.text_width <= available;
  result.run = std::move(run);
  return result;
}

double compute_origin(int canvas_width, double text_width, Alignment alignment,
                      TextDirection direction, double pad_left, double pad_right) {
  const double w = canvas_width;
  if (alignment == Alignment::kCenter) return (w - text_width) / 2.0;
  const bool to_right_margin =
      (direction == TextDirection::kRtl) == (alignment == Alignment::kLeft);
  return to_right_margin ? w - pad_right - text_width : pad_left;
}

std::optional<RenderPlan> make_plan(std::string text,
                                    std::shared_ptr<const FontFace> font,
                                    int size_px, int canvas_width,
                                    TextDirection direction, Alignment alignment,
                                    double pad_left, double pad_right) {
  FitResult fit = measure_and_fit(text, *font, size_px, canvas_width, pad_left,
                                  pad_right, direction);
  if (!fit.fits) return std::nullopt;
  RenderPlan plan;
  plan.text = std::move(text);
  plan.font = std::move(font);
  plan.font_name = plan.font->family_name();
  plan.size_px = fit.size_px;
  plan.direction = direction;
  plan.alignment = alignment;
  plan.pad_left = pad_left;
  plan.pad_right = pad_right;
  plan.text_width = fit.text_width;
  plan.x_start = compute_origin(canvas_width, fit.text_width, alignment, direction,
                                pad_left, pad_right);
  plan.run = std::move(fit.run);
  return plan;
}

std::int64_t baseline_for(const ShapedRun& run, int canvas_height) {
  return static_cast<std::int64_t>(canvas_height) * 32 +
         (run.ascender + run.descender) / 2;
}

RasterImage render(const RenderPlan& plan, const RasterImage& background) {
  if (!plan.font) throw Error(ErrorCode::kInvalidArgument, "render plan has no font");
  const int width = background.width();
  const int height = background.height();
  std::vector<std::uint8_t> mask(static_cast<std::size_t>(width) * height, 0);

  FT_Face face = font_cache().ft_face(*plan.font, plan.run.size_px);
  const std::int64_t origin_x = std::llround(plan.x_start * 64.0);
  const std::int64_t baseline = baseline_for(plan.run, height);

  for (const PositionedGlyph& g : plan.run.glyphs) {
    if (FT_Load_Glyph(face, g.glyph_id, FT_LOAD_NO_HINTING | FT_LOAD_NO_BITMAP) != 0) {
      continue;
    }
    FT_GlyphSlot slot = face->glyph;
    if (slot->format != FT_GLYPH_FORMAT_OUTLINE) continue;
    const std::int64_t px = origin_x + g.x;
    const std::int64_t py = baseline - g.y;  // y-down
    const std::int64_t ix = floor_div64(px);
    const std::int64_t iy = floor_div64(py);
    FT_Outline_Translate(&slot->outline, static_cast<FT_Pos>(px - ix * 64),
                         -static_cast<FT_Pos>(py - iy * 64));
    if (FT_Render_Glyph(slot, FT_RENDER_MODE_NORMAL) != 0) continue;
    const FT_Bitmap& bm = slot->bitmap;
    const std::int64_t left = ix + slot->bitmap_left;
    const std::int64_t top = iy - slot->bitmap_top;
    for (unsigned row = 0; row < bm.rows; ++row) {
      const std::int64_t y = top + row;
      if (y < 0 || y >= height) continue;
      const unsigned char* src = bm.buffer + static_cast<std::ptrdiff_t>(row) * bm.pitch;
      for (unsigned col = 0; col < bm.width; ++col) {
        const std::int64_t x = left + col;
        if (x < 0 || x >= width) continue;
        const unsigned a = src[col];
        if (a == 0) continue;
        std::uint8_t& m = mask[static_cast<std::size_t>(y) * width + x];
        m = static_cast<std::uint8_t>(m + ((255u - m) * a + 127u) / 255u);
      }
    }
  }

  RasterImage out = background;
  auto pixels = out.pixels();
  const unsigned c[3] = {plan.text_color.r, plan.text_color.g, plan.text_color.b};
  for (std::size_t i = 0; i < mask.size(); ++i) {
    unsigned a = mask[i];
    if (!plan.antialias) a = a >= 128 ? 255 : 0;
    if (a == 0) continue;
    std::uint8_t* p = &pixels[i * 3];
    for (int ch = 0; ch < 3; ++ch) {
      p[ch] = static_cast<std::uint8_t>((a * c[ch] + (255u - a) * p[ch] + 127u) / 255u);
    }
  }
  return out;
}

}  // namespace textsynth
