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
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "textsynth/fonts.hpp"
#include "textsynth/prng.hpp"
#include "textsynth/raster.hpp"

namespace textsynth {

enum class TextDirection { kRtl, kLtr };
enum class Alignment { kLeft, kCenter, kRight };

const char* to_string(TextDirection d);
const char* to_string(Alignment a);
std::optional<TextDirection> parse_direction(std::string_view s);
std::optional<Alignment> parse_alignment(std::string_view s);

// ---------------------------------------------------------------------------
// Backgrounds

struct BackgroundSpec {
  enum class Mode { kColor, kImage, kMix };

  Mode mode = Mode::kColor;
  Rgb color{255, 255, 255};
  std::string image_path;
  std::string name;          // used in statistics; defaults to color/path
  double percentage = 100.0; // weight when this spec is a mix option
  std::vector<BackgroundSpec> options;

  static BackgroundSpec solid(Rgb c, std::string name = {});
  std::string label() const;
  /// Throws ConfigError: mix depth > 1, empty mix, weights not summing to
  /// 100 within 0.01, non-positive weights, missing image path.
  void validate() const;
};

/// Documented color presets accepted wherever a COLOR is expected.
std::optional<Rgb> background_preset(std::string_view name);
std::vector<std::pair<std::string, Rgb>> background_presets();

struct ResolvedBackground {
  std::size_t option = 0;  // index into the mix, 0 for non-mix
  std::string name;
  Rgb base_color;          // fill color for geometric transforms
};

/// Background options with image sources decoded and stretched to the
/// canvas once; immutable afterwards, so shareable across workers.
class BackgroundLibrary {
 public:
  BackgroundLibrary(const BackgroundSpec& spec, int width, int height);

  /// Consumes one uniform for mix specs and none otherwise.
  ResolvedBackground resolve(Lcg& rng) const;
  RasterImage render(const ResolvedBackground& resolved) const;

  std::size_t option_count() const { return options_.size(); }
  const std::string& option_name(std::size_t i) const { return options_[i].name; }

 private:
  struct Option {
    std::string name;
    Rgb base_color;
    std::shared_ptr<const RasterImage> image;
  };

  bool mix_ = false;
  std::vector<double> weights_;
  std::vector<Option> options_;
  int width_ = 0;
  int height_ = 0;
};

RasterImage render_background(const BackgroundSpec& spec, int width, int height,
                              Lcg& rng);

// ---------------------------------------------------------------------------
// Shaping and layout

/// Glyph placed relative to the run origin, in 26.6 fixed-point pixels.
struct PositionedGlyph {
  std::uint32_t glyph_id = 0;
  std::int64_t x = 0;
  std::int64_t y = 0;  // positive is up
};

struct ShapedRun {
  std::vector<PositionedGlyph> glyphs;  // visual order, left to right
  std::int64_t advance = 0;             // 26.6
  std::int64_t ascender = 0;            // 26.6, positive
  std::int64_t descender = 0;           // 26.6, negative
  int size_px = 0;
  int missing_glyphs = 0;

  double width_px() const { return static_cast<double>(advance) / 64.0; }
};

/// Bidi resolution (paragraph level from `direction`) followed by OpenType
/// shaping of each directional run: joining forms, ligatures and mark
/// attachment.
ShapedRun shape_text(const FontFace& face, std::string_view text, int size_px,
                     TextDirection direction);

struct FitResult {
  bool fits = false;
  int size_px = 0;
  ShapedRun run;
  double text_width = 0.0;
};

inline constexpr int kMinFitSize = 8;

/// Shrinks the size one pixel at a time until the run fits between the
/// paddings; fits == false when it is still too wide at kMinFitSize.
FitResult measure_and_fit(std::string_view text, const FontFace& face,
                          int size_px, int canvas_width, double pad_left,
                          double pad_right, TextDirection direction);

/// Leading (visual-left) edge of the text box. RTL: left -> W - p_r - w,
/// center -> (W - w) / 2, right -> p_l; LTR mirrors.
double compute_origin(int canvas_width, double text_width, Alignment alignment,
                      TextDirection direction, double pad_left, double pad_right);

struct RenderPlan {
  std::string text;
  std::shared_ptr<const FontFace> font;
  std::string font_name;
  int size_px = 0;
  Rgb text_color{0, 0, 0};
  ResolvedBackground background;
  TextDirection direction = TextDirection::kRtl;
  Alignment alignment = Alignment::kLeft;
  double pad_left = 10.0;
  double pad_right = 10.0;
  double x_start = 0.0;
  double text_width = 0.0;
  bool antialias = true;
  ShapedRun run;
};

/// Fills text, font, size, paddings, direction, alignment; shapes, fits
/// and places the run. Returns std::nullopt when the text cannot fit.
std::optional<RenderPlan> make_plan(std::string text,
                                    std::shared_ptr<const FontFace> font,
                                    int size_px, int canvas_width,
                                    TextDirection direction, Alignment alignment,
                                    double pad_left, double pad_right);

/// Baseline (y-down pixels, 26.6) centering the ascent-descent box on H/2.
std::int64_t baseline_for(const ShapedRun& run, int canvas_height);

/// Coverage-blends the run in text_color over `background`.
RasterImage render(const RenderPlan& plan, const RasterImage& background);

}  // namespace textsynth
