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
#include <filesystem>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "textsynth/error.hpp"
#include "textsynth/image_io.hpp"
#include "textsynth/renderer.hpp"

using namespace textsynth;

namespace {

std::shared_ptr<const FontFace> sans() {
  static const auto face = FontFace::load(oracle::font_path("DejaVuSans.ttf"));
  return face;
}

struct InkBox {
  int min_x = 1 << 30;
  int max_x = -1;
  double centroid = 0.0;
  std::size_t pixels = 0;
};

// Ink = pixels that differ from the background, restricted to [x0, x1).
InkBox ink(const RasterImage& img, Rgb bg, int x0 = 0, int x1 = -1) {
  if (x1 < 0) x1 = img.width();
  InkBox box;
  double sum = 0.0;
  for (int y = 0; y < img.height(); ++y) {
    for (int x = x0; x < x1; ++x) {
      if (img.at(x, y) == bg) continue;
      box.min_x = std::min(box.min_x, x);
      box.max_x = std::max(box.max_x, x);
      sum += x;
      ++box.pixels;
    }
  }
  if (box.pixels > 0) box.centroid = sum / static_cast<double>(box.pixels);
  return box;
}

RasterImage render_text(const std::string& text, int size, TextDirection dir,
                        Alignment align, Rgb fg = {0, 0, 0}, Rgb bg = {255, 255, 255},
                        int width = 256, int height = 64) {
  auto plan = make_plan(text, sans(), size, width, dir, align, 10, 10);
  REQUIRE(plan.has_value());
  plan->text_color = fg;
  return render(*plan, RasterImage(width, height, bg));
}

}  // namespace

TEST_SUITE("renderer") {

TEST_CASE("origin arithmetic") {
  CHECK(compute_origin(256, 100, Alignment::kLeft, TextDirection::kRtl, 10, 10) == 146);
  CHECK(compute_origin(256, 100, Alignment::kCenter, TextDirection::kRtl, 10, 10) == 78);
  CHECK(compute_origin(256, 100, Alignment::kRight, TextDirection::kRtl, 10, 10) == 10);
  CHECK(compute_origin(256, 256, Alignment::kCenter, TextDirection::kRtl, 0, 0) == 0);
  CHECK(compute_origin(256, 100, Alignment::kLeft, TextDirection::kLtr, 10, 10) == 10);
  CHECK(compute_origin(256, 100, Alignment::kCenter, TextDirection::kLtr, 10, 10) == 78);
  CHECK(compute_origin(256, 100, Alignment::kRight, TextDirection::kLtr, 10, 10) == 146);
}

TEST_CASE("solid and mix backgrounds") {
  Lcg rng(1);
  const RasterImage white = render_background(BackgroundSpec::solid({255, 255, 255}), 16, 8, rng);
  CHECK(white == RasterImage(16, 8, {255, 255, 255}));
  CHECK(rng == Lcg(1));

  BackgroundSpec mix;
  mix.mode = BackgroundSpec::Mode::kMix;
  const double weights[] = {30, 25, 20, 15, 10};
  const char* names[] = {"white", "aged", "book", "newspaper", "parchment"};
  for (int i = 0; i < 5; ++i) {
    BackgroundSpec o = BackgroundSpec::solid(*background_preset(names[i]), names[i]);
    o.percentage = weights[i];
    mix.options.push_back(o);
  }
  mix.validate();
  BackgroundLibrary lib(mix, 16, 8);
  Lcg pick(oracle::state_before_uniform(0.99));
  const ResolvedBackground r = lib.resolve(pick);
  CHECK(r.option == 4);
  CHECK(r.name == "parchment");
  CHECK(lib.render(r).at(3, 3) == *background_preset("parchment"));

  BackgroundSpec single;
  single.mode = BackgroundSpec::Mode::kMix;
  single.options = {BackgroundSpec::solid({1, 2, 3})};
  BackgroundLibrary one(single, 4, 4);
  Lcg a(5), b(5);
  for (int i = 0; i < 20; ++i) CHECK(one.resolve(a).option == 0);
  for (int i = 0; i < 20; ++i) b.next();
  CHECK(a == b);
}

TEST_CASE("mix validation") {
  BackgroundSpec mix;
  mix.mode = BackgroundSpec::Mode::kMix;
  BackgroundSpec a = BackgroundSpec::solid({0, 0, 0});
  a.percentage = 60;
  BackgroundSpec b = BackgroundSpec::solid({9, 9, 9});
  b.percentage = 50;
  mix.options = {a, b};
  CHECK_THROWS_AS(mix.validate(), ConfigError);
  b.percentage = 40;
  mix.options = {a, b};
  CHECK_NOTHROW(mix.validate());
  BackgroundSpec nested = mix;
  nested.percentage = 100;
  BackgroundSpec outer;
  outer.mode = BackgroundSpec::Mode::kMix;
  outer.options = {nested};
  CHECK_THROWS_AS(outer.validate(), ConfigError);
}

TEST_CASE("image backgrounds are stretched to the canvas") {
  RasterImage src(2, 1);
  src.set(0, 0, {255, 0, 0});
  src.set(1, 0, {0, 0, 255});
  const auto path = std::filesystem::temp_directory_path() / "textsynth_bg_test.png";
  write_file(path, encode_png(src));
  BackgroundSpec spec;
  spec.mode = BackgroundSpec::Mode::kImage;
  spec.image_path = path.string();
  Lcg rng(1);
  const RasterImage out = render_background(spec, 20, 10, rng);
  CHECK(out.width() == 20);
  CHECK(out.height() == 10);
  CHECK(out.at(0, 0) == Rgb{255, 0, 0});
  CHECK(out.at(19, 9) == Rgb{0, 0, 255});
  std::filesystem::remove(path);

  spec.image_path = "/nonexistent.png";
  CHECK_THROWS_AS(render_background(spec, 4, 4, rng), Error);
}

TEST_CASE("fit keeps short words and rejects impossible ones") {
  const FitResult f = measure_and_fit("\xD8\xB3\xD9\x84\xD8\xA7\xD9\x85", *sans(), 35, 256, 10, 10,
                                      TextDirection::kRtl);
  CHECK(f.fits);
  CHECK(f.size_px == 35);
  const FitResult g = measure_and_fit(std::string(60, 'W'), *sans(), 35, 64, 10, 10,
                                      TextDirection::kLtr);
  CHECK_FALSE(g.fits);
  CHECK(g.size_px == kMinFitSize);
  const FitResult h = measure_and_fit(std::string(12, 'W'), *sans(), 40, 256, 10, 10,
                                      TextDirection::kLtr);
  CHECK(h.fits);
  CHECK(h.size_px < 40);
  CHECK(h.text_width <= 236.0);
}

TEST_CASE("shaped width grows with size") {
  double prev = 0.0;
  for (int z = 8; z <= 48; ++z) {
    const double w = shape_text(*sans(), "\xD8\xB3\xD9\x84\xD8\xA7\xD9\x85 abc", z,
                                TextDirection::kRtl).width_px();
    CHECK(w >= prev);
    prev = w;
  }
}

TEST_CASE("Arabic shaping uses contextual forms") {
  // Isolated beh repeated vs joined: joined forms differ from isolated ones.
  const ShapedRun joined = shape_text(*sans(), "\xD8\xA8\xD8\xA8\xD8\xA8", 32, TextDirection::kRtl);
  const ShapedRun isolated = shape_text(*sans(), "\xD8\xA8", 32, TextDirection::kRtl);
  REQUIRE(joined.glyphs.size() == 3);
  REQUIRE(isolated.glyphs.size() == 1);
  std::set<std::uint32_t> ids;
  for (const auto& g : joined.glyphs) ids.insert(g.glyph_id);
  CHECK(ids.size() == 3);  // initial, medial, final
  CHECK(ids.count(isolated.glyphs[0].glyph_id) == 0);
}

TEST_CASE("untouched pixels keep the background and full coverage gives the text color") {
  const Rgb fg{200, 30, 40};
  const Rgb bg{10, 220, 90};
  const RasterImage img = render_text("I", 48, TextDirection::kLtr, Alignment::kCenter, fg, bg);
  CHECK(img.at(0, 0) == bg);
  CHECK(img.at(255, 63) == bg);
  bool full = false;
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) full |= img.at(x, y) == fg;
  }
  CHECK(full);
}

TEST_CASE("binary mode emits only two colors") {
  auto plan = make_plan("\xD8\xB3\xD9\x84\xD8\xA7\xD9\x85", sans(), 30, 256,
                        TextDirection::kRtl, Alignment::kLeft, 10, 10);
  REQUIRE(plan);
  plan->antialias = false;
  const RasterImage img = render(*plan, RasterImage(256, 64));
  std::size_t ink_pixels = 0;
  for (int y = 0; y < 64; ++y) {
    for (int x = 0; x < 256; ++x) {
      const Rgb c = img.at(x, y);
      const bool bg = c == Rgb{255, 255, 255};
      REQUIRE((bg || c == Rgb{0, 0, 0}));
      ink_pixels += bg ? 0 : 1;
    }
  }
  CHECK(ink_pixels > 0);
}

TEST_CASE("rendering is deterministic") {
  const RasterImage a = render_text("\xD9\x85\xD8\xAA\xD9\x86", 33, TextDirection::kRtl, Alignment::kLeft);
  const RasterImage b = render_text("\xD9\x85\xD8\xAA\xD9\x86", 33, TextDirection::kRtl, Alignment::kLeft);
  CHECK(a == b);
}

TEST_CASE("ink stays inside the measured box") {
  const char* samples[] = {"\xD8\xB3\xD9\x84\xD8\xA7\xD9\x85", "abc xyz", "\xD9\x83\xD8\xAA\xD8\xA7\xD8\xA8 12",
                           "Wy\xD8\xA8"};
  for (const char* s : samples) {
    for (Alignment a : {Alignment::kLeft, Alignment::kCenter, Alignment::kRight}) {
      for (TextDirection d : {TextDirection::kRtl, TextDirection::kLtr}) {
        auto plan = make_plan(s, sans(), 36, 256, d, a, 10, 10);
        REQUIRE(plan);
        const RasterImage img = render(*plan, RasterImage(256, 64));
        const InkBox box = ink(img, {255, 255, 255});
        REQUIRE(box.pixels > 0);
        const double slack = plan->size_px / 2.0;
        CHECK(box.min_x >= plan->x_start - slack);
        CHECK(box.max_x <= plan->x_start + plan->text_width + slack);
      }
    }
  }
}

TEST_CASE("first logical word lands on the right in RTL") {
  // A one-letter word followed by a long word; the gap between them splits
  // the ink into a narrow and a wide part.
  const std::string first = "\xD8\xA8";
  const std::string second = "\xD8\xB3\xD8\xB3\xD8\xB3\xD8\xB3\xD8\xB3";
  const RasterImage img = render_text(first + " " + second, 32, TextDirection::kRtl, Alignment::kCenter);
  const Rgb white{255, 255, 255};
  const InkBox all = ink(img, white);
  // Find the widest run of blank columns inside the ink span.
  int best_start = -1, best_len = 0, run_start = -1;
  for (int x = all.min_x; x <= all.max_x; ++x) {
    const bool blank = ink(img, white, x, x + 1).pixels == 0;
    if (blank && run_start < 0) run_start = x;
    if (!blank && run_start >= 0) {
      if (x - run_start > best_len) {
        best_len = x - run_start;
        best_start = run_start;
      }
      run_start = -1;
    }
  }
  REQUIRE(best_len > 0);
  const InkBox left = ink(img, white, 0, best_start);
  const InkBox right = ink(img, white, best_start + best_len, img.width());
  // The short first word is the right-hand part.
  CHECK(right.max_x - right.min_x < left.max_x - left.min_x);
  CHECK(right.centroid > left.centroid);
}

TEST_CASE("diacritics reach the raster") {
  const RasterImage base = render_text("\xD8\xA8", 36, TextDirection::kRtl, Alignment::kLeft);
  for (const char* mark : {"\xD9\x94", "\xD9\x95", "\xD9\x96", "\xD9\x97"}) {
    const RasterImage marked =
        render_text(std::string("\xD8\xA8") + mark, 36, TextDirection::kRtl, Alignment::kLeft);
    CHECK_FALSE(base == marked);
  }
}

TEST_CASE("missing glyphs are counted and drawn as boxes") {
  const ShapedRun run = shape_text(*sans(), "\xE0\xA4\x95", 30, TextDirection::kLtr);  // U+0915
  CHECK(run.missing_glyphs == 1);
  const RasterImage img = render_text("\xE0\xA4\x95", 30, TextDirection::kLtr, Alignment::kLeft);
  CHECK(ink(img, {255, 255, 255}).pixels > 0);
}

TEST_CASE("baseline centers the ascent-descent box") {
  const ShapedRun run = shape_text(*sans(), "x", 40, TextDirection::kLtr);
  const std::int64_t b = baseline_for(run, 64);
  const double top = (b - run.ascender) / 64.0;
  const double bottom = (b - run.descender) / 64.0;
  CHECK((top + bottom) / 2.0 == doctest::Approx(32.0).epsilon(0.02));
}

}
