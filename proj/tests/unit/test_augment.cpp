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
#include <numbers>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "textsynth/augment.hpp"
#include "textsynth/image_io.hpp"
#include "textsynth/renderer.hpp"

using namespace textsynth;

namespace {

RasterImage gradient(int w, int h) {
  RasterImage img(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      img.set(x, y, {static_cast<std::uint8_t>((x * 37 + y * 11) % 256),
                     static_cast<std::uint8_t>((x * 5 + y * 53) % 256),
                     static_cast<std::uint8_t>((x * y) % 256)});
    }
  }
  return img;
}

bool within(const RasterImage& a, const RasterImage& b, int tol) {
  if (a.width() != b.width() || a.height() != b.height()) return false;
  for (std::size_t i = 0; i < a.pixels().size(); ++i) {
    if (std::abs(int(a.pixels()[i]) - int(b.pixels()[i])) > tol) return false;
  }
  return true;
}

RasterImage text_image() {
  const auto face = FontFace::load(oracle::font_path("DejaVuSans.ttf"));
  auto plan = make_plan("\xD8\xB3\xD9\x84\xD8\xA7\xD9\x85 abc", face, 34, 256,
                        TextDirection::kRtl, Alignment::kLeft, 10, 10);
  REQUIRE(plan);
  return render(*plan, RasterImage(256, 64));
}

double psnr(const RasterImage& a, const RasterImage& b) {
  double se = 0.0;
  for (std::size_t i = 0; i < a.pixels().size(); ++i) {
    const double d = double(a.pixels()[i]) - double(b.pixels()[i]);
    se += d * d;
  }
  const double mse = se / static_cast<double>(a.pixels().size());
  return mse == 0.0 ? 1e9 : 10.0 * std::log10(255.0 * 255.0 / mse);
}

const Rgb kFill{255, 255, 255};

}  // namespace

TEST_SUITE("augment") {

TEST_CASE("names round-trip") {
  for (TransformKind k : kAllTransforms) CHECK(parse_transform_kind(to_string(k)) == k);
  CHECK(parse_transform_kind("gaussian-blur") == TransformKind::kGaussianBlur);
  CHECK_FALSE(parse_transform_kind("elastic").has_value());
}

TEST_CASE("closed gate gives an empty recipe") {
  AugmentationConfig c;
  c.p_aug = 0.0;
  Lcg rng(1);
  for (int i = 0; i < 1000; ++i) {
    const AugmentationRecipe r = plan_recipe(c, rng);
    REQUIRE_FALSE(r.applied);
    REQUIRE(r.steps.empty());
  }
}

TEST_CASE("recipes are distinct, ordered and in range") {
  const AugmentationConfig c;
  Lcg rng(17);
  for (int i = 0; i < 20000; ++i) {
    const AugmentationRecipe r = plan_recipe(c, rng);
    if (!r.applied) continue;
    REQUIRE(r.steps.size() >= 1);
    REQUIRE(r.steps.size() <= 4);
    for (std::size_t k = 1; k < r.steps.size(); ++k) {
      REQUIRE(static_cast<int>(r.steps[k - 1].kind) < static_cast<int>(r.steps[k].kind));
    }
    for (const TransformStep& s : r.steps) {
      const auto& p = s.params;
      switch (s.kind) {
        case TransformKind::kRotation: REQUIRE(std::abs(p[0]) <= 10.0); break;
        case TransformKind::kSkew:
          REQUIRE(std::abs(p[0]) <= 0.1);
          REQUIRE(std::abs(p[1]) <= 0.1);
          break;
        case TransformKind::kGaussianBlur: REQUIRE(c.blur_sigma.contains(p[0])); break;
        case TransformKind::kMotionBlur:
          REQUIRE(c.motion_length.contains(p[0]));
          REQUIRE(int(p[0]) % 2 == 1);
          REQUIRE(p[1] >= 0.0);
          REQUIRE(p[1] < 2 * std::numbers::pi);
          break;
        case TransformKind::kGaussianNoise: REQUIRE(c.noise_sigma.contains(p[0])); break;
        case TransformKind::kSaltPepper: REQUIRE(c.salt_pepper.contains(p[0])); break;
        case TransformKind::kJpeg: REQUIRE(c.jpeg_quality.contains(p[0])); break;
        case TransformKind::kResolution: REQUIRE(c.resolution.contains(p[0])); break;
        case TransformKind::kBrightness: REQUIRE(c.brightness.contains(p[0])); break;
        case TransformKind::kContrast: REQUIRE(c.contrast.contains(p[0])); break;
      }
    }
  }
}

TEST_CASE("recipe statistics under the uniform count rule") {
  const AugmentationConfig c;
  std::size_t augmented = 0, clean = 0, transforms = 0;
  std::array<std::size_t, 10> per_kind{};
  for (std::uint64_t i = 0; i < 100000; ++i) {
    Lcg rng = substream_for_sample(42, i);
    const AugmentationRecipe r = plan_recipe(c, rng);
    if (!r.applied) {
      ++clean;
      continue;
    }
    ++augmented;
    transforms += r.steps.size();
    for (const auto& s : r.steps) ++per_kind[static_cast<std::size_t>(s.kind)];
  }
  CHECK(std::abs(clean / 1e5 - 0.30) < 0.01);
  CHECK(std::abs(double(transforms) / augmented - 2.5) < 0.05);
  for (std::size_t k = 0; k < 10; ++k) {
    CHECK(std::abs(double(per_kind[k]) / augmented - 0.25) < 0.01);
  }
}

TEST_CASE("a subset of enabled transforms caps the count") {
  AugmentationConfig c;
  c.enabled = {TransformKind::kBrightness, TransformKind::kContrast};
  c.p_aug = 1.0;
  Lcg rng(3);
  for (int i = 0; i < 1000; ++i) {
    const AugmentationRecipe r = plan_recipe(c, rng);
    REQUIRE(r.steps.size() <= 2);
    for (const auto& s : r.steps) REQUIRE(c.is_enabled(s.kind));
  }
}

TEST_CASE("rotation") {
  const RasterImage g = gradient(17, 17);
  CHECK(rotate(g, 0.0, kFill) == g);
  const RasterImage flat(30, 20, {90, 91, 92});
  CHECK(rotate(flat, 7.5, {90, 91, 92}) == flat);
  const RasterImage r = rotate(g, 90.0, kFill);
  const int n = 17;
  for (int y = 0; y < n; ++y) {
    for (int x = 0; x < n; ++x) REQUIRE(r.at(x, y) == g.at(y, n - 1 - x));
  }
}

TEST_CASE("skew") {
  const RasterImage g = gradient(40, 9);
  CHECK(skew(g, 0.0, 0.0, kFill) == g);
  const RasterImage flat(30, 20, {5, 6, 7});
  CHECK(skew(flat, 0.3, -0.2, {5, 6, 7}) == flat);
  // s_x = 0.5 on a 9-row image: row y moves by 0.5 * (y - 4) pixels.
  const RasterImage s = skew(g, 0.5, 0.0, kFill);
  for (int x = 0; x < 40; ++x) REQUIRE(s.at(x, 4) == g.at(x, 4));
  for (int x = 3; x < 37; ++x) {
    REQUIRE(s.at(x, 8) == g.at(x - 2, 8));
    REQUIRE(s.at(x, 0) == g.at(x + 2, 0));
    REQUIRE(s.at(x, 6) == g.at(x - 1, 6));
  }
}

TEST_CASE("gaussian blur") {
  for (double sigma : {0.5, 1.0, 1.37, 2.0, 4.0}) {
    const auto k = gaussian_kernel(sigma);
    CHECK(k.size() == 2 * static_cast<std::size_t>(std::ceil(3 * sigma)) + 1);
    double sum = 0.0;
    for (double w : k) sum += w;
    CHECK(std::abs(sum - 1.0) < 1e-6);
  }
  const RasterImage flat(20, 10, {77, 150, 3});
  CHECK(within(gaussian_blur(flat, 1.7), flat, 1));

  RasterImage dot(21, 21, {0, 0, 0});
  dot.set(10, 10, {255, 255, 255});
  const RasterImage b = gaussian_blur(dot, 1.0);
  const double w0 = oracle::gaussian_center_weight(1.0);
  CHECK(int(b.at(10, 10).r) == int(std::lround(255.0 * w0 * w0)));
}

TEST_CASE("motion blur") {
  const RasterImage g = gradient(30, 12);
  CHECK(motion_blur(g, 1, 0.7) == g);
  const RasterImage flat(20, 10, {8, 9, 200});
  CHECK(within(motion_blur(flat, 7, 1.1), flat, 1));

  RasterImage box(30, 12);
  for (int y = 0; y < 12; ++y) {
    for (int x = 0; x < 30; ++x) {
      int acc[3] = {0, 0, 0};
      for (int d = -2; d <= 2; ++d) {
        const Rgb c = g.at(std::clamp(x + d, 0, 29), y);
        acc[0] += c.r;
        acc[1] += c.g;
        acc[2] += c.b;
      }
      box.set(x, y, {static_cast<std::uint8_t>(std::lround(acc[0] / 5.0)),
                     static_cast<std::uint8_t>(std::lround(acc[1] / 5.0)),
                     static_cast<std::uint8_t>(std::lround(acc[2] / 5.0))});
    }
  }
  CHECK(motion_blur(g, 5, 0.0) == box);

  const auto taps = motion_kernel(4, 0.0);
  CHECK(taps.size() == 5);
  double sum = 0.0;
  for (const auto& t : motion_kernel(7, 0.9)) sum += t.weight;
  CHECK(std::abs(sum - 1.0) < 1e-9);
}

TEST_CASE("gaussian noise") {
  const RasterImage g = gradient(16, 16);
  Lcg rng(1);
  CHECK(gaussian_noise(g, 0.0, rng) == g);

  const RasterImage gray(256, 64, {128, 128, 128});
  Lcg r2(12345);
  const RasterImage n = gaussian_noise(gray, 25.0, r2);
  double sum = 0.0, sq = 0.0;
  std::size_t count = 0;
  for (int y = 0; y < 64; ++y) {
    for (int x = 0; x < 256; ++x) {
      const Rgb c = n.at(x, y);
      REQUIRE(c.r == c.g);  // one deviate shared across channels
      REQUIRE(c.g == c.b);
      sum += c.r;
      sq += double(c.r) * c.r;
      ++count;
    }
  }
  const double mean = sum / count;
  CHECK(std::abs(mean - 128.0) < 0.5);
  CHECK(std::abs(std::sqrt(sq / count - mean * mean) - 25.0) < 1.0);
}

TEST_CASE("salt and pepper") {
  const RasterImage gray(256, 64, {128, 128, 128});
  Lcg rng(8);
  CHECK(salt_pepper(gray, 0.0, rng) == gray);
  const RasterImage all = salt_pepper(gray, 1.0, rng);
  for (int y = 0; y < 64; ++y) {
    for (int x = 0; x < 256; ++x) {
      const Rgb c = all.at(x, y);
      REQUIRE((c == Rgb{0, 0, 0} || c == Rgb{255, 255, 255}));
    }
  }
  const RasterImage some = salt_pepper(gray, 0.05, rng);
  int changed = 0;
  for (int y = 0; y < 64; ++y) {
    for (int x = 0; x < 256; ++x) changed += some.at(x, y) == gray.at(x, y) ? 0 : 1;
  }
  CHECK(std::abs(changed - 819) <= 90);
}

TEST_CASE("jpeg round trip") {
  const RasterImage text = text_image();
  const auto q100 = jpeg_degrade(text, 100);
  REQUIRE(q100);
  CHECK(psnr(text, *q100) > 35.0);
  CHECK(encode_jpeg(text, 30).size() < encode_jpeg(text, 90).size());
  for (int q : {1, 30, 70, 100}) {
    const auto out = jpeg_degrade(text, q);
    REQUIRE(out);
    CHECK(out->width() == 256);
    CHECK(out->height() == 64);
  }
}

TEST_CASE("resolution degrade") {
  const RasterImage g = gradient(40, 20);
  CHECK(resolution_degrade(g, 1.0) == g);
  const RasterImage flat(40, 20, {33, 66, 99});
  CHECK(within(resolution_degrade(flat, 0.37), flat, 1));
  RasterImage line(40, 20, {0, 0, 0});
  for (int y = 0; y < 20; ++y) line.set(20, y, {255, 255, 255});
  const RasterImage out = resolution_degrade(line, 0.5);
  int partial = 0;
  for (int x = 0; x < 40; ++x) {
    const int v = out.at(x, 10).r;
    partial += (v > 0 && v < 255) ? 1 : 0;
  }
  CHECK(partial >= 2);
}

TEST_CASE("brightness and contrast") {
  const RasterImage g = gradient(16, 16);
  CHECK(brightness(g, 0.0) == g);
  CHECK(brightness(RasterImage(1, 1, {100, 100, 100}), 0.15).at(0, 0) == Rgb{115, 115, 115});
  CHECK(brightness(RasterImage(1, 1, {255, 255, 255}), 0.15).at(0, 0) == Rgb{255, 255, 255});

  RasterImage ramp(256, 1);
  for (int v = 0; v < 256; ++v) {
    ramp.set(v, 0, {static_cast<std::uint8_t>(v), static_cast<std::uint8_t>(v),
                    static_cast<std::uint8_t>(v)});
  }
  CHECK(contrast(ramp, 1.0) == ramp);
  for (double gamma : {0.3, 0.7, 1.3, 2.0, 5.0}) {
    const RasterImage c = contrast(ramp, gamma);
    CHECK(c.at(0, 0).r == 0);
    CHECK(c.at(255, 0).r == 255);
  }
  CHECK(contrast(ramp, 2.0).at(128, 0).r == 64);
}

TEST_CASE("apply") {
  const RasterImage g = gradient(32, 16);
  CHECK(apply(g, {}, kFill) == g);
  AugmentationRecipe identity{true, {{TransformKind::kBrightness, {0.0, 0.0}, 0},
                                     {TransformKind::kContrast, {1.0, 0.0}, 0}}};
  CHECK(apply(g, identity, kFill) == g);
  AugmentationConfig c;
  c.p_aug = 1.0;
  c.m_max = 10;
  Lcg rng(77);
  for (int i = 0; i < 20; ++i) {
    const AugmentationRecipe r = plan_recipe(c, rng);
    CHECK(apply(g, r, kFill) == apply(g, r, kFill));
  }
}

TEST_CASE("transforms keep dimensions at parameter extremes") {
  const RasterImage g = gradient(37, 13);
  Lcg rng(2);
  const std::vector<TransformStep> steps = {
      {TransformKind::kRotation, {45, 0}, 0},      {TransformKind::kRotation, {-45, 0}, 0},
      {TransformKind::kSkew, {0.5, 0.5}, 0},        {TransformKind::kSkew, {-0.5, -0.5}, 0},
      {TransformKind::kGaussianBlur, {0.01, 0}, 0}, {TransformKind::kGaussianBlur, {10, 0}, 0},
      {TransformKind::kMotionBlur, {15, 6.28}, 0},  {TransformKind::kMotionBlur, {3, 0}, 0},
      {TransformKind::kGaussianNoise, {255, 0}, 9}, {TransformKind::kSaltPepper, {1, 0}, 9},
      {TransformKind::kJpeg, {1, 0}, 0},            {TransformKind::kJpeg, {100, 0}, 0},
      {TransformKind::kResolution, {0.01, 0}, 0},   {TransformKind::kResolution, {1, 0}, 0},
      {TransformKind::kBrightness, {-1, 0}, 0},     {TransformKind::kBrightness, {5, 0}, 0},
      {TransformKind::kContrast, {0.01, 0}, 0},     {TransformKind::kContrast, {20, 0}, 0}};
  for (const TransformStep& s : steps) {
    const RasterImage out = apply_step(g, s, kFill);
    CHECK(out.width() == 37);
    CHECK(out.height() == 13);
  }
}

TEST_CASE("configuration validation") {
  AugmentationConfig c;
  CHECK_NOTHROW(c.validate());
  c.p_aug = 1.5;
  CHECK_THROWS(c.validate());
  c = {};
  c.jpeg_quality = {0, 50};
  CHECK_THROWS(c.validate());
  c = {};
  c.resolution = {0.0, 0.5};
  CHECK_THROWS(c.validate());
  c = {};
  c.motion_length = {3, 17};
  CHECK_THROWS(c.validate());
}

}
