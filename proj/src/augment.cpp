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

#include "textsynth/augment.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "textsynth/error.hpp"
#include "textsynth/image_io.hpp"

namespace textsynth {
namespace {

constexpr std::int64_t kSeedMax = (std::int64_t{1} << 31) - 1;

std::uint8_t clip_round(double v) {
  if (!(v > 0.0)) return 0;
  if (v >= 255.0) return 255;
  return static_cast<std::uint8_t>(std::lround(v));
}

// Bilinear tap at continuous pixel-center coordinates; taps outside the
// image take `fill`.
void sample_bilinear(const RasterImage& img, double sx, double sy, Rgb fill,
                     std::uint8_t* out) {
  const double fx = sx - 0.5;
  const double fy = sy - 0.5;
  const double x0f = std::floor(fx);
  const double y0f = std::floor(fy);
  const double wx = fx - x0f;
  const double wy = fy - y0f;
  const int x0 = static_cast<int>(x0f);
  const int y0 = static_cast<int>(y0f);
  const int w = img.width();
  const int h = img.height();
  double acc[3] = {0.0, 0.0, 0.0};
  for (int j = 0; j < 2; ++j) {
    const double wyj = j == 0 ? 1.0 - wy : wy;
    if (wyj == 0.0) continue;
    for (int i = 0; i < 2; ++i) {
      const double wt = (i == 0 ? 1.0 - wx : wx) * wyj;
      if (wt == 0.0) continue;
      const int x = x0 + i;
      const int y = y0 + j;
      const Rgb c = (x >= 0 && x < w && y >= 0 && y < h) ? img.at(x, y) : fill;
      acc[0] += wt * c.r;
      acc[1] += wt * c.g;
      acc[2] += wt * c.b;
    }
  }
  for (int ch = 0; ch < 3; ++ch) out[ch] = clip_round(acc[ch]);
}

// out(x, y) = img(m * (p - c) + c) for pixel centers p.
RasterImage inverse_map(const RasterImage& img, double m00, double m01, double m10,
                        double m11, Rgb fill) {
  RasterImage out(img.width(), img.height());
  const double cx = img.width() / 2.0;
  const double cy = img.height() / 2.0;
  auto pixels = out.pixels();
  std::size_t idx = 0;
  for (int y = 0; y < img.height(); ++y) {
    const double dy = y + 0.5 - cy;
    for (int x = 0; x < img.width(); ++x, idx += 3) {
      const double dx = x + 0.5 - cx;
      sample_bilinear(img, m00 * dx + m01 * dy + cx, m10 * dx + m11 * dy + cy, fill,
                      &pixels[idx]);
    }
  }
  return out;
}

RasterImage map_channels(const RasterImage& img, const std::array<std::uint8_t, 256>& lut) {
  RasterImage out = img;
  for (std::uint8_t& v : out.pixels()) v = lut[v];
  return out;
}

double draw_in(Lcg& rng, const ParamRange& r) { return rng.uniform_range(r.lo, r.hi); }

}  // namespace

const char* to_string(TransformKind kind) {
  switch (kind) {
    case TransformKind::kRotation: return "rotation";
    case TransformKind::kSkew: return "skew";
    case TransformKind::kGaussianBlur: return "gaussian_blur";
    case TransformKind::kMotionBlur: return "motion_blur";
    case TransformKind::kGaussianNoise: return "gaussian_noise";
    case TransformKind::kSaltPepper: return "salt_pepper";
    case TransformKind::kJpeg: return "jpeg";
    case TransformKind::kResolution: return "resolution";
    case TransformKind::kBrightness: return "brightness";
    case TransformKind::kContrast: return "contrast";
  }
  return "unknown";
}

std::optional<TransformKind> parse_transform_kind(std::string_view name) {
  std::string key(name);
  std::replace(key.begin(), key.end(), '-', '_');
  for (TransformKind k : kAllTransforms) {
    if (key == to_string(k)) return k;
  }
  return std::nullopt;
}

std::vector<const char*> param_names(TransformKind kind) {
  switch (kind) {
    case TransformKind::kRotation: return {"degrees"};
    case TransformKind::kSkew: return {"s_x", "s_y"};
    case TransformKind::kGaussianBlur: return {"sigma"};
    case TransformKind::kMotionBlur: return {"k", "angle"};
    case TransformKind::kGaussianNoise: return {"sigma"};
    case TransformKind::kSaltPepper: return {"probability"};
    case TransformKind::kJpeg: return {"quality"};
    case TransformKind::kResolution: return {"scale"};
    case TransformKind::kBrightness: return {"delta"};
    case TransformKind::kContrast: return {"gamma"};
  }
  return {};
}

bool AugmentationConfig::is_enabled(TransformKind kind) const {
  return std::find(enabled.begin(), enabled.end(), kind) != enabled.end();
}

void AugmentationConfig::enable(TransformKind kind) {
  if (!is_enabled(kind)) enabled.push_back(kind);
  normalize();
}

void AugmentationConfig::disable(TransformKind kind) {
  enabled.erase(std::remove(enabled.begin(), enabled.end(), kind), enabled.end());
}

void AugmentationConfig::normalize() {
  std::sort(enabled.begin(), enabled.end());
  enabled.erase(std::unique(enabled.begin(), enabled.end()), enabled.end());
}

void AugmentationConfig::validate() const {
  std::vector<FieldIssue> issues;
  auto range = [&](const char* name, const ParamRange& r, double lo, double hi,
                   bool open_lo) {
    const std::string path = std::string("augmentation.") + name;
    if (!(r.lo <= r.hi)) {
      issues.push_back({path, "lower bound exceeds upper bound"});
    }
    const bool lo_ok = open_lo ? r.lo > lo : r.lo >= lo;
    if (!lo_ok || !(r.hi <= hi)) {
      char buf[96];
      std::snprintf(buf, sizeof(buf), "must lie within %s%g, %g]", open_lo ? "(" : "[",
                    lo, hi);
      issues.push_back({path, buf});
    }
  };
  if (!(p_aug >= 0.0 && p_aug <= 1.0)) {
    issues.push_back({"augmentation.p_aug", "must lie within [0, 1]"});
  }
  if (m_max < 1) issues.push_back({"augmentation.m_max", "must be at least 1"});
  if (!(rotation_max_deg >= 0.0 && rotation_max_deg <= 45.0)) {
    issues.push_back({"augmentation.rotation_max", "must lie within [0, 45]"});
  }
  if (!(skew_max >= 0.0 && skew_max <= 1.0)) {
    issues.push_back({"augmentation.skew_max", "must lie within [0, 1]"});
  }
  range("blur_sigma", blur_sigma, 0.0, 50.0, true);
  range("motion_length", motion_length, 1.0, 15.0, false);
  range("noise_sigma", noise_sigma, 0.0, 255.0, false);
  range("salt_pepper", salt_pepper, 0.0, 1.0, false);
  range("jpeg_quality", jpeg_quality, 1.0, 100.0, false);
  range("resolution", resolution, 0.0, 1.0, true);
  range("brightness", brightness, -1.0, 10.0, false);
  range("contrast", contrast, 0.0, 10.0, true);
  if (std::floor(motion_length.lo) != motion_length.lo ||
      std::floor(motion_length.hi) != motion_length.hi) {
    issues.push_back({"augmentation.motion_length", "bounds must be integers"});
  } else if (motion_length.lo <= motion_length.hi) {
    bool has_odd = false;
    for (int k = static_cast<int>(motion_length.lo); k <= motion_length.hi; ++k) {
      has_odd = has_odd || (k % 2 == 1);
    }
    if (!has_odd) {
      issues.push_back({"augmentation.motion_length", "range holds no odd length"});
    }
  }
  if (std::floor(jpeg_quality.lo) != jpeg_quality.lo ||
      std::floor(jpeg_quality.hi) != jpeg_quality.hi) {
    issues.push_back({"augmentation.jpeg_quality", "bounds must be integers"});
  }
  if (!issues.empty()) throw ConfigError(std::move(issues));
}

AugmentationRecipe plan_recipe(const AugmentationConfig& config, Lcg& rng) {
  AugmentationRecipe recipe;
  if (!rng.bernoulli(config.p_aug) || config.enabled.empty()) return recipe;
  recipe.applied = true;

  std::vector<TransformKind> pool = config.enabled;
  const auto n = static_cast<std::int64_t>(pool.size());
  const std::int64_t m = rng.int_range(1, std::min<std::int64_t>(config.m_max, n));
  for (std::int64_t j = 0; j < m; ++j) {
    std::swap(pool[j], pool[rng.int_range(j, n - 1)]);
  }
  pool.resize(m);
  std::sort(pool.begin(), pool.end());

  for (TransformKind kind : pool) {
    TransformStep step;
    step.kind = kind;
    switch (kind) {
      case TransformKind::kRotation:
        step.params[0] = rng.uniform_range(-config.rotation_max_deg, config.rotation_max_deg);
        break;
      case TransformKind::kSkew:
        step.params[0] = rng.uniform_range(-config.skew_max / 2, config.skew_max / 2);
        step.params[1] = rng.uniform_range(-config.skew_max / 2, config.skew_max / 2);
        break;
      case TransformKind::kGaussianBlur:
        step.params[0] = draw_in(rng, config.blur_sigma);
        break;
      case TransformKind::kMotionBlur: {
        std::vector<int> odd;
        for (int k = static_cast<int>(config.motion_length.lo);
             k <= config.motion_length.hi; ++k) {
          if (k % 2 == 1) odd.push_back(k);
        }
        const auto pick = rng.int_range(0, static_cast<std::int64_t>(odd.size()) - 1);
        step.params[0] = odd[static_cast<std::size_t>(pick)];
        step.params[1] = rng.uniform_range(0.0, 2.0 * std::numbers::pi);
        break;
      }
      case TransformKind::kGaussianNoise:
        step.params[0] = draw_in(rng, config.noise_sigma);
        step.seed = static_cast<std::uint32_t>(rng.int_range(0, kSeedMax));
        break;
      case TransformKind::kSaltPepper:
        step.params[0] = draw_in(rng, config.salt_pepper);
        step.seed = static_cast<std::uint32_t>(rng.int_range(0, kSeedMax));
        break;
      case TransformKind::kJpeg:
        step.params[0] = static_cast<double>(rng.int_range(
            static_cast<std::int64_t>(config.jpeg_quality.lo),
            static_cast<std::int64_t>(config.jpeg_quality.hi)));
        break;
      case TransformKind::kResolution:
        step.params[0] = draw_in(rng, config.resolution);
        break;
      case TransformKind::kBrightness:
        step.params[0] = draw_in(rng, config.brightness);
        break;
      case TransformKind::kContrast:
        step.params[0] = draw_in(rng, config.contrast);
        break;
    }
    recipe.steps.push_back(step);
  }
  return recipe;
}

RasterImage rotate(const RasterImage& img, double degrees, Rgb fill) {
  if (degrees == 0.0) return img;
  // Clockwise on screen for positive angles (y axis points down).
  const double t = degrees * std::numbers::pi / 180.0;
  const double c = std::cos(t);
  const double s = std::sin(t);
  return inverse_map(img, c, s, -s, c, fill);
}

RasterImage skew(const RasterImage& img, double s_x, double s_y, Rgb fill) {
  if (s_x == 0.0 && s_y == 0.0) return img;
  // Forward map [[1, s_x], [s_y, 1]]; sample through its inverse.
  const double det = 1.0 - s_x * s_y;
  if (std::abs(det) < 1e-12) {
    throw Error(ErrorCode::kInvalidArgument, "degenerate shear");
  }
  return inverse_map(img, 1.0 / det, -s_x / det, -s_y / det, 1.0 / det, fill);
}

std::vector<double> gaussian_kernel(double sigma) {
  if (!(sigma > 0.0)) throw Error(ErrorCode::kInvalidArgument, "sigma must be positive");
  const int radius = static_cast<int>(std::ceil(3.0 * sigma));
  std::vector<double> k(2 * radius + 1);
  double sum = 0.0;
  for (int i = -radius; i <= radius; ++i) {
    k[i + radius] = std::exp(-(i * i) / (2.0 * sigma * sigma));
    sum += k[i + radius];
  }
  for (double& v : k) v /= sum;
  return k;
}

RasterImage gaussian_blur(const RasterImage& img, double sigma) {
  const std::vector<double> k = gaussian_kernel(sigma);
  const int radius = static_cast<int>(k.size() / 2);
  const int w = img.width();
  const int h = img.height();
  const auto src = img.pixels();
  std::vector<double> tmp(src.size());
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      double acc[3] = {0.0, 0.0, 0.0};
      for (int i = -radius; i <= radius; ++i) {
        const int xx = std::clamp(x + i, 0, w - 1);
        const std::size_t o = (static_cast<std::size_t>(y) * w + xx) * 3;
        const double wt = k[i + radius];
        acc[0] += wt * src[o];
        acc[1] += wt * src[o + 1];
        acc[2] += wt * src[o + 2];
      }
      const std::size_t o = (static_cast<std::size_t>(y) * w + x) * 3;
      tmp[o] = acc[0];
      tmp[o + 1] = acc[1];
      tmp[o + 2] = acc[2];
    }
  }
  RasterImage out(w, h);
  auto dst = out.pixels();
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      double acc[3] = {0.0, 0.0, 0.0};
      for (int i = -radius; i <= radius; ++i) {
        const int yy = std::clamp(y + i, 0, h - 1);
        const std::size_t o = (static_cast<std::size_t>(yy) * w + x) * 3;
        const double wt = k[i + radius];
        acc[0] += wt * tmp[o];
        acc[1] += wt * tmp[o + 1];
        acc[2] += wt * tmp[o + 2];
      }
      const std::size_t o = (static_cast<std::size_t>(y) * w + x) * 3;
      for (int ch = 0; ch < 3; ++ch) dst[o + ch] = clip_round(acc[ch]);
    }
  }
  return out;
}

std::vector<KernelTap> motion_kernel(int k, double angle) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "kernel length must be >= 1");
  if (k % 2 == 0) ++k;
  const int half = k / 2;
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  std::vector<KernelTap> taps;
  for (int t = -half; t <= half; ++t) {
    const int dx = static_cast<int>(std::lround(t * c));
    const int dy = static_cast<int>(std::lround(t * s));
    auto it = std::find_if(taps.begin(), taps.end(), [&](const KernelTap& tap) {
      return tap.dx == dx && tap.dy == dy;
    });
    if (it == taps.end()) {
      taps.push_back({dx, dy, 1.0 / k});
    } else {
      it->weight += 1.0 / k;
    }
  }
  return taps;
}

RasterImage motion_blur(const RasterImage& img, int k, double angle) {
  const std::vector<KernelTap> taps = motion_kernel(k, angle);
  if (taps.size() == 1) return img;
  const int w = img.width();
  const int h = img.height();
  const auto src = img.pixels();
  RasterImage out(w, h);
  auto dst = out.pixels();
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      double acc[3] = {0.0, 0.0, 0.0};
      for (const KernelTap& tap : taps) {
        const int xx = std::clamp(x + tap.dx, 0, w - 1);
        const int yy = std::clamp(y + tap.dy, 0, h - 1);
        const std::size_t o = (static_cast<std::size_t>(yy) * w + xx) * 3;
        acc[0] += tap.weight * src[o];
        acc[1] += tap.weight * src[o + 1];
        acc[2] += tap.weight * src[o + 2];
      }
      const std::size_t o = (static_cast<std::size_t>(y) * w + x) * 3;
      for (int ch = 0; ch < 3; ++ch) dst[o + ch] = clip_round(acc[ch]);
    }
  }
  return out;
}

RasterImage gaussian_noise(const RasterImage& img, double sigma, Lcg& rng) {
  if (!(sigma >= 0.0)) throw Error(ErrorCode::kInvalidArgument, "sigma must be >= 0");
  if (sigma == 0.0) return img;
  RasterImage out = img;
  auto px = out.pixels();
  for (std::size_t i = 0; i < px.size(); i += 3) {
    const double z = rng.gaussian() * sigma;
    for (int ch = 0; ch < 3; ++ch) px[i + ch] = clip_round(px[i + ch] + z);
  }
  return out;
}

RasterImage salt_pepper(const RasterImage& img, double probability, Lcg& rng) {
  if (!(probability >= 0.0 && probability <= 1.0)) {
    throw Error(ErrorCode::kInvalidProbability, "probability must lie within [0, 1]");
  }
  if (probability == 0.0) return img;
  RasterImage out = img;
  auto px = out.pixels();
  for (std::size_t i = 0; i < px.size(); i += 3) {
    const double u = rng.next();
    if (u < probability / 2) {
      px[i] = px[i + 1] = px[i + 2] = 0;
    } else if (u < probability) {
      px[i] = px[i + 1] = px[i + 2] = 255;
    }
  }
  return out;
}

std::optional<RasterImage> jpeg_degrade(const RasterImage& img, int quality) {
  try {
    return decode_jpeg(encode_jpeg(img, std::clamp(quality, 1, 100)));
  } catch (const Error&) {
    return std::nullopt;
  }
}

RasterImage resolution_degrade(const RasterImage& img, double scale) {
  if (!(scale > 0.0 && scale <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "scale must lie within (0, 1]");
  }
  if (scale == 1.0) return img;
  const int w = std::max(1, static_cast<int>(std::floor(img.width() * scale)));
  const int h = std::max(1, static_cast<int>(std::floor(img.height() * scale)));
  return resize_bilinear(resize_bilinear(img, w, h), img.width(), img.height());
}

RasterImage brightness(const RasterImage& img, double delta) {
  if (delta == 0.0) return img;
  std::array<std::uint8_t, 256> lut{};
  for (int i = 0; i < 256; ++i) lut[i] = clip_round(i * (1.0 + delta));
  return map_channels(img, lut);
}

RasterImage contrast(const RasterImage& img, double gamma) {
  if (!(gamma > 0.0)) throw Error(ErrorCode::kInvalidArgument, "gamma must be positive");
  if (gamma == 1.0) return img;
  std::array<std::uint8_t, 256> lut{};
  for (int i = 0; i < 256; ++i) lut[i] = clip_round(255.0 * std::pow(i / 255.0, gamma));
  return map_channels(img, lut);
}

RasterImage apply_step(const RasterImage& img, const TransformStep& step, Rgb fill,
                       std::vector<std::string>* warnings) {
  const auto& p = step.params;
  switch (step.kind) {
    case TransformKind::kRotation: return rotate(img, p[0], fill);
    case TransformKind::kSkew: return skew(img, p[0], p[1], fill);
    case TransformKind::kGaussianBlur: return gaussian_blur(img, p[0]);
    case TransformKind::kMotionBlur:
      return motion_blur(img, static_cast<int>(std::lround(p[0])), p[1]);
    case TransformKind::kGaussianNoise: {
      Lcg rng(step.seed);
      return gaussian_noise(img, p[0], rng);
    }
    case TransformKind::kSaltPepper: {
      Lcg rng(step.seed);
      return salt_pepper(img, p[0], rng);
    }
    case TransformKind::kJpeg: {
      auto out = jpeg_degrade(img, static_cast<int>(std::lround(p[0])));
      if (out) return std::move(*out);
      if (warnings != nullptr) warnings->push_back("jpeg transform skipped: codec failure");
      return img;
    }
    case TransformKind::kResolution: return resolution_degrade(img, p[0]);
    case TransformKind::kBrightness: return brightness(img, p[0]);
    case TransformKind::kContrast: return contrast(img, p[0]);
  }
  return img;
}

RasterImage apply(const RasterImage& img, const AugmentationRecipe& recipe, Rgb fill,
                  std::vector<std::string>* warnings) {
  RasterImage out = img;
  for (const TransformStep& step : recipe.steps) {
    out = apply_step(out, step, fill, warnings);
  }
  return out;
}

}  // namespace textsynth
