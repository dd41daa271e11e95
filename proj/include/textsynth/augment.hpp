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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "textsynth/prng.hpp"
#include "textsynth/raster.hpp"

namespace textsynth {

/// Declared in application order: geometric, blur, noise, degradation,
/// lighting.
enum class TransformKind {
  kRotation,
  kSkew,
  kGaussianBlur,
  kMotionBlur,
  kGaussianNoise,
  kSaltPepper,
  kJpeg,
  kResolution,
  kBrightness,
  kContrast,
};

inline constexpr std::array<TransformKind, 10> kAllTransforms = {
    TransformKind::kRotation,      TransformKind::kSkew,
    TransformKind::kGaussianBlur,  TransformKind::kMotionBlur,
    TransformKind::kGaussianNoise, TransformKind::kSaltPepper,
    TransformKind::kJpeg,          TransformKind::kResolution,
    TransformKind::kBrightness,    TransformKind::kContrast};

const char* to_string(TransformKind kind);
std::optional<TransformKind> parse_transform_kind(std::string_view name);

struct ParamRange {
  double lo = 0.0;
  double hi = 0.0;

  bool contains(double v) const { return v >= lo && v <= hi; }
  friend bool operator==(const ParamRange&, const ParamRange&) = default;
};

struct AugmentationConfig {
  double p_aug = 0.7;
  int m_max = 4;
  std::vector<TransformKind> enabled{kAllTransforms.begin(), kAllTransforms.end()};

  double rotation_max_deg = 10.0;
  double skew_max = 0.2;
  ParamRange blur_sigma{0.5, 2.0};
  ParamRange motion_length{3, 7};
  ParamRange noise_sigma{5.0, 25.0};
  ParamRange salt_pepper{0.01, 0.05};
  ParamRange jpeg_quality{30, 70};
  ParamRange resolution{0.3, 0.7};
  ParamRange brightness{-0.15, 0.15};
  ParamRange contrast{0.7, 1.3};

  bool is_enabled(TransformKind kind) const;
  void enable(TransformKind kind);
  void disable(TransformKind kind);
  /// Sorts `enabled` into application order and drops duplicates.
  void normalize();
  /// Throws ConfigError (paths like augmentation.jpeg_quality).
  void validate() const;

  friend bool operator==(const AugmentationConfig&, const AugmentationConfig&) = default;
};

/// One sampled transform. Parameter layout by kind:
///   rotation: p[0] = degrees      skew: p[0] = s_x, p[1] = s_y
///   gaussian_blur: p[0] = sigma   motion_blur: p[0] = k, p[1] = angle (rad)
///   gaussian_noise: p[0] = sigma  salt_pepper: p[0] = probability
///   jpeg: p[0] = quality          resolution: p[0] = scale
///   brightness: p[0] = delta      contrast: p[0] = gamma
/// Noise kinds carry the seed of their pixel stream.
struct TransformStep {
  TransformKind kind = TransformKind::kRotation;
  std::array<double, 2> params{0.0, 0.0};
  std::uint32_t seed = 0;

  friend bool operator==(const TransformStep&, const TransformStep&) = default;
};

/// Names of the meaningful entries of TransformStep::params.
std::vector<const char*> param_names(TransformKind kind);

struct AugmentationRecipe {
  bool applied = false;
  std::vector<TransformStep> steps;

  friend bool operator==(const AugmentationRecipe&, const AugmentationRecipe&) = default;
};

/// Gate, count, selection, then parameters, all from `rng`.
AugmentationRecipe plan_recipe(const AugmentationConfig& config, Lcg& rng);

RasterImage rotate(const RasterImage& img, double degrees, Rgb fill);
RasterImage skew(const RasterImage& img, double s_x, double s_y, Rgb fill);

/// Normalized kernel of radius ceil(3 sigma).
std::vector<double> gaussian_kernel(double sigma);
RasterImage gaussian_blur(const RasterImage& img, double sigma);

struct KernelTap {
  int dx = 0;
  int dy = 0;
  double weight = 0.0;
};
/// Line kernel taps after rounding and merging; even k is rounded up.
std::vector<KernelTap> motion_kernel(int k, double angle);
RasterImage motion_blur(const RasterImage& img, int k, double angle);

RasterImage gaussian_noise(const RasterImage& img, double sigma, Lcg& rng);
RasterImage salt_pepper(const RasterImage& img, double probability, Lcg& rng);

/// Returns std::nullopt when the codec fails.
std::optional<RasterImage> jpeg_degrade(const RasterImage& img, int quality);
RasterImage resolution_degrade(const RasterImage& img, double scale);
RasterImage brightness(const RasterImage& img, double delta);
RasterImage contrast(const RasterImage& img, double gamma);

RasterImage apply_step(const RasterImage& img, const TransformStep& step, Rgb fill,
                       std::vector<std::string>* warnings = nullptr);

/// Applies the steps in order; an empty recipe returns the input.
RasterImage apply(const RasterImage& img, const AugmentationRecipe& recipe,
                  Rgb fill, std::vector<std::string>* warnings = nullptr);

}  // namespace textsynth
