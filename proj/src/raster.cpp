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

#include "textsynth/raster.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>

#include "textsynth/error.hpp"

namespace textsynth {

std::optional<Rgb> parse_hex_color(std::string_view text) {
  if (text.starts_with('#')) text.remove_prefix(1);
  if (text.size() != 6) return std::nullopt;
  unsigned value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value, 16);
  if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
  return Rgb{static_cast<std::uint8_t>(value >> 16),
             static_cast<std::uint8_t>(value >> 8),
             static_cast<std::uint8_t>(value)};
}

std::string to_hex(Rgb color) {
  char buf[8];
  std::snprintf(buf, sizeof(buf), "#%02X%02X%02X", color.r, color.g, color.b);
  return buf;
}

RasterImage::RasterImage(int width, int height, Rgb fill_color)
    : width_(width), height_(height) {
  if (width <= 0 || height <= 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "raster dimensions must be positive, got " +
                    std::to_string(width) + "x" + std::to_string(height));
  }
  pixels_.resize(static_cast<std::size_t>(width) *
                 static_cast<std::size_t>(height) * 3);
  fill(fill_color);
}

void RasterImage::fill(Rgb c) {
  for (std::size_t i = 0; i < pixels_.size(); i += 3) {
    pixels_[i] = c.r;
    pixels_[i + 1] = c.g;
    pixels_[i + 2] = c.b;
  }
}

RasterImage resize_bilinear(const RasterImage& src, int width, int height) {
  if (width == src.width() && height == src.height()) return src;
  RasterImage dst(width, height);
  const double sx = static_cast<double>(src.width()) / width;
  const double sy = static_cast<double>(src.height()) / height;
  const int max_x = src.width() - 1;
  const int max_y = src.height() - 1;
  auto src_px = src.pixels();
  auto dst_px = dst.pixels();
  for (int y = 0; y < height; ++y) {
    const double fy = std::clamp((y + 0.5) * sy - 0.5, 0.0, double(max_y));
    const int y0 = static_cast<int>(fy);
    const int y1 = std::min(y0 + 1, max_y);
    const double wy = fy - y0;
    for (int x = 0; x < width; ++x) {
      const double fx = std::clamp((x + 0.5) * sx - 0.5, 0.0, double(max_x));
      const int x0 = static_cast<int>(fx);
      const int x1 = std::min(x0 + 1, max_x);
      const double wx = fx - x0;
      const std::size_t o = (static_cast<std::size_t>(y) * width + x) * 3;
      const std::size_t a = (static_cast<std::size_t>(y0) * src.width() + x0) * 3;
      const std::size_t b = (static_cast<std::size_t>(y0) * src.width() + x1) * 3;
      const std::size_t c = (static_cast<std::size_t>(y1) * src.width() + x0) * 3;
      const std::size_t d = (static_cast<std::size_t>(y1) * src.width() + x1) * 3;
      for (int ch = 0; ch < 3; ++ch) {
        const double top = src_px[a + ch] * (1 - wx) + src_px[b + ch] * wx;
        const double bot = src_px[c + ch] * (1 - wx) + src_px[d + ch] * wx;
        const double v = top * (1 - wy) + bot * wy;
        dst_px[o + ch] = static_cast<std::uint8_t>(
            std::clamp(std::lround(v), 0L, 255L));
      }
    }
  }
  return dst;
}

Rgb mean_color(const RasterImage& image) {
  std::uint64_t sum[3] = {0, 0, 0};
  auto px = image.pixels();
  for (std::size_t i = 0; i < px.size(); i += 3) {
    sum[0] += px[i];
    sum[1] += px[i + 1];
    sum[2] += px[i + 2];
  }
  const std::uint64_t n = px.size() / 3;
  if (n == 0) return {};
  auto avg = [n](std::uint64_t s) {
    return static_cast<std::uint8_t>((s + n / 2) / n);
  };
  return {avg(sum[0]), avg(sum[1]), avg(sum[2])};
}

}  // namespace textsynth
