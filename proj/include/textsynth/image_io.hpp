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
#include <filesystem>
#include <span>
#include <vector>

#include "textsynth/raster.hpp"

namespace textsynth {

using Bytes = std::vector<std::uint8_t>;

inline constexpr std::array<std::uint8_t, 8> kPngSignature = {
    0x89, 'P', 'N', 'G', '\r', '\n', 0x1A, '\n'};

bool has_png_signature(std::span<const std::uint8_t> bytes);

/// 8-bit RGB PNG with pinned encoder settings (zlib level 6, adaptive
/// filtering, no ancillary chunks), so equal pixels give equal bytes.
Bytes encode_png(const RasterImage& image);
RasterImage decode_png(std::span<const std::uint8_t> bytes);

/// Baseline JPEG using the accurate integer DCT in both directions.
Bytes encode_jpeg(const RasterImage& image, int quality);
RasterImage decode_jpeg(std::span<const std::uint8_t> bytes);

/// PNG or JPEG, sniffed from the leading bytes.
RasterImage decode_image(std::span<const std::uint8_t> bytes);
RasterImage load_image(const std::filesystem::path& path);

Bytes read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

}  // namespace textsynth
