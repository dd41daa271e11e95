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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "textsynth/image_io.hpp"

// Minimal ZIP container: raw deflate (zlib level 6) or stored entries,
// fixed 1980-01-01 timestamps, UTF-8 names, ZIP64 records when offsets or
// entry counts overflow the classic fields.

namespace textsynth {

class ZipWriter {
 public:
  /// Deflates unless the deflated form is not smaller than the input.
  void add(const std::string& name, std::span<const std::uint8_t> data);
  void add(const std::string& name, std::string_view text);

  /// Bytes written so far (local headers and data).
  std::size_t size() const noexcept { return buffer_.size(); }
  std::size_t entry_count() const noexcept { return entries_.size(); }

  /// Appends the central directory; the writer is spent afterwards.
  Bytes finish();

 private:
  struct Entry {
    std::string name;
    std::uint32_t crc = 0;
    std::uint64_t compressed_size = 0;
    std::uint64_t size = 0;
    std::uint64_t offset = 0;
    std::uint16_t method = 0;
  };

  Bytes buffer_;
  std::vector<Entry> entries_;
  bool finished_ = false;
};

struct ZipEntry {
  std::string name;
  std::uint32_t crc = 0;
  std::uint64_t compressed_size = 0;
  std::uint64_t size = 0;
  std::uint64_t local_offset = 0;
  std::uint16_t method = 0;
};

class ZipReader {
 public:
  /// Parses the central directory; throws kFormat on malformed archives.
  explicit ZipReader(Bytes archive);
  static ZipReader open(const std::filesystem::path& path);

  const std::vector<ZipEntry>& entries() const noexcept { return entries_; }
  const ZipEntry* find(const std::string& name) const;

  /// Inflates and checks the CRC; throws kIntegrity on mismatch.
  Bytes read(const ZipEntry& entry) const;
  Bytes read(const std::string& name) const;

 private:
  Bytes data_;
  std::vector<ZipEntry> entries_;
};

}  // namespace textsynth
