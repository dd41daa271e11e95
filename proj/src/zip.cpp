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


#include "textsynth/zip.hpp"

#include <zlib.h>

#include <cstring>
#include <limits>

#include "textsynth/error.hpp"

namespace textsynth {
namespace {

constexpr std::uint32_t kLocalSig = 0x04034b50;
constexpr std::uint32_t kCentralSig = 0x02014b50;
constexpr std::uint32_t kEndSig = 0x06054b50;
constexpr std::uint32_t kEnd64Sig = 0x06064b50;
constexpr std::uint32_t kLocator64Sig = 0x07064b50;
constexpr std::uint16_t kUtf8Flag = 0x0800;
constexpr std::uint16_t kDosTime = 0;
constexpr std::uint16_t kDosDate = (0 << 9) | (1 << 5) | 1;  // 1980-01-01
constexpr std::uint32_t kMax32 = 0xFFFFFFFFu;
constexpr std::uint16_t kMax16 = 0xFFFFu;

void put16(Bytes& b, std::uint16_t v) {
  b.push_back(static_cast<std::uint8_t>(v));
  b.push_back(static_cast<std::uint8_t>(v >> 8));
}

void put32(Bytes& b, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) b.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void put64(Bytes& b, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) b.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void put_bytes(Bytes& b, const void* p, std::size_t n) {
  const auto* c = static_cast<const std::uint8_t*>(p);
  b.insert(b.end(), c, c + n);
}

std::uint64_t get(const Bytes& b, std::uint64_t pos, int width) {
  if (pos + width > b.size()) throw Error(ErrorCode::kFormat, "truncated ZIP archive");
  std::uint64_t v = 0;
  for (int i = 0; i < width; ++i) v |= std::uint64_t{b[pos + i]} << (8 * i);
  return v;
}

Bytes deflate_raw(std::span<const std::uint8_t> data) {
  z_stream zs{};
  if (deflateInit2(&zs, 6, Z_DEFLATED, -15, 8, Z_DEFAULT_STRATEGY) != Z_OK) {
    throw Error(ErrorCode::kIo, "deflateInit2 failed");
  }
  Bytes out(deflateBound(&zs, static_cast<uLong>(data.size())));
  zs.next_in = const_cast<Bytef*>(data.data());
  zs.avail_in = static_cast<uInt>(data.size());
  zs.next_out = out.data();
  zs.avail_out = static_cast<uInt>(out.size());
  const int rc = deflate(&zs, Z_FINISH);
  deflateEnd(&zs);
  if (rc != Z_STREAM_END) throw Error(ErrorCode::kIo, "deflate failed");
  out.resize(zs.total_out);
  return out;
}

Bytes inflate_raw(std::span<const std::uint8_t> data, std::uint64_t size) {
  Bytes out(size);
  z_stream zs{};
  if (inflateInit2(&zs, -15) != Z_OK) throw Error(ErrorCode::kFormat, "inflateInit2 failed");
  zs.next_in = const_cast<Bytef*>(data.data());
  zs.avail_in = static_cast<uInt>(data.size());
  zs.next_out = out.data();
  zs.avail_out = static_cast<uInt>(out.size());
  const int rc = inflate(&zs, Z_FINISH);
  const auto produced = zs.total_out;
  inflateEnd(&zs);
  if (rc != Z_STREAM_END || produced != size) {
    throw Error(ErrorCode::kIntegrity, "corrupt deflate stream");
  }
  return out;
}

}  // namespace

void ZipWriter::add(const std::string& name, std::span<const std::uint8_t> data) {
  if (finished_) throw Error(ErrorCode::kIo, "ZIP writer already finished");
  if (data.size() >= kMax32) throw Error(ErrorCode::kIo, "ZIP entry too large: " + name);
  Entry e;
  e.name = name;
  e.size = data.size();
  e.crc = static_cast<std::uint32_t>(
      crc32(crc32(0L, Z_NULL, 0), data.data(), static_cast<uInt>(data.size())));
  e.offset = buffer_.size();

  Bytes deflated = deflate_raw(data);
  std::span<const std::uint8_t> payload = data;
  if (deflated.size() < data.size()) {
    e.method = 8;
    payload = deflated;
  }
  e.compressed_size = payload.size();

  put32(buffer_, kLocalSig);
  put16(buffer_, 20);
  put16(buffer_, kUtf8Flag);
  put16(buffer_, e.method);
  put16(buffer_, kDosTime);
  put16(buffer_, kDosDate);
  put32(buffer_, e.crc);
  put32(buffer_, static_cast<std::uint32_t>(e.compressed_size));
  put32(buffer_, static_cast<std::uint32_t>(e.size));
  put16(buffer_, static_cast<std::uint16_t>(name.size()));
  put16(buffer_, 0);
  put_bytes(buffer_, name.data(), name.size());
  put_bytes(buffer_, payload.data(), payload.size());
  entries_.push_back(std::move(e));
}

void ZipWriter::add(const std::string& name, std::string_view text) {
  add(name, std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

Bytes ZipWriter::finish() {
  if (finished_) throw Error(ErrorCode::kIo, "ZIP writer already finished");
  finished_ = true;
  const std::uint64_t cd_offset = buffer_.size();
  for (const Entry& e : entries_) {
    const bool big_offset = e.offset >= kMax32;
    put32(buffer_, kCentralSig);
    put16(buffer_, big_offset ? 45 : 20);  // made by: MS-DOS host
    put16(buffer_, big_offset ? 45 : 20);
    put16(buffer_, kUtf8Flag);
    put16(buffer_, e.method);
    put16(buffer_, kDosTime);
    put16(buffer_, kDosDate);
    put32(buffer_, e.crc);
    put32(buffer_, static_cast<std::uint32_t>(e.compressed_size));
    put32(buffer_, static_cast<std::uint32_t>(e.size));
    put16(buffer_, static_cast<std::uint16_t>(e.name.size()));
    put16(buffer_, big_offset ? 12 : 0);
    put16(buffer_, 0);  // comment
    put16(buffer_, 0);  // disk
    put16(buffer_, 0);  // internal attributes
    put32(buffer_, 0);  // external attributes
    put32(buffer_, big_offset ? kMax32 : static_cast<std::uint32_t>(e.offset));
    put_bytes(buffer_, e.name.data(), e.name.size());
    if (big_offset) {
      put16(buffer_, 0x0001);
      put16(buffer_, 8);
      put64(buffer_, e.offset);
    }
  }
  const std::uint64_t cd_size = buffer_.size() - cd_offset;
  const std::uint64_t count = entries_.size();
  const bool zip64 = count >= kMax16 || cd_offset >= kMax32 || cd_size >= kMax32;
  if (zip64) {
    const std::uint64_t end64_offset = buffer_.size();
    put32(buffer_, kEnd64Sig);
    put64(buffer_, 44);
    put16(buffer_, 45);
    put16(buffer_, 45);
    put32(buffer_, 0);
    put32(buffer_, 0);
    put64(buffer_, count);
    put64(buffer_, count);
    put64(buffer_, cd_size);
    put64(buffer_, cd_offset);
    put32(buffer_, kLocator64Sig);
    put32(buffer_, 0);
    put64(buffer_, end64_offset);
    put32(buffer_, 1);
  }
  put32(buffer_, kEndSig);
  put16(buffer_, 0);
  put16(buffer_, 0);
  put16(buffer_, zip64 ? kMax16 : static_cast<std::uint16_t>(count));
  put16(buffer_, zip64 ? kMax16 : static_cast<std::uint16_t>(count));
  put32(buffer_, zip64 ? kMax32 : static_cast<std::uint32_t>(cd_size));
  put32(buffer_, zip64 ? kMax32 : static_cast<std::uint32_t>(cd_offset));
  put16(buffer_, 0);
  entries_.clear();
  return std::move(buffer_);
}

ZipReader::ZipReader(Bytes archive) : data_(std::move(archive)) {
  if (data_.size() < 22) throw Error(ErrorCode::kFormat, "not a ZIP archive");
  std::uint64_t eocd = data_.size() - 22;
  const std::uint64_t stop = data_.size() > 22 + 65535 ? data_.size() - 22 - 65535 : 0;
  while (get(data_, eocd, 4) != kEndSig) {
    if (eocd == stop) throw Error(ErrorCode::kFormat, "ZIP end record not found");
    --eocd;
  }
  std::uint64_t count = get(data_, eocd + 10, 2);
  std::uint64_t cd_size = get(data_, eocd + 12, 4);
  std::uint64_t cd_offset = get(data_, eocd + 16, 4);
  if (count == kMax16 || cd_size == kMax32 || cd_offset == kMax32) {
    if (eocd < 20 || get(data_, eocd - 20, 4) != kLocator64Sig) {
      throw Error(ErrorCode::kFormat, "ZIP64 locator missing");
    }
    const std::uint64_t end64 = get(data_, eocd - 20 + 8, 8);
    if (get(data_, end64, 4) != kEnd64Sig) {
      throw Error(ErrorCode::kFormat, "ZIP64 end record missing");
    }
    count = get(data_, end64 + 32, 8);
    cd_size = get(data_, end64 + 40, 8);
    cd_offset = get(data_, end64 + 48, 8);
  }
  if (cd_offset + cd_size > data_.size()) {
    throw Error(ErrorCode::kFormat, "ZIP central directory out of range");
  }
  std::uint64_t pos = cd_offset;
  for (std::uint64_t i = 0; i < count; ++i) {
    if (get(data_, pos, 4) != kCentralSig) {
      throw Error(ErrorCode::kFormat, "bad ZIP central directory entry");
    }
    ZipEntry e;
    e.method = static_cast<std::uint16_t>(get(data_, pos + 10, 2));
    e.crc = static_cast<std::uint32_t>(get(data_, pos + 16, 4));
    e.compressed_size = get(data_, pos + 20, 4);
    e.size = get(data_, pos + 24, 4);
    const std::uint64_t name_len = get(data_, pos + 28, 2);
    const std::uint64_t extra_len = get(data_, pos + 30, 2);
    const std::uint64_t comment_len = get(data_, pos + 32, 2);
    e.local_offset = get(data_, pos + 42, 4);
    if (pos + 46 + name_len > data_.size()) throw Error(ErrorCode::kFormat, "truncated ZIP name");
    e.name.assign(reinterpret_cast<const char*>(&data_[pos + 46]), name_len);
    std::uint64_t x = pos + 46 + name_len;
    const std::uint64_t x_end = x + extra_len;
    while (x + 4 <= x_end) {
      const auto id = get(data_, x, 2);
      const auto len = get(data_, x + 2, 2);
      if (id == 0x0001) {
        std::uint64_t f = x + 4;
        if (e.size == kMax32) { e.size = get(data_, f, 8); f += 8; }
        if (e.compressed_size == kMax32) { e.compressed_size = get(data_, f, 8); f += 8; }
        if (e.local_offset == kMax32) { e.local_offset = get(data_, f, 8); }
      }
      x += 4 + len;
    }
    if (e.method != 0 && e.method != 8) {
      throw Error(ErrorCode::kFormat, "unsupported ZIP compression method in " + e.name);
    }
    entries_.push_back(std::move(e));
    pos = x_end + comment_len;
  }
}

ZipReader ZipReader::open(const std::filesystem::path& path) {
  return ZipReader(read_file(path));
}

const ZipEntry* ZipReader::find(const std::string& name) const {
  for (const ZipEntry& e : entries_) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

Bytes ZipReader::read(const ZipEntry& entry) const {
  const std::uint64_t p = entry.local_offset;
  if (get(data_, p, 4) != kLocalSig) {
    throw Error(ErrorCode::kFormat, "bad ZIP local header for " + entry.name);
  }
  const std::uint64_t start = p + 30 + get(data_, p + 26, 2) + get(data_, p + 28, 2);
  if (start + entry.compressed_size > data_.size()) {
    throw Error(ErrorCode::kFormat, "truncated ZIP entry " + entry.name);
  }
  std::span<const std::uint8_t> raw(data_.data() + start, entry.compressed_size);
  Bytes out = entry.method == 8 ? inflate_raw(raw, entry.size)
                                : Bytes(raw.begin(), raw.end());
  const auto crc = static_cast<std::uint32_t>(
      crc32(crc32(0L, Z_NULL, 0), out.data(), static_cast<uInt>(out.size())));
  if (out.size() != entry.size || crc != entry.crc) {
    throw Error(ErrorCode::kIntegrity, "CRC mismatch in " + entry.name);
  }
  return out;
}

Bytes ZipReader::read(const std::string& name) const {
  const ZipEntry* e = find(name);
  if (e == nullptr) throw Error(ErrorCode::kFormat, "no ZIP entry " + name);
  return read(*e);
}

}  // namespace textsynth
