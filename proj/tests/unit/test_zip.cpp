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


#include <zlib.h>

#include "doctest.h"
#include "textsynth/error.hpp"
#include "textsynth/hash.hpp"
#include "textsynth/zip.hpp"

using namespace textsynth;

TEST_SUITE("zip") {

TEST_CASE("sha256 known answers") {
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  Sha256 h;
  h.update(std::string_view("a"));
  h.update(std::string_view("bc"));
  CHECK(h.hex_digest() == sha256_hex("abc"));
}

TEST_CASE("round trip with stored and deflated members") {
  ZipWriter w;
  const std::string text(5000, 'a');
  Bytes noise(300);
  for (std::size_t i = 0; i < noise.size(); ++i) noise[i] = static_cast<std::uint8_t>((i * 7919) >> 3);
  w.add("images/a.txt", text);
  w.add("raw.bin", noise);
  w.add("\xD8\xA8.txt", std::string_view("x"));
  w.add("empty", std::string_view(""));
  const ZipReader r(w.finish());
  REQUIRE(r.entries().size() == 4);
  CHECK(r.entries()[0].method == 8);
  CHECK(r.entries()[0].compressed_size < 5000);
  const Bytes a = r.read("images/a.txt");
  CHECK(std::string(a.begin(), a.end()) == text);
  CHECK(r.read("raw.bin") == noise);
  CHECK(r.read("\xD8\xA8.txt").size() == 1);
  CHECK(r.read("empty").empty());
  CHECK(r.find("missing") == nullptr);
  for (const auto& e : r.entries()) {
    const Bytes d = r.read(e);
    CHECK(e.crc == crc32(0, d.data(), static_cast<uInt>(d.size())));
  }
}

TEST_CASE("identical input gives identical archives") {
  auto build = [] {
    ZipWriter w;
    w.add("a", std::string_view("hello"));
    w.add("b", std::string_view("world world world world"));
    return w.finish();
  };
  CHECK(build() == build());
}

TEST_CASE("crc mismatch is an integrity error") {
  ZipWriter w;
  w.add("a", std::string_view("stored?"));
  Bytes z = w.finish();
  // Flip a byte of the member data (after the 30-byte local header and name).
  z[31] ^= 0xFF;
  const ZipReader r(z);
  try {
    r.read("a");
    FAIL("expected an integrity error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kIntegrity);
  }
}

TEST_CASE("garbage is rejected") {
  CHECK_THROWS_AS(ZipReader(Bytes{1, 2, 3, 4}), Error);
  CHECK_THROWS_AS(ZipReader(Bytes(100, 0)), Error);
}

TEST_CASE("entry counts past 65534 use zip64 records") {
  ZipWriter w;
  const std::size_t n = 70000;
  for (std::size_t i = 0; i < n; ++i) w.add("f" + std::to_string(i), std::string_view("z"));
  const Bytes z = w.finish();
  // The zip64 end-of-central-directory signature must be present.
  const std::uint8_t sig[] = {0x50, 0x4b, 0x06, 0x06};
  CHECK(std::search(z.begin(), z.end(), std::begin(sig), std::end(sig)) != z.end());
  const ZipReader r(z);
  CHECK(r.entries().size() == n);
  CHECK(r.read("f69999").size() == 1);
}

}
