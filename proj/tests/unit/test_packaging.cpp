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


#include <filesystem>
#include <fstream>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "textsynth/error.hpp"
#include "textsynth/hash.hpp"
#include "textsynth/image_io.hpp"
#include "textsynth/packaging.hpp"
#include "textsynth/zip.hpp"

namespace fs = std::filesystem;
using namespace textsynth;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    static int counter = 0;
    path = fs::temp_directory_path() /
           ("textsynth-pkg-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    fs::remove_all(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

std::vector<SampleRecord> make_records(std::size_t n, std::vector<std::string> labels = {}) {
  std::vector<SampleRecord> out;
  for (std::size_t i = 0; i < n; ++i) {
    SampleRecord r;
    r.index = i;
    RasterImage img(8, 4, {static_cast<std::uint8_t>(i), 0, 0});
    r.image_png = encode_png(img);
    r.label = labels.empty() ? "\xD8\xB3\xD9\x84\xD8\xA7\xD9\x85 " + std::to_string(i)
                             : labels[i % labels.size()];
    r.font_used = "DejaVu Sans";
    r.size_used = 30;
    out.push_back(std::move(r));
  }
  return out;
}

DatasetManifest write(const std::vector<SampleRecord>& records, const fs::path& out,
                      StorageMode mode, OutputFormat f = OutputFormat::kCrnn,
                      std::size_t batch = 1000) {
  SinkOptions o;
  o.output = out;
  o.format = f;
  o.mode = mode;
  o.batch_size = batch;
  DatasetManifest m;
  m.tool_version = "test";
  m.master_seed = 42;
  m.format = to_string(f);
  m.storage = to_string(mode);
  build_archive(records, 0.9, o, m);
  return m;
}

std::map<std::string, std::string> hash_tree(const fs::path& root) {
  std::map<std::string, std::string> out;
  if (fs::is_regular_file(root)) {
    out[root.filename().string()] = sha256_hex(read_file(root));
    return out;
  }
  for (const auto& e : fs::recursive_directory_iterator(root)) {
    if (e.is_regular_file()) out[fs::relative(e.path(), root).string()] = sha256_hex(read_file(e.path()));
  }
  return out;
}

std::string read_text(const fs::path& p) {
  const Bytes b = read_file(p);
  return std::string(b.begin(), b.end());
}

}  // namespace

TEST_SUITE("packaging") {

TEST_CASE("file names") {
  CHECK(filename_for(0) == "image_000000.png");
  CHECK(filename_for(1) == "image_000001.png");
  CHECK(filename_for(999999) == "image_999999.png");
  CHECK(filename_for(1000000) == "image_1000000.png");
  CHECK_THROWS_AS(filename_for(-1), Error);
}

TEST_CASE("label lines") {
  const std::string salam = "\xD8\xB3\xD9\x84\xD8\xA7\xD9\x85";
  CHECK(encode_label_line(OutputFormat::kCrnn, filename_for(1), salam) ==
        "image_000001.png\t" + salam + "\n");
  CHECK(encode_label_line(OutputFormat::kCsv, filename_for(0), "ab\"cd") ==
        "\"images/image_000000.png\",\"ab\"\"cd\"\n");
  CHECK(encode_label_line(OutputFormat::kTrocr, filename_for(2), "a\"b") ==
        "{\"image\":\"images/image_000002.png\",\"text\":\"a\\\"b\"}\n");
  CHECK(label_file_preamble(OutputFormat::kHuggingface) == "\xEF\xBB\xBF" "file_name,text\n");
  CHECK(label_file_preamble(OutputFormat::kCrnn) == "\xEF\xBB\xBF");
  try {
    encode_label_line(OutputFormat::kCrnn, "x.png", "a\tb");
    FAIL("expected a format error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kFormat);
  }
  CHECK_THROWS_AS(encode_label_line(OutputFormat::kCrnn, "x.png", "a\nb"), Error);
}

TEST_CASE("labels round-trip in every format") {
  std::vector<std::string> labels;
  std::mt19937 gen(4);
  const std::u32string pool = U"abc \"',;\\/{}[]بسلامٕٖٔٗہ٠";
  for (int i = 0; i < 300; ++i) {
    std::u32string s;
    const int len = 1 + static_cast<int>(gen() % 12);
    for (int k = 0; k < len; ++k) s.push_back(pool[gen() % pool.size()]);
    labels.push_back(oracle::encode(s));
  }
  const auto records = make_records(300, labels);
  for (OutputFormat f : {OutputFormat::kCrnn, OutputFormat::kTrocr, OutputFormat::kCsv,
                         OutputFormat::kHuggingface}) {
    const std::string text = encode_labels(records, f);
    CHECK(text.starts_with("\xEF\xBB\xBF"));
    CHECK(text.ends_with("\n"));
    CHECK(text.find('\r') == std::string::npos);
    const auto decoded = decode_labels(text, f);
    REQUIRE(decoded.size() == records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
      CHECK(decoded[i].text == records[i].label);
      const std::string prefix = f == OutputFormat::kCrnn ? "" : "images/";
      CHECK(decoded[i].image == prefix + filename_for(static_cast<std::int64_t>(i)));
    }
  }
}

TEST_CASE("train and validation split") {
  CHECK(train_count(10, 0.9) == 9);
  CHECK(train_count(600000, 0.9) == 540000);
  CHECK(train_count(3, 0.5) == 1);
  CHECK_THROWS_AS(train_count(1, 0.9), Error);
  CHECK_THROWS_AS(train_count(10, 0.0), Error);
  CHECK_THROWS_AS(train_count(10, 1.0), Error);
  auto [train, val] = split_train_val(std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9}, 0.9);
  CHECK(train.size() == 9);
  CHECK(val == std::vector<int>{9});
}

TEST_CASE("files layout") {
  TempDir t;
  write(make_records(3), t.path, StorageMode::kFiles);
  CHECK(fs::exists(t.path / "images" / "image_000000.png"));
  CHECK(fs::exists(t.path / "images" / "image_000002.png"));
  std::size_t images = 0;
  for (const auto& e : fs::directory_iterator(t.path / "images")) images += e.is_regular_file();
  CHECK(images == 3);
  CHECK(fs::exists(t.path / "labels_train.txt"));
  CHECK(fs::exists(t.path / "labels_val.txt"));
  CHECK(fs::exists(t.path / "metadata.json"));
  CHECK(verify(t.path).ok());
}

TEST_CASE("zip layout puts the manifest last") {
  TempDir t;
  fs::create_directories(t.path);
  const fs::path zip = t.path / "d.zip";
  write(make_records(5), zip, StorageMode::kZip, OutputFormat::kTrocr);
  const ZipReader r = ZipReader::open(zip);
  REQUIRE(r.entries().size() == 8);
  CHECK(r.entries().back().name == "metadata.json");
  CHECK(r.find("labels_train.jsonl") != nullptr);
  CHECK(r.find("images/image_000004.png") != nullptr);
  const Bytes manifest = r.read("metadata.json");
  CHECK_FALSE(std::string(manifest.begin(), manifest.end()).starts_with("\xEF\xBB\xBF"));
  CHECK_FALSE(fs::exists(zip.string() + ".partial"));
  CHECK(verify(zip).ok());
}

TEST_CASE("chunked layout") {
  TempDir t;
  const DatasetManifest m = write(make_records(5), t.path, StorageMode::kChunked,
                                  OutputFormat::kCsv, 2);
  std::vector<std::size_t> image_counts;
  for (std::size_t part = 0;; ++part) {
    const fs::path p = t.path / chunk_name(part);
    if (!fs::exists(p)) break;
    const ZipReader r = ZipReader::open(p);
    std::size_t images = 0;
    for (const auto& e : r.entries()) images += e.name.rfind("images/", 0) == 0;
    image_counts.push_back(images);
  }
  CHECK(image_counts == std::vector<std::size_t>{2, 2, 1, 0});
  CHECK(ZipReader::open(t.path / chunk_name(3)).find("metadata.json") != nullptr);
  REQUIRE(m.chunks.size() == 3);
  CHECK(m.chunks[2].first_index == 4);
  CHECK(verify(t.path).ok());
}

TEST_CASE("output is byte-identical across runs") {
  for (StorageMode mode : {StorageMode::kZip, StorageMode::kChunked, StorageMode::kFiles}) {
    TempDir a, b;
    fs::create_directories(a.path);
    fs::create_directories(b.path);
    const fs::path pa = mode == StorageMode::kZip ? a.path / "x.zip" : a.path / "out";
    const fs::path pb = mode == StorageMode::kZip ? b.path / "x.zip" : b.path / "out";
    write(make_records(7), pa, mode, OutputFormat::kHuggingface, 3);
    write(make_records(7), pb, mode, OutputFormat::kHuggingface, 3);
    CHECK(hash_tree(pa) == hash_tree(pb));
  }
}

TEST_CASE("non-empty output directories are refused") {
  TempDir t;
  fs::create_directories(t.path);
  std::ofstream(t.path / "keep.txt") << "x";
  CHECK_THROWS_AS(write(make_records(3), t.path, StorageMode::kFiles), Error);
  CHECK_THROWS_AS(write(make_records(3), t.path, StorageMode::kChunked), Error);
}

TEST_CASE("verify flags one truncated image") {
  TempDir t;
  write(make_records(20), t.path, StorageMode::kFiles);
  const fs::path victim = t.path / "images" / "image_000007.png";
  fs::resize_file(victim, 4);
  const VerifyReport r = verify(t.path);
  REQUIRE(r.failures.size() == 1);
  CHECK(r.failures[0].kind == "signature");
  CHECK(r.failures[0].path == "images/image_000007.png");
}

TEST_CASE("verify flags one deleted label line") {
  TempDir t;
  write(make_records(20), t.path, StorageMode::kFiles);
  const fs::path labels = t.path / "labels_train.txt";
  std::string text = read_text(labels);
  const auto second_line = text.find('\n') + 1;
  text.erase(second_line, text.find('\n', second_line) + 1 - second_line);
  std::ofstream(labels, std::ios::binary | std::ios::trunc) << text;
  const VerifyReport r = verify(t.path);
  REQUIRE(r.failures.size() == 1);
  CHECK(r.failures[0].kind == "count");
  CHECK(r.failures[0].message.find("17") != std::string::npos);
  CHECK(r.failures[0].message.find("18") != std::string::npos);
}

TEST_CASE("verify inside a zip archive") {
  TempDir t;
  fs::create_directories(t.path);
  const fs::path zip = t.path / "d.zip";
  write(make_records(10), zip, StorageMode::kZip);
  // Rebuild the archive with one image cut to four bytes.
  const ZipReader r = ZipReader::open(zip);
  ZipWriter w;
  for (const auto& e : r.entries()) {
    Bytes data = r.read(e);
    if (e.name == "images/image_000003.png") data.resize(4);
    w.add(e.name, data);
  }
  write_file(zip, w.finish());
  const VerifyReport rep = verify(zip);
  REQUIRE(rep.failures.size() == 1);
  CHECK(rep.failures[0].path == "images/image_000003.png");
  CHECK(rep.failures[0].kind == "signature");
}

TEST_CASE("verify catches non-NFC labels and missing manifests") {
  TempDir t;
  write(make_records(4), t.path, StorageMode::kFiles);
  fs::remove(t.path / "metadata.json");
  CHECK_FALSE(verify(t.path).ok());

  TempDir u;
  write(make_records(4), u.path, StorageMode::kFiles);
  std::string text = read_text(u.path / "labels_train.txt");
  text.replace(text.find('\t') + 1, 0, "e\xCC\x81");
  std::ofstream(u.path / "labels_train.txt", std::ios::binary | std::ios::trunc) << text;
  const VerifyReport r = verify(u.path);
  REQUIRE(r.failures.size() == 1);
  CHECK(r.failures[0].kind == "label");
}

TEST_CASE("manifest serialization round-trips") {
  TempDir t;
  const DatasetManifest m = write(make_records(6), t.path, StorageMode::kFiles);
  const DatasetManifest back = DatasetManifest::from_json(nlohmann::ordered_json::parse(m.serialize()));
  CHECK(back.serialize() == m.serialize());
  CHECK(m.train + m.val == m.total);
  const std::string text = m.serialize();
  CHECK(text.ends_with("}\n"));
  CHECK(text.find("\n  \"tool\"") != std::string::npos);
  CHECK(m.checksums.size() == 6 + 2);
}

}
