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
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "textsynth/image_io.hpp"

namespace textsynth {

enum class OutputFormat { kCrnn, kTrocr, kCsv, kHuggingface };
enum class StorageMode { kZip, kChunked, kFiles };

const char* to_string(OutputFormat f);
const char* to_string(StorageMode m);
std::optional<OutputFormat> parse_output_format(std::string_view s);
std::optional<StorageMode> parse_storage_mode(std::string_view s);

/// "txt", "jsonl", "csv", "csv".
const char* label_extension(OutputFormat f);
std::string label_file_name(OutputFormat f, bool train);

struct SampleRecord {
  std::uint64_t index = 0;
  Bytes image_png;
  std::string label;
  std::string font_used;
  int size_used = 0;
  std::string recipe_summary;
};

/// "image_" + index zero-padded to six digits + ".png".
std::string filename_for(std::int64_t index);

/// Leading byte-order mark plus the header line where the format has one.
std::string label_file_preamble(OutputFormat f);
/// One LF-terminated record. Throws kFormat for crnn labels containing a
/// tab or line break.
std::string encode_label_line(OutputFormat f, const std::string& image_name,
                              const std::string& text);
std::string encode_labels(const std::vector<SampleRecord>& records, OutputFormat f);

struct LabelEntry {
  std::string image;  // as written: bare name for crnn, images/NAME otherwise
  std::string text;

  friend bool operator==(const LabelEntry&, const LabelEntry&) = default;
};

/// Strict parser for encode_labels output. Throws kFormat.
std::vector<LabelEntry> decode_labels(std::string_view content, OutputFormat f);

/// floor(ratio * n). Throws kSplit when n < 2 or ratio outside (0, 1).
std::size_t train_count(std::size_t n, double ratio);

template <typename T>
std::pair<std::vector<T>, std::vector<T>> split_train_val(std::vector<T> records,
                                                          double ratio) {
  const std::size_t k = train_count(records.size(), ratio);
  std::vector<T> val(std::make_move_iterator(records.begin() + k),
                     std::make_move_iterator(records.end()));
  records.resize(k);
  return {std::move(records), std::move(val)};
}

using CountList = std::vector<std::pair<std::string, std::uint64_t>>;

struct ChunkInfo {
  std::string name;
  std::uint64_t first_index = 0;
  std::uint64_t images = 0;
};

struct DatasetManifest {
  std::string tool_version;
  std::uint64_t master_seed = 0;
  std::optional<std::string> timestamp;
  nlohmann::ordered_json config = nlohmann::ordered_json::object();
  std::string format;
  std::string storage;

  std::uint64_t total = 0;
  std::uint64_t train = 0;
  std::uint64_t val = 0;
  std::uint64_t clean = 0;
  std::uint64_t augmented = 0;

  CountList statistics;
  CountList transform_counts;
  CountList font_counts;
  CountList background_counts;
  CountList character_histogram;
  CountList label_files;
  std::vector<ChunkInfo> chunks;
  std::vector<std::pair<std::string, std::string>> checksums;

  nlohmann::ordered_json to_json() const;
  static DatasetManifest from_json(const nlohmann::ordered_json& j);
  /// 2-space indented JSON with a trailing newline, no byte-order mark.
  std::string serialize() const;

  std::uint64_t statistic(std::string_view key) const;
};

inline constexpr const char* kManifestName = "metadata.json";
inline constexpr const char* kChunkPrefix = "dataset.part-";

/// "dataset.part-0000.zip".
std::string chunk_name(std::size_t index);

struct SinkOptions {
  std::filesystem::path output;
  OutputFormat format = OutputFormat::kCrnn;
  StorageMode mode = StorageMode::kZip;
  std::size_t total = 0;
  std::size_t train = 0;
  std::size_t batch_size = 1000;
  std::size_t label_flush_interval = 1000;
};

/// Single-consumer dataset writer. Records must arrive in ascending index
/// order starting at 0; indices below `train` go to the train split.
class DatasetSink {
 public:
  virtual ~DatasetSink() = default;
  virtual void add(const SampleRecord& record) = 0;
  /// Writes the remaining labels, fills checksums / label_files / chunks,
  /// then writes metadata.json last.
  virtual void finish(DatasetManifest& manifest) = 0;
  /// Bytes held in memory awaiting output.
  virtual std::size_t buffered_bytes() const = 0;
};

/// zip: `output` is the archive file. chunked and files: `output` is a
/// directory that must be absent or empty.
std::unique_ptr<DatasetSink> open_sink(const SinkOptions& options);

/// Writes a whole dataset in one call.
void build_archive(const std::vector<SampleRecord>& records, double split_ratio,
                   const SinkOptions& options, DatasetManifest& manifest);

struct VerifyFailure {
  std::string path;
  std::string kind;  // signature, count, label, checksum, manifest, archive
  std::string message;
};

struct VerifyReport {
  std::size_t images = 0;
  std::size_t labels = 0;
  std::size_t files_checked = 0;
  std::vector<VerifyFailure> failures;

  bool ok() const { return failures.empty(); }
};

/// Accepts a zip archive, a chunked directory or a files-mode directory.
VerifyReport verify(const std::filesystem::path& dataset);

}  // namespace textsynth
