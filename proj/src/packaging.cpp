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


#include "textsynth/packaging.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>

#include "textsynth/error.hpp"
#include "textsynth/hash.hpp"
#include "textsynth/unicode.hpp"
#include "textsynth/zip.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace textsynth {
namespace {

constexpr std::string_view kBom = "\xEF\xBB\xBF";
constexpr const char* kImagesDir = "images/";

std::string csv_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string_view strip_bom(std::string_view s) {
  if (s.substr(0, kBom.size()) == kBom) s.remove_prefix(kBom.size());
  return s;
}

std::vector<std::string_view> split_lines(std::string_view s) {
  std::vector<std::string_view> lines;
  if (s.empty()) return lines;
  if (s.back() != '\n') throw Error(ErrorCode::kFormat, "label file lacks a trailing newline");
  s.remove_suffix(1);
  std::size_t start = 0;
  while (true) {
    const std::size_t nl = s.find('\n', start);
    lines.push_back(s.substr(start, nl == std::string_view::npos ? nl : nl - start));
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  return lines;
}

// RFC 4180 records; every field of these files is quoted except the
// huggingface header.
std::vector<std::vector<std::string>> parse_csv(std::string_view s) {
  std::vector<std::vector<std::string>> rows;
  std::size_t i = 0;
  while (i < s.size()) {
    std::vector<std::string> row;
    while (true) {
      std::string field;
      if (i < s.size() && s[i] == '"') {
        ++i;
        while (true) {
          if (i >= s.size()) throw Error(ErrorCode::kFormat, "unterminated CSV quote");
          if (s[i] == '"') {
            if (i + 1 < s.size() && s[i + 1] == '"') {
              field += '"';
              i += 2;
              continue;
            }
            ++i;
            break;
          }
          field += s[i++];
        }
      } else {
        while (i < s.size() && s[i] != ',' && s[i] != '\n') {
          if (s[i] == '"') throw Error(ErrorCode::kFormat, "stray quote in CSV field");
          field += s[i++];
        }
      }
      row.push_back(std::move(field));
      if (i >= s.size()) throw Error(ErrorCode::kFormat, "CSV record lacks a newline");
      if (s[i] == ',') {
        ++i;
        continue;
      }
      if (s[i] != '\n') throw Error(ErrorCode::kFormat, "malformed CSV record");
      ++i;
      break;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string bytes_to_string(const Bytes& b) { return std::string(b.begin(), b.end()); }

ordered_json counts_to_json(const CountList& list) {
  ordered_json j = ordered_json::object();
  for (const auto& [k, v] : list) j[k] = v;
  return j;
}

CountList counts_from_json(const ordered_json& j, const char* key) {
  CountList out;
  if (!j.contains(key)) return out;
  for (const auto& [k, v] : j.at(key).items()) out.emplace_back(k, v.get<std::uint64_t>());
  return out;
}

void write_atomic(const fs::path& path, std::span<const std::uint8_t> bytes) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  const fs::path tmp = path.string() + ".partial";
  write_file(tmp, bytes);
  fs::rename(tmp, path);
}

void prepare_directory(const fs::path& dir) {
  if (fs::exists(dir)) {
    if (!fs::is_directory(dir)) {
      throw Error(ErrorCode::kIo, "output exists and is not a directory: " + dir.string());
    }
    if (!fs::is_empty(dir)) {
      throw Error(ErrorCode::kIo, "output directory is not empty: " + dir.string());
    }
  }
  fs::create_directories(dir);
}

// Accumulated label text for one split.
struct LabelBuffer {
  std::string text;
  std::uint64_t count = 0;
};

class ZipSink : public DatasetSink {
 public:
  explicit ZipSink(const SinkOptions& o) : opts_(o) {
    train_.text = val_.text = label_file_preamble(o.format);
  }

  void add(const SampleRecord& r) override {
    const std::string name = filename_for(static_cast<std::int64_t>(r.index));
    const std::string member = kImagesDir + name;
    zip_.add(member, r.image_png);
    checksums_.emplace_back(member, sha256_hex(r.image_png));
    LabelBuffer& buf = r.index < opts_.train ? train_ : val_;
    buf.text += encode_label_line(opts_.format, name, r.label);
    ++buf.count;
  }

  void finish(DatasetManifest& m) override {
    for (bool train : {true, false}) {
      const LabelBuffer& buf = train ? train_ : val_;
      const std::string name = label_file_name(opts_.format, train);
      zip_.add(name, buf.text);
      checksums_.emplace_back(name, sha256_hex(buf.text));
      m.label_files.emplace_back(name, buf.count);
    }
    m.checksums = std::move(checksums_);
    zip_.add(kManifestName, m.serialize());
    const Bytes archive = zip_.finish();
    write_atomic(opts_.output, archive);
  }

  std::size_t buffered_bytes() const override {
    return zip_.size() + train_.text.size() + val_.text.size();
  }

 private:
  SinkOptions opts_;
  ZipWriter zip_;
  LabelBuffer train_;
  LabelBuffer val_;
  std::vector<std::pair<std::string, std::string>> checksums_;
};

class ChunkedSink : public DatasetSink {
 public:
  explicit ChunkedSink(const SinkOptions& o) : opts_(o) {
    if (o.batch_size == 0) throw Error(ErrorCode::kInvalidArgument, "batch size must be >= 1");
    prepare_directory(o.output);
    start_part();
  }

  void add(const SampleRecord& r) override {
    const std::string name = filename_for(static_cast<std::int64_t>(r.index));
    const std::string member = kImagesDir + name;
    if (images_ == 0) first_index_ = r.index;
    zip_->add(member, r.image_png);
    member_checksums_.emplace_back(chunk_name(part_) + "/" + member, sha256_hex(r.image_png));
    LabelBuffer& buf = r.index < opts_.train ? train_ : val_;
    buf.text += encode_label_line(opts_.format, name, r.label);
    ++buf.count;
    if (++images_ == opts_.batch_size) flush_part();
  }

  void finish(DatasetManifest& m) override {
    if (images_ > 0) flush_part();
    m.checksums = std::move(checksums_);
    m.label_files = std::move(label_files_);
    m.chunks = std::move(chunks_);
    ZipWriter last;
    last.add(kManifestName, m.serialize());
    const Bytes archive = last.finish();
    write_atomic(opts_.output / chunk_name(part_), archive);
  }

  std::size_t buffered_bytes() const override {
    return zip_->size() + train_.text.size() + val_.text.size();
  }

 private:
  void start_part() {
    zip_ = std::make_unique<ZipWriter>();
    train_ = {label_file_preamble(opts_.format), 0};
    val_ = {label_file_preamble(opts_.format), 0};
    images_ = 0;
  }

  void flush_part() {
    const std::string part = chunk_name(part_);
    for (bool train : {true, false}) {
      const LabelBuffer& buf = train ? train_ : val_;
      if (buf.count == 0) continue;
      const std::string name = label_file_name(opts_.format, train);
      zip_->add(name, buf.text);
      member_checksums_.emplace_back(part + "/" + name, sha256_hex(buf.text));
      label_files_.emplace_back(part + "/" + name, buf.count);
    }
    const Bytes archive = zip_->finish();
    write_atomic(opts_.output / part, archive);
    for (auto& c : member_checksums_) checksums_.push_back(std::move(c));
    member_checksums_.clear();
    checksums_.emplace_back(part, sha256_hex(archive));
    chunks_.push_back({part, first_index_, images_});
    ++part_;
    start_part();
  }

  SinkOptions opts_;
  std::unique_ptr<ZipWriter> zip_;
  LabelBuffer train_;
  LabelBuffer val_;
  std::size_t part_ = 0;
  std::size_t images_ = 0;
  std::uint64_t first_index_ = 0;
  std::vector<std::pair<std::string, std::string>> member_checksums_;
  std::vector<std::pair<std::string, std::string>> checksums_;
  CountList label_files_;
  std::vector<ChunkInfo> chunks_;
};

class FilesSink : public DatasetSink {
 public:
  explicit FilesSink(const SinkOptions& o) : opts_(o) {
    prepare_directory(o.output);
    fs::create_directories(o.output / "images");
    for (bool train : {true, false}) {
      std::ofstream out(label_path(train), std::ios::binary | std::ios::trunc);
      out << label_file_preamble(o.format);
      if (!out) throw Error(ErrorCode::kIo, "cannot write " + label_path(train).string());
    }
  }

  void add(const SampleRecord& r) override {
    const std::string name = filename_for(static_cast<std::int64_t>(r.index));
    write_file(opts_.output / "images" / name, r.image_png);
    checksums_.emplace_back(kImagesDir + name, sha256_hex(r.image_png));
    LabelBuffer& buf = r.index < opts_.train ? train_ : val_;
    buf.text += encode_label_line(opts_.format, name, r.label);
    ++buf.count;
    if (++since_flush_ >= opts_.label_flush_interval) flush_labels();
  }

  void finish(DatasetManifest& m) override {
    flush_labels();
    for (bool train : {true, false}) {
      const std::string name = label_file_name(opts_.format, train);
      checksums_.emplace_back(name, sha256_hex(read_file(label_path(train))));
      m.label_files.emplace_back(name, train ? train_total_ : val_total_);
    }
    m.checksums = std::move(checksums_);
    const std::string text = m.serialize();
    write_atomic(opts_.output / kManifestName,
                 std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
  }

  std::size_t buffered_bytes() const override {
    return train_.text.size() + val_.text.size();
  }

 private:
  fs::path label_path(bool train) const {
    return opts_.output / label_file_name(opts_.format, train);
  }

  void flush_labels() {
    for (bool train : {true, false}) {
      LabelBuffer& buf = train ? train_ : val_;
      if (buf.text.empty()) continue;
      std::ofstream out(label_path(train), std::ios::binary | std::ios::app);
      out << buf.text;
      out.flush();
      if (!out) throw Error(ErrorCode::kIo, "cannot write " + label_path(train).string());
      (train ? train_total_ : val_total_) += buf.count;
      buf = {};
    }
    since_flush_ = 0;
  }

  SinkOptions opts_;
  LabelBuffer train_;
  LabelBuffer val_;
  std::uint64_t train_total_ = 0;
  std::uint64_t val_total_ = 0;
  std::size_t since_flush_ = 0;
  std::vector<std::pair<std::string, std::string>> checksums_;
};

// ---------------------------------------------------------------------------
// Verification

struct Container {
  std::string prefix;  // "" or "dataset.part-0000.zip/"
  std::optional<ZipReader> zip;
  fs::path dir;
  std::vector<std::string> members;

  Bytes read(const std::string& member) const {
    if (zip) return zip->read(member);
    return read_file(dir / member);
  }
};

bool is_label_member(const std::string& name) {
  return name.rfind("labels_train.", 0) == 0 || name.rfind("labels_val.", 0) == 0;
}

std::optional<OutputFormat> format_from_extension(const std::string& name,
                                                  const DatasetManifest* manifest) {
  if (manifest != nullptr) {
    if (auto f = parse_output_format(manifest->format)) return f;
  }
  if (name.ends_with(".txt")) return OutputFormat::kCrnn;
  if (name.ends_with(".jsonl")) return OutputFormat::kTrocr;
  if (name.ends_with(".csv")) return OutputFormat::kCsv;
  return std::nullopt;
}

}  // namespace

const char* to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::kCrnn: return "crnn";
    case OutputFormat::kTrocr: return "trocr";
    case OutputFormat::kCsv: return "csv";
    case OutputFormat::kHuggingface: return "huggingface";
  }
  return "crnn";
}

const char* to_string(StorageMode m) {
  switch (m) {
    case StorageMode::kZip: return "zip";
    case StorageMode::kChunked: return "chunked";
    case StorageMode::kFiles: return "files";
  }
  return "zip";
}

std::optional<OutputFormat> parse_output_format(std::string_view s) {
  for (OutputFormat f : {OutputFormat::kCrnn, OutputFormat::kTrocr, OutputFormat::kCsv,
                         OutputFormat::kHuggingface}) {
    if (s == to_string(f)) return f;
  }
  return std::nullopt;
}

std::optional<StorageMode> parse_storage_mode(std::string_view s) {
  for (StorageMode m : {StorageMode::kZip, StorageMode::kChunked, StorageMode::kFiles}) {
    if (s == to_string(m)) return m;
  }
  return std::nullopt;
}

const char* label_extension(OutputFormat f) {
  switch (f) {
    case OutputFormat::kCrnn: return "txt";
    case OutputFormat::kTrocr: return "jsonl";
    case OutputFormat::kCsv:
    case OutputFormat::kHuggingface: return "csv";
  }
  return "txt";
}

std::string label_file_name(OutputFormat f, bool train) {
  return std::string(train ? "labels_train." : "labels_val.") + label_extension(f);
}

std::string filename_for(std::int64_t index) {
  if (index < 0) throw Error(ErrorCode::kInvalidArgument, "negative sample index");
  char buf[40];
  std::snprintf(buf, sizeof(buf), "image_%06lld.png", static_cast<long long>(index));
  return buf;
}

std::string label_file_preamble(OutputFormat f) {
  std::string out(kBom);
  if (f == OutputFormat::kHuggingface) out += "file_name,text\n";
  return out;
}

std::string encode_label_line(OutputFormat f, const std::string& image_name,
                              const std::string& text) {
  switch (f) {
    case OutputFormat::kCrnn:
      if (text.find_first_of("\t\n\r") != std::string::npos) {
        throw Error(ErrorCode::kFormat,
                    "crnn labels cannot contain tabs or line breaks: " + image_name);
      }
      return image_name + "\t" + text + "\n";
    case OutputFormat::kTrocr: {
      ordered_json j;
      j["image"] = kImagesDir + image_name;
      j["text"] = text;
      return j.dump() + "\n";
    }
    case OutputFormat::kCsv:
    case OutputFormat::kHuggingface:
      return csv_quote(kImagesDir + image_name) + "," + csv_quote(text) + "\n";
  }
  return {};
}

std::string encode_labels(const std::vector<SampleRecord>& records, OutputFormat f) {
  if (records.empty()) throw Error(ErrorCode::kInvalidArgument, "no records to encode");
  std::string out = label_file_preamble(f);
  for (const SampleRecord& r : records) {
    out += encode_label_line(f, filename_for(static_cast<std::int64_t>(r.index)), r.label);
  }
  return out;
}

std::vector<LabelEntry> decode_labels(std::string_view content, OutputFormat f) {
  content = strip_bom(content);
  std::vector<LabelEntry> out;
  switch (f) {
    case OutputFormat::kCrnn:
      for (std::string_view line : split_lines(content)) {
        const std::size_t tab = line.find('\t');
        if (tab == std::string_view::npos || line.find('\t', tab + 1) != std::string_view::npos) {
          throw Error(ErrorCode::kFormat, "crnn line must hold exactly one tab");
        }
        out.push_back({std::string(line.substr(0, tab)), std::string(line.substr(tab + 1))});
      }
      break;
    case OutputFormat::kTrocr:
      for (std::string_view line : split_lines(content)) {
        ordered_json j;
        try {
          j = ordered_json::parse(line);
        } catch (const nlohmann::json::exception& e) {
          throw Error(ErrorCode::kFormat, std::string("bad JSONL record: ") + e.what());
        }
        if (!j.is_object() || !j.contains("image") || !j.contains("text") ||
            !j["image"].is_string() || !j["text"].is_string()) {
          throw Error(ErrorCode::kFormat, "JSONL record needs string image and text");
        }
        out.push_back({j["image"].get<std::string>(), j["text"].get<std::string>()});
      }
      break;
    case OutputFormat::kCsv:
    case OutputFormat::kHuggingface: {
      auto rows = parse_csv(content);
      std::size_t first = 0;
      if (f == OutputFormat::kHuggingface) {
        if (rows.empty() || rows[0] != std::vector<std::string>{"file_name", "text"}) {
          throw Error(ErrorCode::kFormat, "missing file_name,text header");
        }
        first = 1;
      }
      for (std::size_t i = first; i < rows.size(); ++i) {
        if (rows[i].size() != 2) throw Error(ErrorCode::kFormat, "CSV record needs two fields");
        out.push_back({std::move(rows[i][0]), std::move(rows[i][1])});
      }
      break;
    }
  }
  return out;
}

std::size_t train_count(std::size_t n, double ratio) {
  if (n < 2) throw Error(ErrorCode::kSplit, "at least two samples are needed to split");
  if (!(ratio > 0.0 && ratio < 1.0)) {
    throw Error(ErrorCode::kSplit, "split ratio must lie within (0, 1)");
  }
  return static_cast<std::size_t>(std::floor(ratio * static_cast<double>(n)));
}

std::string chunk_name(std::size_t index) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%s%04zu.zip", kChunkPrefix, index);
  return buf;
}

ordered_json DatasetManifest::to_json() const {
  ordered_json j;
  j["tool"] = "textsynth";
  j["tool_version"] = tool_version;
  j["master_seed"] = master_seed;
  if (timestamp) j["timestamp"] = *timestamp;
  j["format"] = format;
  j["storage"] = storage;
  j["config"] = config;
  j["counts"] = {{"total", total}, {"train", train}, {"val", val},
                 {"clean", clean}, {"augmented", augmented}};
  j["statistics"] = counts_to_json(statistics);
  j["transform_counts"] = counts_to_json(transform_counts);
  j["font_counts"] = counts_to_json(font_counts);
  j["background_counts"] = counts_to_json(background_counts);
  j["character_histogram"] = counts_to_json(character_histogram);
  j["label_files"] = counts_to_json(label_files);
  if (!chunks.empty()) {
    ordered_json arr = ordered_json::array();
    for (const ChunkInfo& c : chunks) {
      arr.push_back({{"name", c.name}, {"first_index", c.first_index}, {"images", c.images}});
    }
    j["chunks"] = std::move(arr);
  }
  ordered_json sums = ordered_json::object();
  for (const auto& [path, hash] : checksums) sums[path] = hash;
  j["checksums"] = std::move(sums);
  return j;
}

DatasetManifest DatasetManifest::from_json(const ordered_json& j) {
  DatasetManifest m;
  try {
    m.tool_version = j.value("tool_version", "");
    m.master_seed = j.value("master_seed", std::uint64_t{0});
    if (j.contains("timestamp")) m.timestamp = j["timestamp"].get<std::string>();
    m.format = j.value("format", "");
    m.storage = j.value("storage", "");
    if (j.contains("config")) m.config = j["config"];
    const ordered_json& c = j.at("counts");
    m.total = c.at("total").get<std::uint64_t>();
    m.train = c.at("train").get<std::uint64_t>();
    m.val = c.at("val").get<std::uint64_t>();
    m.clean = c.at("clean").get<std::uint64_t>();
    m.augmented = c.at("augmented").get<std::uint64_t>();
    m.statistics = counts_from_json(j, "statistics");
    m.transform_counts = counts_from_json(j, "transform_counts");
    m.font_counts = counts_from_json(j, "font_counts");
    m.background_counts = counts_from_json(j, "background_counts");
    m.character_histogram = counts_from_json(j, "character_histogram");
    m.label_files = counts_from_json(j, "label_files");
    if (j.contains("chunks")) {
      for (const auto& c2 : j["chunks"]) {
        m.chunks.push_back({c2.at("name").get<std::string>(),
                            c2.at("first_index").get<std::uint64_t>(),
                            c2.at("images").get<std::uint64_t>()});
      }
    }
    for (const auto& [k, v] : j.at("checksums").items()) {
      m.checksums.emplace_back(k, v.get<std::string>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kFormat, std::string("malformed manifest: ") + e.what());
  }
  return m;
}

std::string DatasetManifest::serialize() const { return to_json().dump(2) + "\n"; }

std::uint64_t DatasetManifest::statistic(std::string_view key) const {
  for (const auto& [k, v] : statistics) {
    if (k == key) return v;
  }
  return 0;
}

std::unique_ptr<DatasetSink> open_sink(const SinkOptions& options) {
  if (options.train > options.total) {
    throw Error(ErrorCode::kSplit, "train count exceeds total");
  }
  switch (options.mode) {
    case StorageMode::kZip: return std::make_unique<ZipSink>(options);
    case StorageMode::kChunked: return std::make_unique<ChunkedSink>(options);
    case StorageMode::kFiles: return std::make_unique<FilesSink>(options);
  }
  return nullptr;
}

void build_archive(const std::vector<SampleRecord>& records, double split_ratio,
                   const SinkOptions& options, DatasetManifest& manifest) {
  SinkOptions o = options;
  o.total = records.size();
  o.train = train_count(records.size(), split_ratio);
  manifest.total = o.total;
  manifest.train = o.train;
  manifest.val = o.total - o.train;
  manifest.format = to_string(o.format);
  manifest.storage = to_string(o.mode);
  auto sink = open_sink(o);
  for (const SampleRecord& r : records) sink->add(r);
  sink->finish(manifest);
}

VerifyReport verify(const fs::path& dataset) {
  VerifyReport report;
  auto fail = [&](std::string path, std::string kind, std::string message) {
    report.failures.push_back({std::move(path), std::move(kind), std::move(message)});
  };

  std::vector<Container> containers;
  std::optional<DatasetManifest> manifest;
  std::string manifest_text;
  bool manifest_found = false;
  bool chunked = false;

  try {
    if (fs::is_regular_file(dataset)) {
      Container c;
      c.zip.emplace(ZipReader::open(dataset));
      for (const ZipEntry& e : c.zip->entries()) c.members.push_back(e.name);
      containers.push_back(std::move(c));
    } else if (fs::is_directory(dataset)) {
      if (fs::exists(dataset / kManifestName) || fs::exists(dataset / "images")) {
        Container c;
        c.dir = dataset;
        for (const auto& entry : fs::recursive_directory_iterator(dataset)) {
          if (entry.is_regular_file()) {
            c.members.push_back(fs::relative(entry.path(), dataset).generic_string());
          }
        }
        std::sort(c.members.begin(), c.members.end());
        containers.push_back(std::move(c));
      } else {
        chunked = true;
        std::vector<std::string> parts;
        for (const auto& entry : fs::directory_iterator(dataset)) {
          const std::string name = entry.path().filename().string();
          if (name.rfind(kChunkPrefix, 0) == 0 && name.ends_with(".zip")) parts.push_back(name);
        }
        std::sort(parts.begin(), parts.end());
        for (const std::string& part : parts) {
          Container c;
          c.prefix = part + "/";
          c.dir = dataset / part;
          try {
            c.zip.emplace(ZipReader::open(dataset / part));
            for (const ZipEntry& e : c.zip->entries()) c.members.push_back(e.name);
          } catch (const Error& e) {
            fail(part, "archive", e.what());
            continue;
          }
          containers.push_back(std::move(c));
        }
      }
    } else {
      fail(dataset.string(), "archive", "dataset not found");
      return report;
    }
  } catch (const Error& e) {
    fail(dataset.string(), "archive", e.what());
    return report;
  }

  for (const Container& c : containers) {
    if (std::find(c.members.begin(), c.members.end(), kManifestName) == c.members.end()) {
      continue;
    }
    manifest_found = true;
    try {
      manifest_text = bytes_to_string(c.read(kManifestName));
      manifest = DatasetManifest::from_json(ordered_json::parse(manifest_text));
    } catch (const std::exception& e) {
      fail(c.prefix + kManifestName, "manifest", e.what());
    }
  }
  if (!manifest_found) fail(kManifestName, "manifest", "manifest missing");

  std::map<std::string, std::string> expected;
  std::map<std::string, std::uint64_t> expected_labels;
  if (manifest) {
    for (const auto& [p, h] : manifest->checksums) expected[p] = h;
    for (const auto& [p, n] : manifest->label_files) expected_labels[p] = n;
  }
  std::set<std::string> seen;
  std::size_t total_labels = 0;
  bool count_failure = false;

  auto checksum_note = [&](const std::string& path, const Bytes& bytes) -> std::string {
    seen.insert(path);
    if (!manifest) return {};
    auto it = expected.find(path);
    if (it == expected.end()) return "not listed in manifest checksums";
    if (it->second != sha256_hex(bytes)) return "checksum mismatch";
    return {};
  };

  for (const Container& c : containers) {
    const std::size_t failures_before = report.failures.size();
    std::set<std::string> images;
    for (const std::string& m : c.members) {
      if (m.rfind(kImagesDir, 0) == 0) images.insert(m.substr(std::string(kImagesDir).size()));
    }
    for (const std::string& member : c.members) {
      const std::string path = c.prefix + member;
      if (member == kManifestName) continue;
      if (!chunked && member.ends_with(".partial")) {
        fail(path, "archive", "incomplete write left behind");
        continue;
      }
      Bytes bytes;
      try {
        bytes = c.read(member);
      } catch (const Error& e) {
        seen.insert(path);
        fail(path, "archive", e.what());
        continue;
      }
      ++report.files_checked;
      const std::string note = checksum_note(path, bytes);
      const std::string suffix = note.empty() ? "" : "; " + note;

      if (member.rfind(kImagesDir, 0) == 0) {
        ++report.images;
        if (!has_png_signature(bytes)) {
          fail(path, "signature", "PNG signature missing" + suffix);
        } else if (!note.empty()) {
          fail(path, "checksum", note);
        }
        continue;
      }
      if (!is_label_member(member)) {
        fail(path, "manifest", "unexpected file" + suffix);
        continue;
      }
      const auto fmt = format_from_extension(member, manifest ? &*manifest : nullptr);
      if (!fmt) {
        fail(path, "label", "unknown label format" + suffix);
        continue;
      }
      std::vector<LabelEntry> entries;
      try {
        entries = decode_labels(bytes_to_string(bytes), *fmt);
      } catch (const Error& e) {
        fail(path, "label", e.what() + suffix);
        continue;
      }
      total_labels += entries.size();
      report.labels += entries.size();
      std::string problem;
      for (const LabelEntry& e : entries) {
        std::string name = e.image;
        if (name.rfind(kImagesDir, 0) == 0) name = name.substr(std::string(kImagesDir).size());
        if (!unicode::is_valid(e.text) || unicode::nfc(e.text) != e.text) {
          problem = "label for " + e.image + " is not NFC text";
          break;
        }
        if (e.text.empty()) {
          problem = "empty label for " + e.image;
          break;
        }
        if (!images.count(name)) {
          problem = "label references missing image " + e.image;
          break;
        }
      }
      if (!problem.empty()) {
        fail(path, "label", problem + suffix);
        continue;
      }
      auto exp = expected_labels.find(path);
      if (manifest && exp != expected_labels.end() && exp->second != entries.size()) {
        count_failure = true;
        fail(path, "count",
             member + " holds " + std::to_string(entries.size()) +
                 " labels, manifest records " + std::to_string(exp->second) + suffix);
      } else if (!note.empty()) {
        fail(path, "checksum", note);
      }
    }
    if (chunked && report.failures.size() == failures_before) {
      const std::string part = c.prefix.substr(0, c.prefix.size() - 1);
      if (manifest && expected.count(part)) {
        seen.insert(part);
        if (expected[part] != sha256_hex(read_file(c.dir))) {
          fail(part, "checksum", "checksum mismatch");
        }
      }
    } else if (chunked) {
      seen.insert(c.prefix.substr(0, c.prefix.size() - 1));
    }
  }

  if (manifest) {
    for (const auto& [p, h] : manifest->checksums) {
      if (!seen.count(p)) fail(p, "checksum", "listed in manifest but missing");
    }
    if (!count_failure && total_labels != report.images) {
      count_failure = true;
      fail(dataset.filename().string(), "count",
           "label count " + std::to_string(total_labels) + " != image count " +
               std::to_string(report.images));
    }
    if (!count_failure && report.images != manifest->total) {
      fail(dataset.filename().string(), "count",
           "image count " + std::to_string(report.images) + " != manifest total " +
               std::to_string(manifest->total));
    }
  } else if (total_labels != report.images) {
    fail(dataset.filename().string(), "count",
         "label count " + std::to_string(total_labels) + " != image count " +
             std::to_string(report.images));
  }
  return report;
}

}  // namespace textsynth
