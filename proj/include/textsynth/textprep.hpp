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

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

// Corpus loading, segmentation, length filtering, NFC normalization and
// script validation. Everything here is a pure function of its inputs.

namespace textsynth {

struct Corpus {
  std::string text;  // UTF-8, no byte-order mark
  std::size_t char_count = 0;
  std::string source_name;

  /// Validates UTF-8 and strips a leading BOM.
  static Corpus from_text(std::string text, std::string source_name = "inline");
  static Corpus load(const std::filesystem::path& path);
};

enum class SegmentationMode { kChar, kWord, kNgram, kSentence, kLine };

const char* to_string(SegmentationMode mode);
std::optional<SegmentationMode> parse_segmentation_mode(std::string_view name);

struct SegmentationConfig {
  SegmentationMode mode = SegmentationMode::kWord;
  int min_graphemes = 1;
  int max_graphemes = 50;
  int ngram_min = 2;
  int ngram_max = 4;

  /// Throws ConfigError when bounds are inverted or below one.
  void validate() const;
};

struct CodePointRange {
  char32_t lo = 0;
  char32_t hi = 0;

  bool contains(char32_t c) const { return c >= lo && c <= hi; }
  friend bool operator==(const CodePointRange&, const CodePointRange&) = default;
};

struct ScriptPolicy {
  std::vector<CodePointRange> allowed;
  std::vector<CodePointRange> preserved_diacritics;

  /// Arabic, Arabic Supplement, Arabic Extended-A, Basic Latin and
  /// General Punctuation; diacritics U+064B..U+065F preserved.
  static ScriptPolicy kashmiri();

  /// Sorts and merges overlapping or adjacent ranges.
  void canonicalize();
  /// Throws ConfigError on inverted ranges or diacritics outside `allowed`.
  void validate() const;

  bool allows(char32_t c) const;
  bool is_preserved(char32_t c) const;
  /// True when the policy admits any of the basic Arabic block.
  bool covers_arabic() const;
};

/// Parses "0600-06FF" (hex, inclusive).
CodePointRange parse_code_point_range(std::string_view text);

struct Segment {
  std::string text;  // NFC, the ground-truth label
  std::size_t grapheme_len = 0;
};

/// Validation outcome: either an accepted Segment or the first code point
/// that fell outside every allowed range.
struct ValidationResult {
  std::optional<Segment> segment;
  char32_t offending = 0;

  bool accepted() const { return segment.has_value(); }
};

struct PreparedSegments {
  std::vector<Segment> segments;
  std::size_t raw_count = 0;
  std::size_t length_filtered = 0;
  std::size_t script_rejected = 0;
};

/// Raw segments in corpus order. Throws kEmptyCorpus on an empty corpus.
std::vector<std::string> segment(const Corpus& corpus,
                                 const SegmentationConfig& config);

/// Word-mode delimiter test (also used for n-gram word extraction).
bool is_word_delimiter(char32_t c);
/// Sentence-ending punctuation.
bool is_sentence_delimiter(char32_t c);

/// Keeps segments whose grapheme count lies in [min, max]; stable.
std::vector<std::string> filter_by_length(std::vector<std::string> segments,
                                          const SegmentationConfig& config);

std::string normalize(std::string_view text);

ValidationResult validate(std::string_view text, const ScriptPolicy& policy);

/// segment -> length filter -> normalize + validate. Throws
/// kNoValidSegments when nothing survives.
PreparedSegments prepare(const Corpus& corpus, const SegmentationConfig& config,
                         const ScriptPolicy& policy);

}  // namespace textsynth
