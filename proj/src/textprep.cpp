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

#include "textsynth/textprep.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iterator>
#include <sstream>
#include <unordered_set>

#include "textsynth/error.hpp"
#include "textsynth/unicode.hpp"

namespace textsynth {
namespace {

constexpr std::string_view kBom = "\xEF\xBB\xBF";

void push_if_content(std::vector<std::string>& out, std::u32string_view piece) {
  if (piece.empty()) return;
  std::string text = unicode::encode(piece);
  if (unicode::is_whitespace_only(text)) return;
  out.push_back(std::move(text));
}

std::vector<std::string> split_words(std::u32string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || is_word_delimiter(text[i])) {
      push_if_content(out, text.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

std::vector<std::string> split_ngrams(std::u32string_view text,
                                      const SegmentationConfig& config) {
  const std::vector<std::string> words = split_words(text);
  std::vector<std::string> out;
  std::unordered_set<std::string> seen;
  for (int n = config.ngram_min; n <= config.ngram_max; ++n) {
    const auto width = static_cast<std::size_t>(n);
    if (words.size() < width) break;
    for (std::size_t i = 0; i + width <= words.size(); ++i) {
      std::string joined = words[i];
      for (std::size_t k = 1; k < width; ++k) {
        joined += ' ';
        joined += words[i + k];
      }
      if (seen.insert(joined).second) out.push_back(std::move(joined));
    }
  }
  return out;
}

// Line breaks inside a sentence become single spaces; a label cannot span
// lines in any of the output formats.
std::u32string flatten_line_breaks(std::u32string_view piece) {
  std::u32string out;
  out.reserve(piece.size());
  for (std::size_t i = 0; i < piece.size(); ++i) {
    const char32_t c = piece[i];
    if (c == U'\r') {
      if (i + 1 < piece.size() && piece[i + 1] == U'\n') ++i;
      out.push_back(U' ');
    } else if (c == U'\n') {
      out.push_back(U' ');
    } else {
      out.push_back(c);
    }
  }
  return out;
}

void push_trimmed(std::vector<std::string>& out, std::u32string_view piece) {
  std::string trimmed = unicode::trim(unicode::encode(piece));
  if (!trimmed.empty()) out.push_back(std::move(trimmed));
}

std::vector<std::string> split_sentences(std::u32string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || is_sentence_delimiter(text[i])) {
      push_trimmed(out, flatten_line_breaks(text.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

std::vector<std::string> split_lines(std::u32string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  std::size_t i = 0;
  while (i <= text.size()) {
    if (i == text.size()) {
      push_trimmed(out, text.substr(start, i - start));
      break;
    }
    if (text[i] == U'\n' || text[i] == U'\r') {
      push_trimmed(out, text.substr(start, i - start));
      if (text[i] == U'\r' && i + 1 < text.size() && text[i + 1] == U'\n') ++i;
      start = i + 1;
    }
    ++i;
  }
  return out;
}

std::vector<std::string> split_graphemes(std::string_view text) {
  std::vector<std::string> out;
  for (std::string& g : unicode::graphemes(text)) {
    if (!unicode::is_whitespace_only(g)) out.push_back(std::move(g));
  }
  return out;
}

std::vector<CodePointRange> merge_ranges(std::vector<CodePointRange> ranges) {
  std::sort(ranges.begin(), ranges.end(),
            [](const CodePointRange& a, const CodePointRange& b) {
              return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
            });
  std::vector<CodePointRange> merged;
  for (const CodePointRange& r : ranges) {
    if (!merged.empty() && r.lo <= merged.back().hi + 1) {
      merged.back().hi = std::max(merged.back().hi, r.hi);
    } else {
      merged.push_back(r);
    }
  }
  return merged;
}

bool any_contains(const std::vector<CodePointRange>& ranges, char32_t c) {
  return std::any_of(ranges.begin(), ranges.end(),
                     [c](const CodePointRange& r) { return r.contains(c); });
}

}  // namespace

Corpus Corpus::from_text(std::string text, std::string source_name) {
  if (text.starts_with(kBom)) text.erase(0, kBom.size());
  if (!unicode::is_valid(text)) {
    throw Error(ErrorCode::kEncoding,
                "corpus '" + source_name + "' is not valid UTF-8");
  }
  Corpus corpus;
  corpus.char_count = unicode::scalar_count(text);
  corpus.text = std::move(text);
  corpus.source_name = std::move(source_name);
  return corpus;
}

Corpus Corpus::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIo, "cannot read corpus " + path.string());
  }
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return from_text(std::move(text), path.filename().string());
}

const char* to_string(SegmentationMode mode) {
  switch (mode) {
    case SegmentationMode::kChar: return "char";
    case SegmentationMode::kWord: return "word";
    case SegmentationMode::kNgram: return "ngram";
    case SegmentationMode::kSentence: return "sentence";
    case SegmentationMode::kLine: return "line";
  }
  return "word";
}

std::optional<SegmentationMode> parse_segmentation_mode(std::string_view name) {
  if (name == "char") return SegmentationMode::kChar;
  if (name == "word") return SegmentationMode::kWord;
  if (name == "ngram") return SegmentationMode::kNgram;
  if (name == "sentence") return SegmentationMode::kSentence;
  if (name == "line") return SegmentationMode::kLine;
  return std::nullopt;
}

void SegmentationConfig::validate() const {
  std::vector<FieldIssue> issues;
  if (min_graphemes < 1) {
    issues.push_back({"segmentation.min_graphemes", "must be at least 1"});
  }
  if (max_graphemes < min_graphemes) {
    issues.push_back({"segmentation.max_graphemes",
                      "must be >= min_graphemes (" +
                          std::to_string(min_graphemes) + ")"});
  }
  if (ngram_min < 1 || ngram_max < ngram_min) {
    issues.push_back({"segmentation.ngram", "requires 1 <= ngram_min <= ngram_max"});
  }
  if (!issues.empty()) throw ConfigError(std::move(issues));
}

ScriptPolicy ScriptPolicy::kashmiri() {
  ScriptPolicy policy;
  policy.allowed = {{0x0600, 0x06FF}, {0x0750, 0x077F}, {0x08A0, 0x08FF},
                    {0x0020, 0x007F}, {0x2000, 0x206F}};
  policy.preserved_diacritics = {{0x064B, 0x065F}};
  policy.canonicalize();
  return policy;
}

void ScriptPolicy::canonicalize() {
  allowed = merge_ranges(std::move(allowed));
  preserved_diacritics = merge_ranges(std::move(preserved_diacritics));
}

void ScriptPolicy::validate() const {
  std::vector<FieldIssue> issues;
  if (allowed.empty()) {
    issues.push_back({"script.ranges", "at least one allowed range is required"});
  }
  for (std::size_t i = 0; i < allowed.size(); ++i) {
    if (allowed[i].lo > allowed[i].hi || allowed[i].hi > 0x10FFFF) {
      issues.push_back({"script.ranges[" + std::to_string(i) + "]",
                        "invalid code point interval"});
    }
  }
  for (const CodePointRange& d : preserved_diacritics) {
    for (char32_t c = d.lo; c <= d.hi; ++c) {
      if (!allows(c)) {
        issues.push_back({"script.preserved_diacritics",
                          unicode::format_code_point(c) +
                              " is not inside any allowed range"});
        break;
      }
    }
  }
  if (!issues.empty()) throw ConfigError(std::move(issues));
}

bool ScriptPolicy::allows(char32_t c) const { return any_contains(allowed, c); }

bool ScriptPolicy::is_preserved(char32_t c) const {
  return any_contains(preserved_diacritics, c);
}

bool ScriptPolicy::covers_arabic() const {
  return std::any_of(allowed.begin(), allowed.end(), [](const CodePointRange& r) {
    return r.lo <= 0x06FF && r.hi >= 0x0600;
  });
}

CodePointRange parse_code_point_range(std::string_view text) {
  const auto dash = text.find('-');
  auto parse_hex = [&](std::string_view part) {
    if (part.starts_with("U+") || part.starts_with("u+")) part.remove_prefix(2);
    if (part.starts_with("0x") || part.starts_with("0X")) part.remove_prefix(2);
    unsigned value = 0;
    const auto [ptr, ec] =
        std::from_chars(part.data(), part.data() + part.size(), value, 16);
    if (ec != std::errc() || ptr != part.data() + part.size() || part.empty()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "bad code point range '" + std::string(text) + "'");
    }
    return static_cast<char32_t>(value);
  };
  CodePointRange range;
  if (dash == std::string_view::npos) {
    range.lo = range.hi = parse_hex(text);
  } else {
    range.lo = parse_hex(text.substr(0, dash));
    range.hi = parse_hex(text.substr(dash + 1));
  }
  if (range.lo > range.hi || range.hi > 0x10FFFF) {
    throw Error(ErrorCode::kInvalidArgument,
                "bad code point range '" + std::string(text) + "'");
  }
  return range;
}

bool is_word_delimiter(char32_t c) {
  switch (c) {
    case U' ': case U'\t': case U'\n': case U'\r':
    case U'.': case U'!': case U'?': case U':': case U';': case U',':
    case 0x060C: case 0x061B: case 0x061F: case 0x06D4:
      return true;
    default:
      return false;
  }
}

bool is_sentence_delimiter(char32_t c) {
  return c == U'.' || c == U'?' || c == U'!' || c == 0x061F || c == 0x06D4;
}

std::vector<std::string> segment(const Corpus& corpus,
                                 const SegmentationConfig& config) {
  if (corpus.text.empty()) {
    throw Error(ErrorCode::kEmptyCorpus,
                "corpus '" + corpus.source_name + "' is empty");
  }
  if (config.mode == SegmentationMode::kChar) {
    return split_graphemes(corpus.text);
  }
  const std::u32string scalars = unicode::decode(corpus.text);
  switch (config.mode) {
    case SegmentationMode::kWord: return split_words(scalars);
    case SegmentationMode::kNgram: return split_ngrams(scalars, config);
    case SegmentationMode::kSentence: return split_sentences(scalars);
    case SegmentationMode::kLine: return split_lines(scalars);
    case SegmentationMode::kChar: break;
  }
  return {};
}

std::vector<std::string> filter_by_length(std::vector<std::string> segments,
                                          const SegmentationConfig& config) {
  const auto lo = static_cast<std::size_t>(config.min_graphemes);
  const auto hi = static_cast<std::size_t>(config.max_graphemes);
  std::erase_if(segments, [&](const std::string& s) {
    const std::size_t n = unicode::grapheme_count(s);
    return n < lo || n > hi;
  });
  return segments;
}

std::string normalize(std::string_view text) { return unicode::nfc(text); }

ValidationResult validate(std::string_view text, const ScriptPolicy& policy) {
  std::string normalized = unicode::nfc(text);
  ValidationResult result;
  for (char32_t c : unicode::decode(normalized)) {
    if (!policy.allows(c)) {
      result.offending = c;
      return result;
    }
  }
  // No mark stripping happens here: the label is exactly NFC(text).
  Segment seg;
  seg.grapheme_len = unicode::grapheme_count(normalized);
  seg.text = std::move(normalized);
  result.segment = std::move(seg);
  return result;
}

PreparedSegments prepare(const Corpus& corpus, const SegmentationConfig& config,
                         const ScriptPolicy& policy) {
  config.validate();
  PreparedSegments out;
  std::vector<std::string> raw = segment(corpus, config);
  out.raw_count = raw.size();
  std::vector<std::string> kept = filter_by_length(std::move(raw), config);
  out.length_filtered = out.raw_count - kept.size();
  const auto lo = static_cast<std::size_t>(config.min_graphemes);
  const auto hi = static_cast<std::size_t>(config.max_graphemes);
  for (const std::string& s : kept) {
    ValidationResult r = validate(s, policy);
    if (!r.accepted()) {
      ++out.script_rejected;
      continue;
    }
    if (r.segment->grapheme_len < lo || r.segment->grapheme_len > hi) {
      ++out.length_filtered;
      continue;
    }
    out.segments.push_back(std::move(*r.segment));
  }
  if (out.segments.empty()) {
    throw Error(ErrorCode::kNoValidSegments,
                "no valid segments in corpus '" + corpus.source_name + "' (" +
                    std::to_string(out.raw_count) + " raw, " +
                    std::to_string(out.length_filtered) + " length-filtered, " +
                    std::to_string(out.script_rejected) + " script-rejected)");
  }
  return out;
}

}  // namespace textsynth
