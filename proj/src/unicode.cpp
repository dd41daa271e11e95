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

#include "textsynth/unicode.hpp"

#include <unicode/brkiter.h>
#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utext.h>
#include <unicode/utf8.h>

#include <cstdio>
#include <memory>

#include "textsynth/error.hpp"

namespace textsynth::unicode {
namespace {

const icu::Normalizer2& nfc_instance() {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* norm = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status) || norm == nullptr) {
    throw Error(ErrorCode::kEncoding,
                std::string("ICU NFC unavailable: ") + u_errorName(status));
  }
  return *norm;
}

icu::BreakIterator& grapheme_iterator() {
  // BreakIterator instances are not thread-safe; one per thread.
  thread_local std::unique_ptr<icu::BreakIterator> iter = [] {
    UErrorCode status = U_ZERO_ERROR;
    std::unique_ptr<icu::BreakIterator> it(
        icu::BreakIterator::createCharacterInstance(icu::Locale::getRoot(),
                                                    status));
    if (U_FAILURE(status)) {
      throw Error(ErrorCode::kEncoding, std::string("ICU break iterator: ") +
                                            u_errorName(status));
    }
    return it;
  }();
  return *iter;
}

template <typename Fn>
void for_each_boundary(std::string_view utf8, Fn&& fn) {
  if (utf8.empty()) return;
  UErrorCode status = U_ZERO_ERROR;
  UText text = UTEXT_INITIALIZER;
  utext_openUTF8(&text, utf8.data(), static_cast<int64_t>(utf8.size()),
                 &status);
  icu::BreakIterator& iter = grapheme_iterator();
  iter.setText(&text, status);
  if (U_FAILURE(status)) {
    utext_close(&text);
    throw Error(ErrorCode::kEncoding,
                std::string("grapheme segmentation: ") + u_errorName(status));
  }
  std::int32_t start = iter.first();
  for (std::int32_t end = iter.next(); end != icu::BreakIterator::DONE;
       start = end, end = iter.next()) {
    fn(static_cast<std::size_t>(start), static_cast<std::size_t>(end));
  }
  // Detach before the UText goes out of scope.
  iter.setText(icu::UnicodeString());
  utext_close(&text);
}

}  // namespace

std::u32string decode(std::string_view utf8) {
  std::u32string out;
  out.reserve(utf8.size());
  const auto* s = reinterpret_cast<const std::uint8_t*>(utf8.data());
  const auto length = static_cast<std::int32_t>(utf8.size());
  std::int32_t i = 0;
  while (i < length) {
    const std::int32_t at = i;
    UChar32 c;
    U8_NEXT(s, i, length, c);
    if (c < 0) {
      throw Error(ErrorCode::kEncoding,
                  "malformed UTF-8 at byte offset " + std::to_string(at));
    }
    out.push_back(static_cast<char32_t>(c));
  }
  return out;
}

std::string encode(char32_t scalar) {
  std::string out;
  std::uint8_t buf[4];
  std::int32_t n = 0;
  UBool error = false;
  U8_APPEND(buf, n, 4, static_cast<UChar32>(scalar), error);
  if (error || (scalar >= 0xD800 && scalar <= 0xDFFF)) {
    throw Error(ErrorCode::kEncoding,
                "not a Unicode scalar value: " + format_code_point(scalar));
  }
  out.append(reinterpret_cast<const char*>(buf), static_cast<std::size_t>(n));
  return out;
}

std::string encode(std::u32string_view scalars) {
  std::string out;
  out.reserve(scalars.size() * 2);
  for (char32_t c : scalars) out += encode(c);
  return out;
}

bool is_valid(std::string_view utf8) {
  const auto* s = reinterpret_cast<const std::uint8_t*>(utf8.data());
  const auto length = static_cast<std::int32_t>(utf8.size());
  std::int32_t i = 0;
  while (i < length) {
    UChar32 c;
    U8_NEXT(s, i, length, c);
    if (c < 0) return false;
  }
  return true;
}

std::size_t scalar_count(std::string_view utf8) {
  return decode(utf8).size();
}

std::string nfc(std::string_view utf8) {
  if (!is_valid(utf8)) {
    throw Error(ErrorCode::kEncoding, "malformed UTF-8 passed to NFC");
  }
  UErrorCode status = U_ZERO_ERROR;
  const icu::UnicodeString source = icu::UnicodeString::fromUTF8(
      icu::StringPiece(utf8.data(), static_cast<std::int32_t>(utf8.size())));
  const icu::Normalizer2& norm = nfc_instance();
  if (norm.isNormalized(source, status) && U_SUCCESS(status)) {
    return std::string(utf8);
  }
  status = U_ZERO_ERROR;
  icu::UnicodeString normalized = norm.normalize(source, status);
  if (U_FAILURE(status)) {
    throw Error(ErrorCode::kEncoding,
                std::string("NFC normalization: ") + u_errorName(status));
  }
  std::string out;
  normalized.toUTF8String(out);
  return out;
}

bool is_nfc(std::string_view utf8) {
  if (!is_valid(utf8)) return false;
  UErrorCode status = U_ZERO_ERROR;
  const icu::UnicodeString source = icu::UnicodeString::fromUTF8(
      icu::StringPiece(utf8.data(), static_cast<std::int32_t>(utf8.size())));
  const bool normalized = nfc_instance().isNormalized(source, status);
  return U_SUCCESS(status) && normalized;
}

std::vector<std::string> graphemes(std::string_view utf8) {
  if (!is_valid(utf8)) {
    throw Error(ErrorCode::kEncoding, "malformed UTF-8 passed to segmenter");
  }
  std::vector<std::string> out;
  for_each_boundary(utf8, [&](std::size_t start, std::size_t end) {
    out.emplace_back(utf8.substr(start, end - start));
  });
  return out;
}

std::size_t grapheme_count(std::string_view utf8) {
  if (!is_valid(utf8)) {
    throw Error(ErrorCode::kEncoding, "malformed UTF-8 passed to segmenter");
  }
  std::size_t count = 0;
  for_each_boundary(utf8, [&](std::size_t, std::size_t) { ++count; });
  return count;
}

bool is_whitespace(char32_t c) {
  return u_isUWhiteSpace(static_cast<UChar32>(c));
}

bool is_whitespace_only(std::string_view utf8) {
  for (char32_t c : decode(utf8)) {
    if (!is_whitespace(c)) return false;
  }
  return true;
}

std::string trim(std::string_view utf8) {
  const std::u32string scalars = decode(utf8);
  std::size_t begin = 0;
  std::size_t end = scalars.size();
  while (begin < end && is_whitespace(scalars[begin])) ++begin;
  while (end > begin && is_whitespace(scalars[end - 1])) --end;
  return encode(std::u32string_view(scalars).substr(begin, end - begin));
}

std::string format_code_point(char32_t c) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "U+%04X", static_cast<unsigned>(c));
  return buf;
}

}  // namespace textsynth::unicode
