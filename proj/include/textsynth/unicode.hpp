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
#include <string>
#include <string_view>
#include <vector>

// UTF-8 helpers backed by ICU. All strings crossing module boundaries are
// UTF-8 in std::string.

namespace textsynth::unicode {

/// Decodes UTF-8 into scalar values; throws ErrorCode::kEncoding on
/// malformed input, overlongs, or encoded surrogates.
std::u32string decode(std::string_view utf8);

std::string encode(std::u32string_view scalars);
std::string encode(char32_t scalar);

bool is_valid(std::string_view utf8);

/// Number of Unicode scalar values.
std::size_t scalar_count(std::string_view utf8);

/// NFC normalization.
std::string nfc(std::string_view utf8);
bool is_nfc(std::string_view utf8);

/// Extended grapheme clusters (UAX #29, untailored).
std::vector<std::string> graphemes(std::string_view utf8);
std::size_t grapheme_count(std::string_view utf8);

bool is_whitespace(char32_t c);
bool is_whitespace_only(std::string_view utf8);

/// Strips leading and trailing Unicode whitespace.
std::string trim(std::string_view utf8);

/// "U+0654" style formatting.
std::string format_code_point(char32_t c);

}  // namespace textsynth::unicode
