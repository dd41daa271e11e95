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


// Reference implementations used as test oracles. Each one is written
// from the definitions directly and shares no code with the library.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace oracle {

inline std::filesystem::path data_dir() { return TEXTSYNTH_TEST_DATA; }
inline std::string font_path(const char* name) {
  return (data_dir() / "fonts" / name).string();
}
inline std::string corpus_path() { return (data_dir() / "kashmiri_sample.txt").string(); }

/// X_{n+1} = (a X_n + c) mod 2^31 in arbitrary precision.
inline std::vector<std::uint32_t> lcg_states(std::uint64_t seed, std::size_t n) {
  using boost::multiprecision::cpp_int;
  const cpp_int a = 1103515245;
  const cpp_int c = 12345;
  const cpp_int m = cpp_int(1) << 31;
  cpp_int x = cpp_int(seed) % m;
  std::vector<std::uint32_t> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    x = (a * x + c) % m;
    out.push_back(x.convert_to<std::uint32_t>());
  }
  return out;
}

/// The state whose successor is `target`: (target - c) * a^-1 mod 2^31.
inline std::uint32_t predecessor(std::uint32_t target) {
  using boost::multiprecision::cpp_int;
  const cpp_int m = cpp_int(1) << 31;
  cpp_int inv = 1;
  for (int i = 0; i < 6; ++i) inv = (inv * (2 - cpp_int(1103515245) * inv)) % m;
  cpp_int x = ((cpp_int(target) - 12345) % m + m) % m;
  x = ((x * inv) % m + m) % m;
  return x.convert_to<std::uint32_t>();
}

/// State whose next uniform equals u (rounded down to a multiple of 2^-31).
inline std::uint32_t state_before_uniform(double u) {
  return predecessor(static_cast<std::uint32_t>(u * 2147483648.0));
}

inline std::u32string decode(std::string_view s) {
  std::u32string out;
  for (std::size_t i = 0; i < s.size();) {
    const auto b = static_cast<unsigned char>(s[i]);
    int len = b < 0x80 ? 1 : b < 0xE0 ? 2 : b < 0xF0 ? 3 : 4;
    char32_t c = len == 1 ? b : len == 2 ? (b & 0x1F) : len == 3 ? (b & 0x0F) : (b & 0x07);
    for (int k = 1; k < len; ++k) c = (c << 6) | (static_cast<unsigned char>(s[i + k]) & 0x3F);
    out.push_back(c);
    i += static_cast<std::size_t>(len);
  }
  return out;
}

inline std::string encode(std::u32string_view s) {
  std::string out;
  for (char32_t c : s) {
    if (c < 0x80) {
      out += static_cast<char>(c);
    } else if (c < 0x800) {
      out += static_cast<char>(0xC0 | (c >> 6));
      out += static_cast<char>(0x80 | (c & 0x3F));
    } else if (c < 0x10000) {
      out += static_cast<char>(0xE0 | (c >> 12));
      out += static_cast<char>(0x80 | ((c >> 6) & 0x3F));
      out += static_cast<char>(0x80 | (c & 0x3F));
    } else {
      out += static_cast<char>(0xF0 | (c >> 18));
      out += static_cast<char>(0x80 | ((c >> 12) & 0x3F));
      out += static_cast<char>(0x80 | ((c >> 6) & 0x3F));
      out += static_cast<char>(0x80 | (c & 0x3F));
    }
  }
  return out;
}

// Whitespace that the random corpora below may contain.
inline bool is_space(char32_t c) {
  return c == U' ' || c == U'\t' || c == U'\n' || c == U'\r' || c == 0x00A0 || c == 0x2003;
}

inline std::u32string strip(std::u32string s) {
  while (!s.empty() && is_space(s.front())) s.erase(s.begin());
  while (!s.empty() && is_space(s.back())) s.pop_back();
  return s;
}

inline std::vector<std::u32string> split_on(const std::u32string& text,
                                            const std::u32string& delimiters) {
  std::vector<std::u32string> parts(1);
  for (char32_t c : text) {
    if (delimiters.find(c) != std::u32string::npos) {
      parts.emplace_back();
    } else {
      parts.back().push_back(c);
    }
  }
  return parts;
}

inline std::vector<std::string> words(std::string_view corpus) {
  const std::u32string delims = U" \t\n\r،؛.!?؟۔:;,";
  std::vector<std::string> out;
  for (const std::u32string& p : split_on(decode(corpus), delims)) {
    if (!strip(p).empty()) out.push_back(encode(p));
  }
  return out;
}

inline std::vector<std::string> sentences(std::string_view corpus) {
  std::u32string text = decode(corpus);
  std::u32string flat;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == U'\r' && i + 1 < text.size() && text[i + 1] == U'\n') continue;
    flat.push_back(text[i] == U'\r' || text[i] == U'\n' ? U' ' : text[i]);
  }
  std::vector<std::string> out;
  for (const std::u32string& p : split_on(flat, U".?!؟۔")) {
    const std::u32string s = strip(p);
    if (!s.empty()) out.push_back(encode(s));
  }
  return out;
}

inline std::vector<std::string> lines(std::string_view corpus) {
  std::u32string text = decode(corpus);
  std::u32string unified;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == U'\r') {
      unified.push_back(U'\n');
      if (i + 1 < text.size() && text[i + 1] == U'\n') ++i;
    } else {
      unified.push_back(text[i]);
    }
  }
  std::vector<std::string> out;
  for (const std::u32string& p : split_on(unified, U"\n")) {
    const std::u32string s = strip(p);
    if (!s.empty()) out.push_back(encode(s));
  }
  return out;
}

/// Normalized Gaussian kernel value at offset 0 for radius ceil(3 sigma).
inline double gaussian_center_weight(double sigma) {
  const int r = static_cast<int>(std::ceil(3.0 * sigma));
  double sum = 0.0;
  for (int i = -r; i <= r; ++i) sum += std::exp(-(i * i) / (2.0 * sigma * sigma));
  return 1.0 / sum;
}

}  // namespace oracle
