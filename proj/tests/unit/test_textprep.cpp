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


#include <unicode/uchar.h>

#include "doctest.h"
#include "oracles.hpp"
#include "textsynth/error.hpp"
#include "textsynth/prng.hpp"
#include "textsynth/textprep.hpp"

using namespace textsynth;

namespace {

std::vector<std::string> split(const std::string& text, SegmentationMode mode) {
  SegmentationConfig c;
  c.mode = mode;
  return segment(Corpus::from_text(text), c);
}

// Random corpus over Arabic and Latin letters, marks, whitespace and every
// delimiter family.
std::string random_corpus(Lcg& rng) {
  static const std::u32string alphabet =
      U"abcXYZ019ابتسلمنیۂِ"
      U"      \t\n\r ،؛.!?؟۔:;,";
  std::u32string out;
  const auto n = rng.int_range(0, 200);
  for (std::int64_t i = 0; i < n; ++i) {
    out.push_back(alphabet[static_cast<std::size_t>(rng.int_range(0, alphabet.size() - 1))]);
  }
  return oracle::encode(out);
}

}  // namespace

TEST_SUITE("textprep") {

TEST_CASE("word mode splits on the Arabic comma") {
  CHECK(split("alpha beta\xD8\x8Cgamma", SegmentationMode::kWord) ==
        std::vector<std::string>{"alpha", "beta", "gamma"});
}

TEST_CASE("ngram windows ascend by width then position") {
  CHECK(split("w1 w2 w3", SegmentationMode::kNgram) ==
        std::vector<std::string>{"w1 w2", "w2 w3", "w1 w2 w3"});
}

TEST_CASE("ngram output drops repeats keeping the first") {
  CHECK(split("a b a b", SegmentationMode::kNgram) ==
        std::vector<std::string>{"a b", "b a", "a b a", "b a b", "a b a b"});
}

TEST_CASE("char mode keeps combining marks with their base") {
  const std::string hamza_above = "\xD9\x88\xD9\x94";  // U+0648 U+0654
  const auto segs = split(hamza_above + " x", SegmentationMode::kChar);
  REQUIRE(segs.size() == 2);
  CHECK(segs[0] == hamza_above);
  CHECK(segs[1] == "x");
}

TEST_CASE("sentence and line modes") {
  CHECK(split(" One. Two?Three\nfour", SegmentationMode::kSentence) ==
        std::vector<std::string>{"One", "Two", "Three four"});
  CHECK(split("a\r\nb\rc\n\n d ", SegmentationMode::kLine) ==
        std::vector<std::string>{"a", "b", "c", "d"});
}

TEST_CASE("empty corpus") {
  CHECK_THROWS_AS(split("", SegmentationMode::kWord), Error);
}

TEST_CASE("byte-order mark is consumed and bad UTF-8 rejected") {
  CHECK(Corpus::from_text("\xEF\xBB\xBFok").text == "ok");
  CHECK(Corpus::from_text("\xEF\xBB\xBFok").char_count == 2);
  try {
    Corpus::from_text("bad\xC3");
    FAIL("expected an encoding error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kEncoding);
  }
}

TEST_CASE("length filter") {
  SegmentationConfig c;
  CHECK(filter_by_length({"a", "abc"}, c).size() == 2);
  CHECK(filter_by_length({std::string(51, 'x')}, c).empty());
  c.min_graphemes = 2;
  CHECK(filter_by_length({"a", "b", "cd"}, c) == std::vector<std::string>{"cd"});
  c.mode = SegmentationMode::kChar;
  CHECK_THROWS_AS(prepare(Corpus::from_text("abc"), c, ScriptPolicy::kashmiri()), Error);
}

TEST_CASE("NFC normalization") {
  CHECK(normalize("e\xCC\x81") == "\xC3\xA9");
  const std::string arabic = "\xD8\xB3\xD9\x84\xD8\xA7\xD9\x85";
  CHECK(normalize(arabic) == arabic);
  Lcg rng(1);
  for (int i = 0; i < 200; ++i) {
    const std::string s = random_corpus(rng);
    CHECK(normalize(normalize(s)) == normalize(s));
  }
}

TEST_CASE("script validation") {
  const ScriptPolicy p = ScriptPolicy::kashmiri();
  CHECK(validate("\xD8\xB3\xD9\x84\xD8\xA7\xD9\x85", p).accepted());
  const ValidationResult r = validate("ab\xE0\xA4\x80", p);  // U+0900
  CHECK_FALSE(r.accepted());
  CHECK(r.offending == 0x0900);
  const std::string with_mark = "\xD8\xA8\xD9\x94";  // U+0628 U+0654
  const ValidationResult m = validate(with_mark, p);
  REQUIRE(m.accepted());
  CHECK(m.segment->text == with_mark);
  CHECK(m.segment->grapheme_len == 1);
  // U+0648 U+0654 has a canonical composite; the label is its NFC form.
  CHECK(validate("\xD9\x88\xD9\x94", p).segment->text == "\xD8\xA4");
}

TEST_CASE("preserved diacritics survive normalization") {
  const ScriptPolicy p = ScriptPolicy::kashmiri();
  for (char32_t mark = 0x0654; mark <= 0x0657; ++mark) {
    const std::string s = oracle::encode(std::u32string{0x0628, mark});
    const ValidationResult r = validate(s, p);
    REQUIRE(r.accepted());
    CHECK(oracle::decode(r.segment->text).find(mark) != std::u32string::npos);
  }
}

TEST_CASE("prepare counts rejections") {
  SegmentationConfig c;
  const PreparedSegments ps =
      prepare(Corpus::from_text("\xD8\xA7\xD8\xA8 \xD8\xAA \xE0\xA4\x95"), c, ScriptPolicy::kashmiri());
  CHECK(ps.segments.size() == 2);
  CHECK(ps.script_rejected == 1);
  CHECK(ps.raw_count == 3);
}

TEST_CASE("code point ranges") {
  const CodePointRange r = parse_code_point_range("0600-06FF");
  CHECK(r.lo == 0x0600);
  CHECK(r.hi == 0x06FF);
  CHECK_THROWS(parse_code_point_range("06FF-0600"));
  CHECK_THROWS(parse_code_point_range("zz"));
  ScriptPolicy p;
  p.allowed = {{0x10, 0x20}, {0x21, 0x30}, {0x05, 0x12}};
  p.canonicalize();
  REQUIRE(p.allowed.size() == 1);
  CHECK(p.allowed[0].lo == 0x05);
  CHECK(p.allowed[0].hi == 0x30);
}

TEST_CASE("segmenters agree with the reference splitter on random corpora") {
  Lcg rng(2024);
  for (int i = 0; i < 100; ++i) {
    const std::string text = random_corpus(rng);
    if (text.empty()) continue;
    INFO("corpus #" << i);
    CHECK(split(text, SegmentationMode::kWord) == oracle::words(text));
    CHECK(split(text, SegmentationMode::kSentence) == oracle::sentences(text));
    CHECK(split(text, SegmentationMode::kLine) == oracle::lines(text));
  }
}

TEST_CASE("char mode keeps every non-whitespace scalar in order") {
  auto drop_space = [](const std::string& s) {
    std::string out;
    for (char32_t c : oracle::decode(s)) {
      if (!u_isUWhiteSpace(static_cast<UChar32>(c))) out += oracle::encode(std::u32string(1, c));
    }
    return out;
  };
  Lcg rng(5);
  for (int i = 0; i < 50; ++i) {
    const std::string text = random_corpus(rng);
    if (drop_space(text).empty()) continue;
    std::string joined;
    for (const std::string& s : split(text, SegmentationMode::kChar)) {
      CHECK_FALSE(drop_space(s).empty());
      joined += s;
    }
    CHECK(drop_space(joined) == drop_space(text));
  }
}

}
