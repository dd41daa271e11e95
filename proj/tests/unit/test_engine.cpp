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


#include <unistd.h>

#include <atomic>
#include <cmath>
#include <filesystem>
#include <map>

#include "doctest.h"
#include "oracles.hpp"
#include "textsynth/engine.hpp"
#include "textsynth/error.hpp"
#include "textsynth/hash.hpp"
#include "textsynth/image_io.hpp"
#include "textsynth/zip.hpp"

namespace fs = std::filesystem;
using namespace textsynth;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    static int counter = 0;
    path = fs::temp_directory_path() /
           ("textsynth-eng-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

GeneratorConfig base_config(std::uint64_t count = 60) {
  GeneratorConfig c;
  c.corpus_path = oracle::corpus_path();
  c.fonts = {{oracle::font_path("DejaVuSans.ttf"), {}}};
  c.count = count;
  c.seed = 42;
  return c;
}

// Fisher-Yates driven by the arbitrary-precision LCG oracle.
template <typename T>
std::vector<T> oracle_shuffle(std::vector<T> items, std::uint64_t seed) {
  const auto states = oracle::lcg_states(seed, items.size());
  std::size_t k = 0;
  for (std::size_t i = items.size(); i > 1; --i) {
    const double u = states[k++] / 2147483648.0;
    const auto j = static_cast<std::size_t>(std::floor(u * static_cast<double>(i)));
    std::swap(items[i - 1], items[j]);
  }
  return items;
}

}  // namespace

TEST_SUITE("engine") {

TEST_CASE("memory guard hysteresis") {
  MemoryGuard g(1000);
  CHECK_FALSE(g.update(0));
  CHECK(g.update(710));
  CHECK(g.update(600));
  CHECK(g.update(500));
  CHECK_FALSE(g.update(499));
  CHECK_FALSE(g.update(700));
  CHECK(g.update(701));
  CHECK(g.events() == 2);
}

TEST_CASE("slots cycle through the shuffled segments") {
  GeneratorConfig c = base_config(5);
  c.corpus_path.clear();
  c.corpus_text = "\xD8\xA7\xD9\x84\xD9\x81 \xD8\xA8\xDB\x92 \xD8\xAC\xDB\x8C\xD9\x85";
  const Generator g(c);
  REQUIRE(g.shuffled_segments().size() == 3);
  const auto prepared = prepare(Corpus::from_text(*c.corpus_text), c.segmentation, c.script);
  std::vector<std::string> texts;
  for (const Segment& s : prepared.segments) texts.push_back(s.text);
  const auto shuffled = oracle_shuffle(texts, c.seed);
  const auto records = g.preview(5);
  const std::size_t expect[] = {0, 1, 2, 0, 1};
  for (std::size_t i = 0; i < 5; ++i) CHECK(records[i].label == shuffled[expect[i]]);
}

TEST_CASE("slot-segment mapping matches an independent shuffle") {
  GeneratorConfig c = base_config(150);
  c.seed = 9001;
  const Generator g(c);
  const Corpus corpus = Corpus::load(c.corpus_path);
  std::vector<std::string> texts;
  for (const Segment& s : prepare(corpus, c.segmentation, c.script).segments) texts.push_back(s.text);
  const auto shuffled = oracle_shuffle(texts, c.seed);
  const std::size_t m = shuffled.size();
  for (std::uint64_t i = 0; i < c.count; ++i) {
    const SlotResult r = g.render_slot(i);
    if (r.segment_skips == 0) CHECK(r.record.label == shuffled[i % m]);
  }
}

TEST_CASE("preview is a prefix of the dataset") {
  TempDir t;
  GeneratorConfig c = base_config(30);
  c.output = (t.path / "d.zip").string();
  const Generator g(c);
  g.generate();
  const ZipReader zip = ZipReader::open(c.output);
  const auto records = g.preview(8);
  for (const SampleRecord& r : records) {
    CHECK(zip.read("images/" + filename_for(static_cast<std::int64_t>(r.index))) == r.image_png);
  }
  CHECK(g.preview(0).empty());
  CHECK_THROWS_AS(g.preview(kMaxPreviewCount + 1), ConfigError);
}

TEST_CASE("runs are deterministic across repeats, workers and memory budgets") {
  TempDir t;
  // hashes[budget][run]
  std::map<std::size_t, std::vector<std::string>> hashes;
  std::vector<std::map<std::string, Bytes>> members;
  int variant = 0;
  for (int workers : {1, 3}) {
    for (std::size_t budget : {kDefaultMemoryBudget, std::size_t{4096}}) {
      GeneratorConfig c = base_config(120);
      c.workers = workers;
      c.memory_budget = budget;
      c.output = (t.path / ("d" + std::to_string(variant++) + ".zip")).string();
      const DatasetManifest m = Generator(c).generate();
      hashes[budget].push_back(sha256_hex(read_file(c.output)));
      if (budget == 4096) CHECK(m.statistic("throttle_events") >= 1);
      else CHECK(m.statistic("throttle_events") == 0);
      const ZipReader zip = ZipReader::open(c.output);
      std::map<std::string, Bytes> files;
      for (const ZipEntry& e : zip.entries()) {
        if (e.name != kManifestName) files[e.name] = zip.read(e);
      }
      members.push_back(std::move(files));
    }
  }
  for (const auto& [budget, list] : hashes) CHECK(list[0] == list[1]);
  // The budget is echoed in the manifest; everything else is unaffected.
  CHECK(members[0].size() == 122);
  for (const auto& m : members) CHECK(m == members[0]);
}

TEST_CASE("manifest bookkeeping") {
  TempDir t;
  GeneratorConfig c = base_config(200);
  c.fonts = {{oracle::font_path("DejaVuSans.ttf"), 50.0},
             {oracle::font_path("DejaVuSans-Bold.ttf"), 50.0}};
  c.output = (t.path / "d.zip").string();
  const DatasetManifest m = Generator(c).generate();
  CHECK(m.total == 200);
  CHECK(m.train == 180);
  CHECK(m.clean + m.augmented == 200);
  CHECK(m.master_seed == 42);
  std::uint64_t fonts = 0;
  for (const auto& [name, n] : m.font_counts) fonts += n;
  CHECK(fonts == 200);
  std::uint64_t bgs = 0;
  for (const auto& [name, n] : m.background_counts) bgs += n;
  CHECK(bgs == 200);
  CHECK(m.config == Generator(c).config().to_json(false));
  CHECK_FALSE(m.timestamp.has_value());
}

TEST_CASE("unfit segments are skipped deterministically") {
  TempDir t;
  GeneratorConfig c = base_config(20);
  c.corpus_path.clear();
  c.corpus_text = "WWWWWWWWWWWWWWWWWWWWWWWWWWWWWWWWWWWWWWWWWWWW ab cd";
  c.script.allowed = {{0x20, 0x7F}};
  c.script.preserved_diacritics.clear();
  c.direction = TextDirection::kLtr;
  c.width = 64;
  c.output = (t.path / "d.zip").string();
  const Generator g(c);
  const DatasetManifest m = g.generate();
  CHECK(m.total == 20);
  CHECK(m.statistic("segment_skips") > 0);
  for (const SampleRecord& r : g.preview(20)) CHECK(r.label != std::string(44, 'W'));

  c.corpus_text = "WWWWWWWWWWWWWWWWWWWWWWWWWWWWWWWWWWWWWWWWWWWW";
  c.output = (t.path / "e.zip").string();
  try {
    Generator(c).generate();
    FAIL("expected an unfit-text error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kUnfitText);
  }
  CHECK_FALSE(fs::exists(c.output));
  CHECK_FALSE(fs::exists(c.output + ".partial"));
}

TEST_CASE("cancellation cleans up") {
  TempDir t;
  std::atomic<bool> cancel{true};
  GeneratorConfig z = base_config(50);
  z.output = (t.path / "d.zip").string();
  CHECK_THROWS_AS(Generator(z).generate({}, &cancel), Error);
  CHECK_FALSE(fs::exists(z.output));
  CHECK_FALSE(fs::exists(z.output + ".partial"));

  GeneratorConfig ch = base_config(50);
  ch.storage = StorageMode::kChunked;
  ch.output = (t.path / "chunks").string();
  CHECK_THROWS_AS(Generator(ch).generate({}, &cancel), Error);
  CHECK_FALSE(fs::exists(ch.output));

  GeneratorConfig f = base_config(50);
  f.storage = StorageMode::kFiles;
  f.output = (t.path / "files").string();
  CHECK_THROWS_AS(Generator(f).generate({}, &cancel), Error);
  CHECK(fs::exists(fs::path(f.output) / "FAILED"));
}

TEST_CASE("progress events are monotone and end at the total") {
  TempDir t;
  GeneratorConfig c = base_config(250);
  c.output = (t.path / "d.zip").string();
  std::vector<ProgressEvent> events;
  Generator(c).generate([&](const ProgressEvent& e) { events.push_back(e); });
  REQUIRE_FALSE(events.empty());
  for (std::size_t i = 1; i < events.size(); ++i) CHECK(events[i].produced > events[i - 1].produced);
  CHECK(events.back().produced == 250);
  CHECK(events.back().produced == events.back().total - events.back().skips);
}

TEST_CASE("loading errors surface before any output") {
  TempDir t;
  GeneratorConfig c = base_config(5);
  c.fonts = {{(t.path / "missing.ttf").string(), {}}};
  c.output = (t.path / "d.zip").string();
  CHECK_THROWS_AS(Generator{c}, Error);
  GeneratorConfig d = base_config(5);
  d.corpus_path.clear();
  d.corpus_text = "\xE0\xA4\x95\xE0\xA4\x96";  // only Devanagari
  CHECK_THROWS_AS(Generator{d}, Error);
}

}
