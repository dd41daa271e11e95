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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "oracles.hpp"
#include "textsynth/cli.hpp"
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
           ("textsynth-cli-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "textsynth");
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<std::string> base_args(const std::string& output, const std::string& count = "40") {
  return {"generate", "--corpus", oracle::corpus_path(), "--font",
          oracle::font_path("DejaVuSans.ttf"), "--count", count, "--seed", "7",
          "--output", output};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("help and version exit zero") {
  CHECK(cli({"--help"}).code == kExitOk);
  const Run v = cli({"--version"});
  CHECK(v.code == kExitOk);
  CHECK(v.out.find('.') != std::string::npos);
}

TEST_CASE("usage errors exit two") {
  CHECK(cli({}).code == kExitUsage);
  CHECK(cli({"generate", "--no-such-flag"}).code == kExitUsage);
  CHECK(cli({"verify"}).code == kExitUsage);
  TempDir t;
  auto args = base_args((t.path / "d.zip").string());
  args.insert(args.end(), {"--enable", "jpeg", "--disable", "jpeg"});
  const Run r = cli(args);
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("--enable jpeg conflicts with --disable jpeg") != std::string::npos);
}

TEST_CASE("percentage sum is reported with its field path") {
  TempDir t;
  const Run r = cli({"generate", "--corpus", oracle::corpus_path(), "--font",
                     oracle::font_path("DejaVuSans.ttf") + ":60", "--font",
                     oracle::font_path("DejaVuSerif.ttf") + ":50", "--output",
                     (t.path / "d.zip").string()});
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("fonts[].percentage: percentages sum to 110, expected 100") !=
        std::string::npos);
  CHECK_FALSE(fs::exists(t.path / "d.zip"));
}

TEST_CASE("runtime errors exit one") {
  TempDir t;
  auto args = base_args((t.path / "d.zip").string());
  args[2] = (t.path / "missing.txt").string();
  CHECK(cli(args).code == kExitRuntime);
  CHECK(cli({"verify", (t.path / "nothing.zip").string()}).code == kExitRuntime);
}

TEST_CASE("generate then verify") {
  TempDir t;
  const std::string out = (t.path / "d.zip").string();
  auto args = base_args(out);
  args.push_back("--json");
  const Run g = cli(args);
  REQUIRE(g.code == kExitOk);
  const auto summary = nlohmann::json::parse(g.out);
  CHECK(summary["total"] == 40);
  CHECK(summary["train"] == 36);
  const Run v = cli({"verify", out, "--json"});
  CHECK(v.code == kExitOk);
  CHECK(nlohmann::json::parse(v.out)["ok"] == true);
}

TEST_CASE("manifest config echo reproduces the archive") {
  TempDir t;
  const std::string first = (t.path / "a.zip").string();
  auto args = base_args(first);
  args.insert(args.end(), {"--mode", "ngram", "--format", "csv", "--aug-prob", "0.9"});
  REQUIRE(cli(args).code == kExitOk);
  const ZipReader zip = ZipReader::open(first);
  const Bytes manifest_bytes = zip.read(kManifestName);
  const auto manifest = nlohmann::json::parse(manifest_bytes.begin(), manifest_bytes.end());
  const fs::path cfg = t.path / "echo.json";
  std::ofstream(cfg) << manifest["config"].dump();
  const std::string second = (t.path / "b.zip").string();
  REQUIRE(cli({"generate", "--config", cfg.string(), "--output", second}).code == kExitOk);
  CHECK(sha256_hex(read_file(first)) == sha256_hex(read_file(second)));
}

TEST_CASE("flags override the config file") {
  TempDir t;
  const fs::path cfg = t.path / "c.json";
  std::ofstream(cfg) << R"({"count": 12, "seed": 3})";
  const std::string out = (t.path / "d.zip").string();
  auto args = base_args(out, "9");
  args.insert(args.begin() + 1, {"--config", cfg.string()});
  args.push_back("--json");
  const Run r = cli(args);
  REQUIRE(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["total"] == 9);
  CHECK(j["seed"] == 7);
}

TEST_CASE("preview writes images and labels") {
  TempDir t;
  const fs::path dir = t.path / "p";
  const Run r = cli({"preview", "--corpus", oracle::corpus_path(), "--font",
                     oracle::font_path("DejaVuSans.ttf"), "--samples", "3", "--output",
                     dir.string()});
  REQUIRE(r.code == kExitOk);
  for (int i = 0; i < 3; ++i) CHECK(fs::exists(dir / filename_for(i)));
  CHECK_FALSE(fs::exists(dir / filename_for(3)));
  CHECK(fs::exists(dir / "labels_preview.txt"));
  CHECK(cli({"preview", "--corpus", oracle::corpus_path(), "--font",
             oracle::font_path("DejaVuSans.ttf"), "--samples", "65", "--output",
             (t.path / "q").string()})
            .code == kExitUsage);
}

}
