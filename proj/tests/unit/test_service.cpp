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

#include <chrono>
#include <filesystem>
#include <thread>

#include "doctest.h"
#include "httplib.h"
#include "json.hpp"
#include "oracles.hpp"
#include "textsynth/engine.hpp"
#include "textsynth/image_io.hpp"
#include "textsynth/packaging.hpp"
#include "textsynth/service.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace textsynth;

namespace {

std::string b64decode(const std::string& in) {
  static const std::string alphabet =
      "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";
  std::string out;
  unsigned buf = 0;
  int bits = 0;
  for (char c : in) {
    if (c == '=') break;
    const auto v = alphabet.find(c);
    REQUIRE(v != std::string::npos);
    buf = (buf << 6) | static_cast<unsigned>(v);
    bits += 6;
    if (bits >= 8) {
      bits -= 8;
      out.push_back(static_cast<char>((buf >> bits) & 0xFF));
    }
  }
  return out;
}

json small_config(std::uint64_t count) {
  return {{"corpus", {{"path", oracle::corpus_path()}}},
          {"fonts", json::array({{{"path", oracle::font_path("DejaVuSans.ttf")}}})},
          {"count", count},
          {"seed", 11}};
}

struct Fixture {
  Service service{ServiceOptions{"127.0.0.1", 0, {}}};
  int port = service.start();
  httplib::Client client{"127.0.0.1", port};
  Fixture() { client.set_read_timeout(120, 0); }
};

json wait_for(httplib::Client& client, const std::string& id) {
  for (int i = 0; i < 1200; ++i) {
    auto r = client.Get("/api/jobs/" + id);
    REQUIRE(r);
    json j = json::parse(r->body);
    if (j["state"] == "done" || j["state"] == "failed") return j;
    std::this_thread::sleep_for(std::chrono::milliseconds(50));
  }
  FAIL("job did not finish");
  return {};
}

}  // namespace

TEST_SUITE("service") {

TEST_CASE("preview matches the engine byte for byte") {
  Fixture f;
  const json body = {{"config", small_config(50)}, {"count", 4}};
  auto r = f.client.Post("/api/preview", body.dump(), "application/json");
  REQUIRE(r);
  REQUIRE(r->status == 200);
  const json list = json::parse(r->body);
  REQUIRE(list.size() == 4);
  const auto records = preview(GeneratorConfig::from_json(small_config(50)), 4);
  for (std::size_t i = 0; i < 4; ++i) {
    const std::string png = b64decode(list[i]["png_base64"]);
    CHECK(png == std::string(records[i].image_png.begin(), records[i].image_png.end()));
    CHECK(list[i]["label"] == records[i].label);
  }
}

TEST_CASE("validation errors carry field paths") {
  Fixture f;
  json cfg = small_config(10);
  cfg["fonts"] = json::array({{{"path", oracle::font_path("DejaVuSans.ttf")}, {"percentage", 60}},
                              {{"path", oracle::font_path("DejaVuSerif.ttf")}, {"percentage", 50}}});
  auto r = f.client.Post("/api/jobs", json{{"config", cfg}}.dump(), "application/json");
  REQUIRE(r);
  CHECK(r->status == 422);
  const json j = json::parse(r->body);
  bool found = false;
  for (const auto& issue : j["issues"]) found = found || issue["path"] == "fonts[].percentage";
  CHECK(found);

  auto bad = f.client.Post("/api/preview", "{not json", "application/json");
  REQUIRE(bad);
  CHECK(bad->status == 400);
  auto many = f.client.Post("/api/preview", json{{"config", small_config(10)}, {"count", 17}}.dump(),
                            "application/json");
  REQUIRE(many);
  CHECK(many->status == 422);
}

TEST_CASE("unknown jobs are 404") {
  Fixture f;
  auto r = f.client.Get("/api/jobs/nope");
  REQUIRE(r);
  CHECK(r->status == 404);
  auto a = f.client.Get("/api/jobs/nope/archive");
  REQUIRE(a);
  CHECK(a->status == 404);
}

TEST_CASE("job lifecycle and archive download") {
  Fixture f;
  auto r = f.client.Post("/api/jobs", json{{"config", small_config(3000)}}.dump(),
                         "application/json");
  REQUIRE(r);
  REQUIRE(r->status == 202);
  const std::string id = json::parse(r->body)["job_id"];

  auto second = f.client.Post("/api/jobs", json{{"config", small_config(5)}}.dump(),
                              "application/json");
  REQUIRE(second);
  CHECK(second->status == 409);
  auto early = f.client.Get("/api/jobs/" + id + "/archive");
  REQUIRE(early);
  CHECK(early->status == 409);

  const json done = wait_for(f.client, id);
  CHECK(done["state"] == "done");
  CHECK(done["produced"] == 3000);
  auto a = f.client.Get("/api/jobs/" + id + "/archive");
  REQUIRE(a);
  REQUIRE(a->status == 200);
  CHECK(a->get_header_value("Content-Disposition").find("dataset.zip") != std::string::npos);

  const fs::path local = fs::temp_directory_path() /
                         ("textsynth-svc-" + std::to_string(::getpid()) + ".zip");
  write_file(local, Bytes(a->body.begin(), a->body.end()));
  const VerifyReport report = verify(local);
  CHECK(report.ok());
  CHECK(report.images == 3000);
  fs::remove(local);
}

TEST_CASE("cancelled jobs fail and accept a new job") {
  Fixture f;
  auto r = f.client.Post("/api/jobs", json{{"config", small_config(50000)}}.dump(),
                         "application/json");
  REQUIRE(r);
  const std::string id = json::parse(r->body)["job_id"];
  auto d = f.client.Delete("/api/jobs/" + id);
  REQUIRE(d);
  CHECK(d->status == 202);
  const json j = wait_for(f.client, id);
  CHECK(j["state"] == "failed");
  auto next = f.client.Post("/api/jobs", json{{"config", small_config(5)}}.dump(),
                            "application/json");
  REQUIRE(next);
  CHECK(next->status == 202);
}

TEST_CASE("stop purges the work directory") {
  fs::path dir;
  {
    Service s{ServiceOptions{"127.0.0.1", 0, {}}};
    s.start();
    dir = s.work_dir();
    CHECK(fs::exists(dir));
    s.stop();
  }
  CHECK_FALSE(fs::exists(dir));
}

}
