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


#include "textsynth/service.hpp"

#include <openssl/evp.h>
#include <unistd.h>

#include <atomic>
#include <map>
#include <mutex>
#include <random>
#include <thread>

#include "httplib.h"
#include "json.hpp"
#include "textsynth/engine.hpp"
#include "textsynth/error.hpp"
#include "textsynth/image_io.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

namespace textsynth {
namespace {

constexpr const char* kJson = "application/json";
constexpr const char* kUploadScheme = "upload:";

std::string base64(const Bytes& data) {
  std::string out(4 * ((data.size() + 2) / 3), '\0');
  const int n = EVP_EncodeBlock(reinterpret_cast<unsigned char*>(out.data()),
                                data.data(), static_cast<int>(data.size()));
  out.resize(static_cast<std::size_t>(n));
  return out;
}

void send_json(httplib::Response& res, int status, const ordered_json& body) {
  res.status = status;
  res.set_content(body.dump(), kJson);
}

void send_error(httplib::Response& res, int status, const std::string& message) {
  send_json(res, status, {{"error", message}});
}

void send_issues(httplib::Response& res, const std::vector<FieldIssue>& issues) {
  ordered_json list = ordered_json::array();
  for (const FieldIssue& i : issues) list.push_back({{"path", i.path}, {"message", i.message}});
  send_json(res, 422, {{"error", "invalid configuration"}, {"issues", std::move(list)}});
}

struct UploadedFont {
  std::string id;
  std::string family_name;
  fs::path path;
};

enum class JobState { kQueued, kRunning, kDone, kFailed };

const char* to_string(JobState s) {
  switch (s) {
    case JobState::kQueued: return "queued";
    case JobState::kRunning: return "running";
    case JobState::kDone: return "done";
    case JobState::kFailed: return "failed";
  }
  return "failed";
}

struct Job {
  std::string id;
  GeneratorConfig config;
  JobState state = JobState::kQueued;
  std::uint64_t produced = 0;
  std::uint64_t total = 0;
  std::uint64_t skips = 0;
  std::uint64_t segment_skips = 0;
  std::string error;
  fs::path archive;
  std::atomic<bool> cancel{false};
  std::thread worker;
};

std::string random_token() {
  std::random_device rd;
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%08x%08x", rd(), rd());
  return buf;
}

}  // namespace

struct Service::Impl {
  ServiceOptions options;
  bool owns_work_dir = false;
  httplib::Server server;
  std::thread server_thread;
  int bound_port = 0;

  std::mutex mu;
  std::map<std::string, UploadedFont> fonts;
  std::map<std::string, std::shared_ptr<Job>> jobs;
  std::shared_ptr<Job> active;
  std::uint64_t next_font = 1;
  std::uint64_t next_job = 1;

  explicit Impl(ServiceOptions o) : options(std::move(o)) {
    if (options.work_dir.empty()) {
      options.work_dir = fs::temp_directory_path() /
                         ("textsynth-service-" + std::to_string(::getpid()) + "-" + random_token());
      owns_work_dir = true;
    }
    fs::create_directories(options.work_dir / "fonts");
    fs::create_directories(options.work_dir / "jobs");
    routes();
  }

  // Parses the request body and the embedded configuration, resolving
  // uploaded font references. Writes the error response and returns
  // nullopt on failure.
  std::optional<std::pair<json, GeneratorConfig>> read_request(const httplib::Request& req,
                                                               httplib::Response& res) {
    json body;
    try {
      body = json::parse(req.body);
    } catch (const json::parse_error& e) {
      send_error(res, 400, std::string("malformed JSON: ") + e.what());
      return std::nullopt;
    }
    if (!body.is_object()) {
      send_error(res, 400, "request body must be a JSON object");
      return std::nullopt;
    }
    const json cfg = body.contains("config") ? body["config"] : json::object();
    try {
      GeneratorConfig config = GeneratorConfig::from_json(cfg);
      std::vector<FieldIssue> issues;
      {
        std::lock_guard<std::mutex> lock(mu);
        for (FontSpec& f : config.fonts) {
          if (f.path.rfind(kUploadScheme, 0) != 0) continue;
          const std::string id = f.path.substr(std::string(kUploadScheme).size());
          auto it = fonts.find(id);
          if (it == fonts.end()) {
            issues.push_back({"fonts[].path", "unknown uploaded font '" + id + "'"});
          } else {
            f.path = it->second.path.string();
          }
        }
      }
      if (!issues.empty()) throw ConfigError(std::move(issues));
      config.validate();
      return std::make_pair(std::move(body), std::move(config));
    } catch (const ConfigError& e) {
      send_issues(res, e.issues());
    } catch (const Error& e) {
      send_issues(res, {{"", e.what()}});
    }
    return std::nullopt;
  }

  ordered_json job_json(const Job& job) {
    ordered_json j;
    j["job_id"] = job.id;
    j["state"] = to_string(job.state);
    j["produced"] = job.produced;
    j["total"] = job.total;
    j["skips"] = job.skips;
    j["segment_skips"] = job.segment_skips;
    if (job.state == JobState::kFailed) j["error"] = job.error;
    if (job.state == JobState::kDone) j["archive"] = "/api/jobs/" + job.id + "/archive";
    return j;
  }

  void routes() {
    server.Post("/api/fonts", [this](const httplib::Request& req, httplib::Response& res) {
      if (!req.has_file("file")) {
        send_error(res, 400, "expected a multipart field named 'file'");
        return;
      }
      const httplib::MultipartFormData file = req.get_file_value("file");
      Bytes data(file.content.begin(), file.content.end());
      std::shared_ptr<const FontFace> face;
      try {
        face = FontFace::from_bytes(data, file.filename);
      } catch (const Error& e) {
        send_issues(res, {{"file", e.what()}});
        return;
      }
      UploadedFont font;
      {
        std::lock_guard<std::mutex> lock(mu);
        font.id = "f" + std::to_string(next_font++);
      }
      font.family_name = face->family_name();
      font.path = options.work_dir / "fonts" / (font.id + ".font");
      write_file(font.path, data);
      {
        std::lock_guard<std::mutex> lock(mu);
        fonts[font.id] = font;
      }
      send_json(res, 200, {{"font_id", font.id}, {"family_name", font.family_name},
                           {"path", kUploadScheme + font.id}});
    });

    server.Get("/api/fonts", [this](const httplib::Request&, httplib::Response& res) {
      ordered_json list = ordered_json::array();
      std::lock_guard<std::mutex> lock(mu);
      for (const auto& [id, f] : fonts) {
        list.push_back({{"font_id", id}, {"family_name", f.family_name},
                        {"path", kUploadScheme + id}});
      }
      send_json(res, 200, list);
    });

    server.Post("/api/preview", [this](const httplib::Request& req, httplib::Response& res) {
      auto parsed = read_request(req, res);
      if (!parsed) return;
      const json& body = parsed->first;
      std::size_t count = 8;
      if (body.contains("count")) {
        if (!body["count"].is_number_unsigned()) {
          send_issues(res, {{"count", "must be a non-negative integer"}});
          return;
        }
        count = body["count"].get<std::size_t>();
      }
      if (count > kMaxServicePreview) {
        send_issues(res, {{"count", "at most " + std::to_string(kMaxServicePreview) +
                                        " preview samples"}});
        return;
      }
      try {
        Generator gen(parsed->second);
        ordered_json list = ordered_json::array();
        for (const SampleRecord& r : gen.preview(count)) {
          list.push_back({{"png_base64", base64(r.image_png)}, {"label", r.label},
                          {"font", r.font_used}, {"size", r.size_used},
                          {"recipe", r.recipe_summary}});
        }
        send_json(res, 200, list);
      } catch (const ConfigError& e) {
        send_issues(res, e.issues());
      } catch (const Error& e) {
        send_issues(res, {{"", e.what()}});
      }
    });

    server.Post("/api/jobs", [this](const httplib::Request& req, httplib::Response& res) {
      auto parsed = read_request(req, res);
      if (!parsed) return;
      GeneratorConfig config = std::move(parsed->second);
      std::unique_ptr<Generator> gen;
      try {
        gen = std::make_unique<Generator>(config);
      } catch (const ConfigError& e) {
        send_issues(res, e.issues());
        return;
      } catch (const Error& e) {
        send_issues(res, {{"", e.what()}});
        return;
      }
      std::lock_guard<std::mutex> lock(mu);
      if (active && (active->state == JobState::kQueued || active->state == JobState::kRunning)) {
        send_error(res, 409, "job " + active->id + " is still running");
        return;
      }
      if (active && active->worker.joinable()) active->worker.join();
      auto job = std::make_shared<Job>();
      job->id = "job-" + std::to_string(next_job++) + "-" + random_token().substr(0, 8);
      job->total = config.count;
      const fs::path dir = options.work_dir / "jobs" / job->id;
      fs::create_directories(dir);
      job->archive = dir / "dataset.zip";
      config.storage = StorageMode::kZip;
      config.output = job->archive.string();
      job->config = config;
      jobs[job->id] = job;
      active = job;
      job->worker = std::thread([this, job, config]() { run_job(job, config); });
      send_json(res, 202, {{"job_id", job->id}});
    });

    server.Get(R"(/api/jobs/([^/]+))", [this](const httplib::Request& req, httplib::Response& res) {
      std::lock_guard<std::mutex> lock(mu);
      auto it = jobs.find(req.matches[1]);
      if (it == jobs.end()) {
        send_error(res, 404, "unknown job");
        return;
      }
      send_json(res, 200, job_json(*it->second));
    });

    server.Get(R"(/api/jobs/([^/]+)/archive)",
               [this](const httplib::Request& req, httplib::Response& res) {
      fs::path archive;
      {
        std::lock_guard<std::mutex> lock(mu);
        auto it = jobs.find(req.matches[1]);
        if (it == jobs.end()) {
          send_error(res, 404, "unknown job");
          return;
        }
        const Job& job = *it->second;
        if (job.state == JobState::kFailed) {
          send_error(res, 409, "job failed: " + job.error);
          return;
        }
        if (job.state != JobState::kDone) {
          send_error(res, 409, "job is still running");
          return;
        }
        archive = job.archive;
      }
      Bytes data;
      try {
        data = read_file(archive);
      } catch (const Error& e) {
        send_error(res, 500, e.what());
        return;
      }
      res.set_header("Content-Disposition", "attachment; filename=\"dataset.zip\"");
      res.set_content(std::string(data.begin(), data.end()), "application/zip");
    });

    server.Delete(R"(/api/jobs/([^/]+))", [this](const httplib::Request& req, httplib::Response& res) {
      std::lock_guard<std::mutex> lock(mu);
      auto it = jobs.find(req.matches[1]);
      if (it == jobs.end()) {
        send_error(res, 404, "unknown job");
        return;
      }
      it->second->cancel = true;
      send_json(res, 202, job_json(*it->second));
    });
  }

  void run_job(const std::shared_ptr<Job>& job, const GeneratorConfig& config) {
    {
      std::lock_guard<std::mutex> lock(mu);
      job->state = JobState::kRunning;
    }
    try {
      const DatasetManifest m = textsynth::generate(
          config,
          [&](const ProgressEvent& ev) {
            std::lock_guard<std::mutex> lock(mu);
            job->produced = std::max(job->produced, ev.produced);
            job->skips = ev.skips;
            job->segment_skips = ev.segment_skips;
          },
          &job->cancel);
      std::lock_guard<std::mutex> lock(mu);
      job->produced = m.total;
      job->state = JobState::kDone;
    } catch (const std::exception& e) {
      std::lock_guard<std::mutex> lock(mu);
      job->error = e.what();
      job->state = JobState::kFailed;
    }
  }

  void bind() {
    if (options.port == 0) {
      bound_port = server.bind_to_any_port(options.host);
    } else {
      bound_port = server.bind_to_port(options.host, options.port) ? options.port : -1;
    }
    if (bound_port <= 0) {
      throw Error(ErrorCode::kIo, "cannot bind " + options.host + ":" + std::to_string(options.port));
    }
  }

  void shutdown() {
    server.stop();
    if (server_thread.joinable()) server_thread.join();
    std::vector<std::shared_ptr<Job>> all;
    {
      std::lock_guard<std::mutex> lock(mu);
      for (auto& [id, job] : jobs) {
        job->cancel = true;
        all.push_back(job);
      }
    }
    for (auto& job : all) {
      if (job->worker.joinable()) job->worker.join();
    }
    std::error_code ec;
    if (owns_work_dir) {
      fs::remove_all(options.work_dir, ec);
    } else {
      fs::remove_all(options.work_dir / "fonts", ec);
      fs::remove_all(options.work_dir / "jobs", ec);
    }
  }
};

Service::Service(ServiceOptions options) : impl_(std::make_unique<Impl>(std::move(options))) {}

Service::~Service() { stop(); }

int Service::start() {
  impl_->bind();
  impl_->server_thread = std::thread([this] { impl_->server.listen_after_bind(); });
  impl_->server.wait_until_ready();
  return impl_->bound_port;
}

void Service::run() {
  impl_->bind();
  impl_->server.listen_after_bind();
}

void Service::stop() {
  if (impl_) impl_->shutdown();
}

int Service::port() const { return impl_->bound_port; }

const fs::path& Service::work_dir() const { return impl_->options.work_dir; }

}  // namespace textsynth
