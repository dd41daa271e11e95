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

#include <filesystem>
#include <memory>
#include <string>

namespace textsynth {

inline constexpr int kDefaultServicePort = 8787;
inline constexpr std::size_t kMaxServicePreview = 16;

struct ServiceOptions {
  std::string host = "127.0.0.1";
  int port = kDefaultServicePort;  // 0 picks a free port
  /// Holds uploaded fonts and job outputs; a fresh temporary directory
  /// when empty. Removed on stop().
  std::filesystem::path work_dir;
};

/// Local HTTP front end over the engine.
///
///   POST   /api/fonts              multipart "file" -> {font_id, family_name}
///   GET    /api/fonts              -> [{font_id, family_name, path}]
///   POST   /api/preview            {"config": {...}, "count": K} -> [{png_base64, label}]
///   POST   /api/jobs               {"config": {...}} -> {job_id}
///   GET    /api/jobs/{id}          -> job state and counters
///   GET    /api/jobs/{id}/archive  -> dataset.zip
///   DELETE /api/jobs/{id}          -> cancel
///
/// A font path of the form "upload:ID" names an uploaded font.
class Service {
 public:
  explicit Service(ServiceOptions options = {});
  ~Service();

  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  /// Binds the socket and serves on a background thread. Returns the port.
  int start();
  /// Binds and serves on the calling thread until stop().
  void run();
  /// Stops serving, cancels a running job and purges the work directory.
  void stop();

  int port() const;
  const std::filesystem::path& work_dir() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace textsynth
