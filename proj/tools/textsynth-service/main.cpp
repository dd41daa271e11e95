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


#include <pthread.h>

#include <csignal>
#include <iostream>

#include "CLI11.hpp"
#include "textsynth/error.hpp"
#include "textsynth/service.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Local preview and generation service", "textsynth-service"};
  textsynth::ServiceOptions options;
  app.add_option("--host", options.host, "Bind address")->capture_default_str();
  app.add_option("--port", options.port, "Port, 0 for any free port")->capture_default_str();
  app.add_option("--work-dir", options.work_dir, "Scratch directory for uploads and jobs");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  try {
    // Block termination signals in every thread and wait for one here.
    sigset_t signals;
    sigemptyset(&signals);
    sigaddset(&signals, SIGINT);
    sigaddset(&signals, SIGTERM);
    pthread_sigmask(SIG_BLOCK, &signals, nullptr);
    textsynth::Service service(options);
    const int port = service.start();
    std::cerr << "listening on http://" << options.host << ":" << port << "\n";
    int received = 0;
    sigwait(&signals, &received);
    std::cerr << "shutting down\n";
    service.stop();
  } catch (const textsynth::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
