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

#include <stdexcept>
#include <string>
#include <vector>

namespace textsynth {

enum class ErrorCode {
  kInvalidArgument,
  kInvalidRange,
  kInvalidProbability,
  kEmptyCorpus,
  kNoValidSegments,
  kEncoding,
  kFontUnreadable,
  kFontUnparseable,
  kImageDecode,
  kIo,
  kFormat,
  kSplit,
  kUnfitText,
  kConfig,
  kCancelled,
  kIntegrity,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// One semantic problem in a configuration document, addressed by a
/// field path such as `fonts[].percentage`.
struct FieldIssue {
  std::string path;
  std::string message;
};

class ConfigError : public Error {
 public:
  explicit ConfigError(std::vector<FieldIssue> issues);
  ConfigError(std::string path, std::string message);

  const std::vector<FieldIssue>& issues() const noexcept { return issues_; }

 private:
  std::vector<FieldIssue> issues_;
};

}  // namespace textsynth
