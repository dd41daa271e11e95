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

#include "textsynth/error.hpp"

namespace textsynth {
namespace {

std::string join_issues(const std::vector<FieldIssue>& issues) {
  std::string out;
  for (const FieldIssue& issue : issues) {
    if (!out.empty()) out += "; ";
    out += issue.path + ": " + issue.message;
  }
  return out.empty() ? "invalid configuration" : out;
}

}  // namespace

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid_argument";
    case ErrorCode::kInvalidRange: return "invalid_range";
    case ErrorCode::kInvalidProbability: return "invalid_probability";
    case ErrorCode::kEmptyCorpus: return "empty_corpus";
    case ErrorCode::kNoValidSegments: return "no_valid_segments";
    case ErrorCode::kEncoding: return "encoding";
    case ErrorCode::kFontUnreadable: return "font_unreadable";
    case ErrorCode::kFontUnparseable: return "font_unparseable";
    case ErrorCode::kImageDecode: return "image_decode";
    case ErrorCode::kIo: return "io";
    case ErrorCode::kFormat: return "format";
    case ErrorCode::kSplit: return "split";
    case ErrorCode::kUnfitText: return "unfit_text";
    case ErrorCode::kConfig: return "config";
    case ErrorCode::kCancelled: return "cancelled";
    case ErrorCode::kIntegrity: return "integrity";
  }
  return "unknown";
}

ConfigError::ConfigError(std::vector<FieldIssue> issues)
    : Error(ErrorCode::kConfig, join_issues(issues)), issues_(std::move(issues)) {}

ConfigError::ConfigError(std::string path, std::string message)
    : ConfigError(std::vector<FieldIssue>{{std::move(path), std::move(message)}}) {}

}  // namespace textsynth
