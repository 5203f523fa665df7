// Copyright 2026 The fuzzygraph Authors
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

#include "fuzzygraph/error.hpp"

namespace fzg {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSyntaxError: return "SyntaxError";
    case ErrorCode::kDuplicateVertex: return "DuplicateVertex";
    case ErrorCode::kDuplicateEdge: return "DuplicateEdge";
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kUnknownEndpoint: return "UnknownEndpoint";
    case ErrorCode::kUnknownVertex: return "UnknownVertex";
    case ErrorCode::kMuExceedsSigma: return "MuExceedsSigma";
    case ErrorCode::kZeroMu: return "ZeroMu";
    case ErrorCode::kNoSuchEdge: return "NoSuchEdge";
    case ErrorCode::kDisconnected: return "Disconnected";
    case ErrorCode::kStrongDisconnected: return "StrongDisconnected";
    case ErrorCode::kBadSpec: return "BadSpec";
    case ErrorCode::kBadParams: return "BadParams";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kNotAFuzzyTree: return "NotAFuzzyTree";
  }
  return "Unknown";
}

namespace {

std::string format_message(ErrorCode code, const std::string& message,
                           std::optional<std::size_t> line) {
  std::string out(to_string(code));
  if (line) out += " at line " + std::to_string(*line);
  out += ": ";
  out += message;
  return out;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& message, std::optional<std::size_t> line)
    : std::runtime_error(format_message(code, message, line)), code_(code), line_(line) {}

}  // namespace fzg
