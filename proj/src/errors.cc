// Copyright 2026 The greedy-cover Authors
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

#include "greedy_cover/errors.h"

#include <string>
#include <string_view>

namespace greedy_cover {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kZeroColumn:
      return "ZeroColumn";
    case ErrorCode::kBadHeader:
      return "BadHeader";
    case ErrorCode::kBadRowLength:
      return "BadRowLength";
    case ErrorCode::kBadChar:
      return "BadChar";
    case ErrorCode::kBadRowCount:
      return "BadRowCount";
    case ErrorCode::kBadSpec:
      return "BadSpec";
    case ErrorCode::kIndexOutOfRange:
      return "IndexOutOfRange";
    case ErrorCode::kNoProgress:
      return "NoProgress";
    case ErrorCode::kUncoverable:
      return "Uncoverable";
    case ErrorCode::kBadGamma:
      return "BadGamma";
    case ErrorCode::kBadArgs:
      return "BadArgs";
    case ErrorCode::kOutOfRegion:
      return "OutOfRegion";
    case ErrorCode::kTooLarge:
      return "TooLarge";
  }
  return "Unknown";
}

CoverError::CoverError(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code) {}

}  // namespace greedy_cover
