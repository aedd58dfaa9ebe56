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

#ifndef GREEDY_COVER_ERRORS_H_
#define GREEDY_COVER_ERRORS_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace greedy_cover {

enum class ErrorCode {
  kZeroColumn,
  kBadHeader,
  kBadRowLength,
  kBadChar,
  kBadRowCount,
  kBadSpec,
  kIndexOutOfRange,
  kNoProgress,
  kUncoverable,
  kBadGamma,
  kBadArgs,
  kOutOfRegion,
  kTooLarge,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures are reported through this exception. The message is
// prefixed with the code name, e.g. "ZeroColumn: column 2 has no ones".
class CoverError : public std::runtime_error {
 public:
  CoverError(ErrorCode code, const std::string& message);

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace greedy_cover

#endif  // GREEDY_COVER_ERRORS_H_
