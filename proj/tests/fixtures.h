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

#ifndef GREEDY_COVER_TESTS_FIXTURES_H_
#define GREEDY_COVER_TESTS_FIXTURES_H_

#include "greedy_cover/instance.h"

namespace greedy_cover::testing {

// Subsets {1,2,3,4}, {1,2,5}, {3,4,6} over six elements. Greedy takes all
// three rows; rows 1 and 2 alone already cover.
inline Instance GreedyBadInstance() {
  return InstanceFromStrings({"111100", "110010", "001101"});
}

inline Instance Identity3() {
  return InstanceFromStrings({"100", "010", "001"});
}

}  // namespace greedy_cover::testing

#endif  // GREEDY_COVER_TESTS_FIXTURES_H_
