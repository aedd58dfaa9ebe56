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

#ifndef GREEDY_COVER_GENERATE_H_
#define GREEDY_COVER_GENERATE_H_

#include <cstdint>
#include <optional>
#include <string_view>

#include "greedy_cover/instance.h"

namespace greedy_cover {

enum class GenModel { kColumnRegular, kBernoulliRepair };

std::string_view GenModelName(GenModel model);
std::optional<GenModel> ParseGenModel(std::string_view name);

struct GenSpec {
  int m = 1;
  int n = 1;
  double gamma = 1.0;
  GenModel model = GenModel::kColumnRegular;
  // Cell probability; only read by kBernoulliRepair.
  double p = 0.0;
  uint64_t seed = 0;
};

// Throws CoverError(kBadSpec) unless m, n >= 1, gamma in (0,1] and, for
// kBernoulliRepair, p in [0,1].
void ValidateGenSpec(const GenSpec& spec);

// Every column gets exactly c = RequiredOnesPerColumn(gamma, m) ones at rows
// drawn uniformly without replacement.
Instance GenerateColumnRegular(const GenSpec& spec);

// Each cell is 1 with probability p; every column left with fewer than c ones
// is then topped up to exactly c at uniformly chosen zero rows. Ones are
// never removed.
Instance GenerateBernoulliRepair(const GenSpec& spec);

// Dispatches on spec.model.
Instance Generate(const GenSpec& spec);

}  // namespace greedy_cover

#endif  // GREEDY_COVER_GENERATE_H_
