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

#include "greedy_cover/generate.h"

#include <cmath>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "greedy_cover/errors.h"
#include "greedy_cover/splitmix.h"

namespace greedy_cover {
namespace {

// First `count` entries of `pool` become a uniform sample without
// replacement (partial Fisher-Yates).
void SampleInPlace(std::vector<int>& pool, int count, SplitMix64& rng) {
  for (int i = 0; i < count; ++i) {
    const int remaining = static_cast<int>(pool.size()) - i;
    const int pick = i + static_cast<int>(rng.Below(remaining));
    std::swap(pool[i], pool[pick]);
  }
}

void RequireModel(const GenSpec& spec, GenModel model) {
  if (spec.model != model) {
    throw CoverError(ErrorCode::kBadSpec,
                     "generator called with model " +
                         std::string(GenModelName(spec.model)));
  }
}

}  // namespace

std::string_view GenModelName(GenModel model) {
  switch (model) {
    case GenModel::kColumnRegular:
      return "column-regular";
    case GenModel::kBernoulliRepair:
      return "bernoulli-repair";
  }
  return "unknown";
}

std::optional<GenModel> ParseGenModel(std::string_view name) {
  if (name == "column-regular") return GenModel::kColumnRegular;
  if (name == "bernoulli-repair") return GenModel::kBernoulliRepair;
  return std::nullopt;
}

void ValidateGenSpec(const GenSpec& spec) {
  if (spec.m < 1) throw CoverError(ErrorCode::kBadSpec, "m must be >= 1");
  if (spec.n < 1) throw CoverError(ErrorCode::kBadSpec, "n must be >= 1");
  if (!(spec.gamma > 0.0 && spec.gamma <= 1.0)) {
    throw CoverError(ErrorCode::kBadSpec, "gamma must lie in (0,1]");
  }
  if (spec.model == GenModel::kBernoulliRepair &&
      !(spec.p >= 0.0 && spec.p <= 1.0)) {
    throw CoverError(ErrorCode::kBadSpec, "p must lie in [0,1]");
  }
}

Instance GenerateColumnRegular(const GenSpec& spec) {
  ValidateGenSpec(spec);
  RequireModel(spec, GenModel::kColumnRegular);
  const int c = RequiredOnesPerColumn(spec.gamma, spec.m);
  SplitMix64 rng(spec.seed);
  std::vector<BitRow> rows(spec.m, BitRow(spec.n));
  std::vector<int> pool(spec.m);
  for (int j = 0; j < spec.n; ++j) {
    std::iota(pool.begin(), pool.end(), 0);
    SampleInPlace(pool, c, rng);
    for (int t = 0; t < c; ++t) rows[pool[t]].set(j);
  }
  return Instance(std::move(rows));
}

Instance GenerateBernoulliRepair(const GenSpec& spec) {
  ValidateGenSpec(spec);
  RequireModel(spec, GenModel::kBernoulliRepair);
  const int c = RequiredOnesPerColumn(spec.gamma, spec.m);
  SplitMix64 rng(spec.seed);
  std::vector<BitRow> rows(spec.m, BitRow(spec.n));
  for (BitRow& row : rows) {
    for (int j = 0; j < spec.n; ++j) {
      if (rng.UnitDouble() < spec.p) row.set(j);
    }
  }
  std::vector<int> zero_rows;
  for (int j = 0; j < spec.n; ++j) {
    zero_rows.clear();
    for (int i = 0; i < spec.m; ++i) {
      if (!rows[i].test(j)) zero_rows.push_back(i);
    }
    const int ones = spec.m - static_cast<int>(zero_rows.size());
    if (ones >= c) continue;
    const int missing = c - ones;
    SampleInPlace(zero_rows, missing, rng);
    for (int t = 0; t < missing; ++t) rows[zero_rows[t]].set(j);
  }
  return Instance(std::move(rows));
}

Instance Generate(const GenSpec& spec) {
  switch (spec.model) {
    case GenModel::kColumnRegular:
      return GenerateColumnRegular(spec);
    case GenModel::kBernoulliRepair:
      return GenerateBernoulliRepair(spec);
  }
  throw CoverError(ErrorCode::kBadSpec, "unknown generator model");
}

}  // namespace greedy_cover
