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

#include "greedy_cover/greedy.h"

#include <optional>
#include <string>
#include <vector>

#include "greedy_cover/errors.h"

namespace greedy_cover {

int Gain(const Instance& inst, int row, const BitRow& uncovered) {
  if (row < 0 || row >= inst.num_rows()) {
    throw CoverError(ErrorCode::kIndexOutOfRange,
                     "row " + std::to_string(row) + " not in [0, " +
                         std::to_string(inst.num_rows()) + ")");
  }
  if (static_cast<int>(uncovered.size()) != inst.num_cols()) {
    throw CoverError(ErrorCode::kIndexOutOfRange,
                     "uncovered set has length " +
                         std::to_string(uncovered.size()) + ", expected " +
                         std::to_string(inst.num_cols()));
  }
  return static_cast<int>(inst.row(row).CountAnd(uncovered));
}

int GreedyStep(const Instance& inst, const BitRow& uncovered) {
  int best_row = -1;
  int best_gain = 0;
  for (int i = 0; i < inst.num_rows(); ++i) {
    const int gain = Gain(inst, i, uncovered);
    if (gain > best_gain) {
      best_gain = gain;
      best_row = i;
    }
  }
  if (best_row < 0) {
    throw CoverError(ErrorCode::kNoProgress, "no row covers an uncovered element");
  }
  return best_row;
}

CoverTrace RunGreedy(const Instance& inst, std::optional<int> k_max) {
  if (k_max && *k_max < 0) {
    throw CoverError(ErrorCode::kBadArgs, "k_max must be >= 0");
  }
  CoverTrace trace;
  BitRow uncovered(inst.num_cols(), true);
  int remaining = inst.num_cols();
  trace.uncovered_counts.push_back(remaining);
  while (remaining > 0 &&
         (!k_max || static_cast<int>(trace.greedy_rows.size()) < *k_max)) {
    const int row = GreedyStep(inst, uncovered);
    uncovered.AndNot(inst.row(row));
    remaining = static_cast<int>(uncovered.count());
    trace.greedy_rows.push_back(row);
    trace.uncovered_counts.push_back(remaining);
  }
  trace.total_size = static_cast<int>(trace.greedy_rows.size());
  return trace;
}

CoverTrace CompleteCover(const Instance& inst, const CoverTrace& trace) {
  CoverTrace result = trace;
  std::vector<int> selected = trace.greedy_rows;
  selected.insert(selected.end(), trace.patch_rows.begin(),
                  trace.patch_rows.end());
  std::vector<bool> used(inst.num_rows(), false);
  for (const int row : selected) used[row] = true;
  BitRow uncovered = UncoveredAfter(inst, selected);
  for (int j = 0; j < inst.num_cols(); ++j) {
    if (!uncovered.test(j)) continue;
    int pick = -1;
    for (int i = 0; i < inst.num_rows(); ++i) {
      if (!used[i] && inst.row(i).test(j)) {
        pick = i;
        break;
      }
    }
    if (pick < 0) {
      throw CoverError(ErrorCode::kUncoverable,
                       "no unselected row contains column " +
                           std::to_string(j + 1));
    }
    used[pick] = true;
    result.patch_rows.push_back(pick);
    uncovered.AndNot(inst.row(pick));
  }
  result.total_size =
      static_cast<int>(result.greedy_rows.size() + result.patch_rows.size());
  return result;
}

BitRow UncoveredAfter(const Instance& inst, const std::vector<int>& rows) {
  BitRow uncovered(inst.num_cols(), true);
  for (const int row : rows) {
    if (row < 0 || row >= inst.num_rows()) {
      throw CoverError(ErrorCode::kIndexOutOfRange,
                       "row " + std::to_string(row) + " out of range");
    }
    uncovered.AndNot(inst.row(row));
  }
  return uncovered;
}

bool VerifyCover(const Instance& inst, const std::vector<int>& rows) {
  return UncoveredAfter(inst, rows).none();
}

}  // namespace greedy_cover
