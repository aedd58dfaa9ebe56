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

#ifndef GREEDY_COVER_GREEDY_H_
#define GREEDY_COVER_GREEDY_H_

#include <optional>
#include <vector>

#include "greedy_cover/bit_row.h"
#include "greedy_cover/instance.h"

namespace greedy_cover {

// Record of one two-phase run. uncovered_counts[k] is the number of elements
// still uncovered after k greedy steps, so uncovered_counts[0] == n and
// uncovered_counts.size() == greedy_rows.size() + 1.
struct CoverTrace {
  std::vector<int> greedy_rows;
  std::vector<int> uncovered_counts;
  std::vector<int> patch_rows;
  int total_size = 0;

  friend bool operator==(const CoverTrace&, const CoverTrace&) = default;
};

// Number of columns set in both `uncovered` and row `row`.
int Gain(const Instance& inst, int row, const BitRow& uncovered);

// Row of maximal gain against `uncovered`, lowest index on ties. Throws
// CoverError(kNoProgress) if every row has gain 0.
int GreedyStep(const Instance& inst, const BitRow& uncovered);

// Greedy max-gain selection until everything is covered or `k_max` steps
// have been taken (unbounded when absent). patch_rows is left empty.
CoverTrace RunGreedy(const Instance& inst,
                     std::optional<int> k_max = std::nullopt);

// Patch phase: scans still-uncovered columns in ascending order and, for
// each, adds the lowest-index unselected row containing it.
CoverTrace CompleteCover(const Instance& inst, const CoverTrace& trace);

bool VerifyCover(const Instance& inst, const std::vector<int>& rows);

// Elements left uncovered by `rows`, as a bit-vector of length n.
BitRow UncoveredAfter(const Instance& inst, const std::vector<int>& rows);

}  // namespace greedy_cover

#endif  // GREEDY_COVER_GREEDY_H_
