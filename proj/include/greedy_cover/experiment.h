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

#ifndef GREEDY_COVER_EXPERIMENT_H_
#define GREEDY_COVER_EXPERIMENT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "greedy_cover/format.h"
#include "greedy_cover/generate.h"
#include "greedy_cover/greedy.h"
#include "greedy_cover/instance.h"

namespace greedy_cover {

// Single JSON object with m, n, gamma_effective, greedy_rows,
// uncovered_counts, patch_rows, total_size (in that order).
std::string TraceJson(const Instance& inst, const CoverTrace& trace);

struct ExperimentRecord {
  int instance_id = 0;
  int m = 0;
  int n = 0;
  double gamma_nominal = 0.0;
  double gamma_effective = 0.0;
  // Absent for instances read from a file.
  std::optional<uint64_t> seed;
  // Generator model name, or "file".
  std::string model;
  int k = 0;
  int u_k = 0;
  double delta_k = 0.0;
  double classical = 0.0;
  double improved = 0.0;
  double ratio = 0.0;
};

// Describes where an instance came from, for the record columns.
struct InstanceOrigin {
  int instance_id = 0;
  double gamma_nominal = 0.0;
  std::optional<uint64_t> seed;
  std::string model = "file";
};

// One record per greedy step k = 0..K of a full greedy run. Bounds use the
// measured gamma_effective.
std::vector<ExperimentRecord> CompareInstance(const Instance& inst,
                                              const InstanceOrigin& origin);

// True iff delta_k <= improved <= classical, each with kBoundSlack.
bool SatisfiesDominance(const ExperimentRecord& record);

inline constexpr const char* kExperimentCsvHeader =
    "instance_id,m,n,gamma_nominal,gamma_effective,seed,model,k,u_k,delta_k,"
    "classical,improved,ratio";

std::string ExperimentCsvRow(const ExperimentRecord& record);

}  // namespace greedy_cover

#endif  // GREEDY_COVER_EXPERIMENT_H_
