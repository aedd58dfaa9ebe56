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

#ifndef GREEDY_COVER_ORACLE_H_
#define GREEDY_COVER_ORACLE_H_

#include <cstdint>
#include <string>
#include <vector>

#include "greedy_cover/generate.h"
#include "greedy_cover/instance.h"

namespace greedy_cover {

// Absolute slack allowed when an integer count is compared with n * bound.
inline constexpr double kBoundSlack = 1e-9;

struct ExactCover {
  int size = 0;
  std::vector<int> rows;
};

// Minimum-cardinality cover by subset search in increasing size; among
// minimum covers, the lexicographically smallest index set. m <= 25
// (CoverError kTooLarge otherwise).
ExactCover ExactMinCover(const Instance& inst);

inline constexpr int kMaxExactRows = 25;
inline constexpr int kMaxExhaustiveCells = 16;

struct Violation {
  // Instance text, or a short description for non-instance checks.
  std::string subject;
  // Which inequality failed: "improved", "classical", "pigeonhole", ...
  std::string check;
  int k = 0;
  double observed = 0.0;
  double bound = 0.0;
};

struct OracleReport {
  int64_t instances_checked = 0;
  std::vector<Violation> violations;

  bool pass() const { return violations.empty(); }
};

// Checks one instance: runs greedy to completion and tests, at every step,
// u_k <= n * ImprovedBound + slack, u_k <= n * ClassicalBound + slack and
// the per-step guarantee u_k - u_{k+1} >= ceil(c * u_k / (m - k)), with
// gamma and c measured from the instance.
void CheckInstance(const Instance& inst, OracleReport& report);

// Every m x n binary matrix without an all-zero column. m * n <= 16.
OracleReport CheckBoundExhaustive(int m, int n);

OracleReport CheckBoundRandom(const std::vector<GenSpec>& specs);

// Fixed sweep used by the `verify --suite random` command and the
// acceptance suite: alternates the two generator models, cycles gamma over
// {0.1, 0.2, 0.3, 0.5}, and draws m in [2, 64], n in [1, 256], p in
// [0.05, 0.6] from a SplitMix64 stream seeded with `seed`.
std::vector<GenSpec> RandomSchedule(int count, uint64_t seed);

// All pairs 1 <= x <= y <= max_y; each pair is one "instance".
OracleReport CheckProductInequality(int max_y);

// "PASS instances=343 violations=0" style line.
std::string ReportSummary(const std::string& suite, const OracleReport& report);

// JSON object {"suite", "pass", "instances_checked", "violations": [...]}.
std::string ReportJson(const std::string& suite, const OracleReport& report);

}  // namespace greedy_cover

#endif  // GREEDY_COVER_ORACLE_H_
