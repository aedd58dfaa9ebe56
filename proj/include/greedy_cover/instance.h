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

#ifndef GREEDY_COVER_INSTANCE_H_
#define GREEDY_COVER_INSTANCE_H_

#include <string>
#include <string_view>
#include <vector>

#include "greedy_cover/bit_row.h"

namespace greedy_cover {

// An m x n (0,1) incidence matrix. Row i is subset A_i, column j is element
// a_j; bit j of row i is set iff a_j belongs to A_i. Instances are validated
// on construction: m >= 1, n >= 1, every row has n positions and every column
// holds at least one 1. Immutable afterwards.
class Instance {
 public:
  // Throws CoverError(kBadArgs) on shape problems and
  // CoverError(kZeroColumn) when some element is in no subset.
  explicit Instance(std::vector<BitRow> rows);

  int num_rows() const { return static_cast<int>(rows_.size()); }
  int num_cols() const { return num_cols_; }
  const BitRow& row(int i) const { return rows_[i]; }
  const std::vector<BitRow>& rows() const { return rows_; }

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  int num_cols_ = 0;
  std::vector<BitRow> rows_;
};

// Builds an instance from '0'/'1' strings, one per row. Convenience for
// tests and small fixtures.
Instance InstanceFromStrings(const std::vector<std::string>& rows);

struct DensitySpec {
  double gamma_nominal = 0.0;
  // Minimum number of ones over all columns.
  int c_effective = 0;
  // c_effective / m.
  double gamma_effective = 0.0;
};

std::vector<int> ColumnCounts(const Instance& inst);

// Measured density; gamma_nominal is set to gamma_effective.
DensitySpec Density(const Instance& inst);

// Number of ones per column implied by gamma for m rows, i.e. ceil(gamma*m).
// A product gamma*m that lies within 1e-9 (relative) of an integer is taken
// to be that integer so 0.3 * 10 means 3, not 4.
int RequiredOnesPerColumn(double gamma, int m);

// gamma * m, snapped up to the nearest integer when it lies within 1e-9
// (relative) below it. Never smaller than gamma * m as computed.
double OnesPerColumn(double gamma, int m);

// Text format: a header line "m n" followed by m lines of exactly n
// characters from {0,1}. LF or CRLF line endings; final newline optional.
Instance ParseInstance(std::string_view text);

// Canonical form: LF endings, trailing newline.
std::string WriteInstance(const Instance& inst);

Instance ReadInstanceFile(const std::string& path);
void WriteInstanceFile(const std::string& path, const Instance& inst);

}  // namespace greedy_cover

#endif  // GREEDY_COVER_INSTANCE_H_
