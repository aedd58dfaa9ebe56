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

#ifndef GREEDY_COVER_BOUNDS_H_
#define GREEDY_COVER_BOUNDS_H_

#include <string>
#include <vector>

namespace greedy_cover {

// Upper bounds on the uncovered fraction delta_k = u_k / n after k greedy
// steps, for instances where every column holds at least gamma*m ones.
//
// Arguments are validated: gamma must lie in (0,1] (CoverError kBadGamma),
// m >= 1 and 0 <= k (<= m where stated) (kBadArgs).

// (1 - gamma)^k.
double ClassicalBound(double gamma, int k);

// b_0 = 1, b_{j+1} = b_j * max(0, 1 - gamma*m / (m - j)). Each uncovered
// column keeps all of its >= gamma*m ones inside the m - j rows not chosen
// yet, so some unchosen row covers at least that share of what is left. A
// negative factor means that row covers everything; it is clamped to 0.
// Requires 0 <= k <= m.
double ImprovedBound(double gamma, int m, int k);

// The product form of ImprovedBound:
//   (1-gamma)^k * prod_{i=1}^{k-1} (1 - i/(m(1-gamma))) / (1 - i/m).
// Defined only where every factor is nonnegative, k <= m(1-gamma); throws
// CoverError(kOutOfRegion) otherwise.
double ClosedFormBound(double gamma, int m, int k);

// prod_{i=1}^{x-1} (1 - i/y), and its two-sided estimate
//   (1 - x/y)^((x-1)/2) <= exact <= (1 - x/(2y))^(x-1).
// Require 1 <= x <= y (kBadArgs).
double ProductExact(int x, int y);
double ProductLower(int x, int y);
double ProductUpper(int x, int y);

// ClosedFormBound / ClassicalBound = prod_{i=1}^{k-1} (1 - i/(m(1-gamma))) /
// (1 - i/m). Same domain as ClosedFormBound; lies in [0,1].
double ImprovementRatio(double gamma, int m, int k);

// First k at which ImprovedBound reaches exactly 0, or m + 1 if it stays
// positive through k = m.
int FirstZeroStep(double gamma, int m);

struct BoundEntry {
  int k = 0;
  double classical = 1.0;
  double improved = 1.0;
  // improved / classical; 1 when both are 0.
  double ratio = 1.0;
};

struct BoundSeries {
  double gamma = 1.0;
  int m = 1;
  std::vector<BoundEntry> entries;
};

// Entries for k = 0..k_max (k_max <= m).
BoundSeries ComputeBoundSeries(double gamma, int m, int k_max);

// Header "k,classical,improved,ratio" then one line per entry, numbers in
// shortest round-trip form.
std::string BoundSeriesCsv(const BoundSeries& series);

enum class BoundKind { kClassical, kImproved };

struct CoverSizeEstimate {
  int k_star = 0;
  int size_bound = 0;

  friend bool operator==(const CoverSizeEstimate&,
                         const CoverSizeEstimate&) = default;
};

// min over 0 <= k <= m of k + ceil(n * B(k)): run k greedy steps, then patch
// each remaining element with one row. k_star is the smallest minimizer.
CoverSizeEstimate CoverSizeBound(double gamma, int m, int n, BoundKind kind);

}  // namespace greedy_cover

#endif  // GREEDY_COVER_BOUNDS_H_
