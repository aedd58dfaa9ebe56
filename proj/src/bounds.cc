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

#include "greedy_cover/bounds.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "greedy_cover/errors.h"
#include "greedy_cover/format.h"
#include "greedy_cover/instance.h"

namespace greedy_cover {
namespace {

void CheckGamma(double gamma) {
  if (!(gamma > 0.0 && gamma <= 1.0)) {
    throw CoverError(ErrorCode::kBadGamma, "gamma must lie in (0,1], got " +
                                               FormatDouble(gamma));
  }
}

void CheckRows(int m) {
  if (m < 1) throw CoverError(ErrorCode::kBadArgs, "m must be >= 1");
}

void CheckStep(int k, int m) {
  if (k < 0 || k > m) {
    throw CoverError(ErrorCode::kBadArgs, "k = " + std::to_string(k) +
                                              " outside [0, m = " +
                                              std::to_string(m) + "]");
  }
}

// Per-step shrink factors. `ones` is gamma*m after integer snapping.
// The improved factor ((m-j) - ones) / (m-j) never exceeds 1 - gamma in
// exact arithmetic; capping it there in floating point as well keeps the
// iterated products ordered, since rounding is monotone.
struct StepFactors {
  StepFactors(double gamma, int m)
      : m(m), ones(OnesPerColumn(gamma, m)), classical(1.0 - gamma) {}

  double Improved(int j) const {
    const double unselected = m - j;
    const double f = (unselected - ones) / unselected;
    return std::clamp(f, 0.0, classical);
  }

  int m;
  double ones;
  double classical;
};

// m(1-gamma), the last step at which every factor of the closed form is
// still nonnegative.
void CheckRegion(const StepFactors& f, int k) {
  const double residual = f.m - f.ones;
  if (k > residual + 1e-9 * std::max(1.0, residual)) {
    throw CoverError(ErrorCode::kOutOfRegion,
                     "k = " + std::to_string(k) + " exceeds m(1-gamma) = " +
                         FormatDouble(residual));
  }
}

}  // namespace

double ClassicalBound(double gamma, int k) {
  CheckGamma(gamma);
  if (k < 0) throw CoverError(ErrorCode::kBadArgs, "k must be >= 0");
  // Repeated multiplication rather than std::pow so that ImprovedBound,
  // built the same way from smaller factors, is never larger.
  const double factor = 1.0 - gamma;
  double b = 1.0;
  for (int j = 0; j < k && b != 0.0; ++j) b *= factor;
  return b;
}

double ImprovedBound(double gamma, int m, int k) {
  CheckGamma(gamma);
  CheckRows(m);
  CheckStep(k, m);
  const StepFactors f(gamma, m);
  double b = 1.0;
  for (int j = 0; j < k && b != 0.0; ++j) b *= f.Improved(j);
  return b;
}

double ClosedFormBound(double gamma, int m, int k) {
  CheckGamma(gamma);
  CheckRows(m);
  CheckStep(k, m);
  const StepFactors f(gamma, m);
  CheckRegion(f, k);
  const double residual = m - f.ones;
  const double base = residual / m;
  double value = 1.0;
  for (int j = 0; j < k; ++j) value *= base;
  for (int i = 1; i < k; ++i) {
    value *= (residual - i) / residual;
    value /= static_cast<double>(m - i) / m;
  }
  return value;
}

double ProductExact(int x, int y) {
  if (x < 1 || x > y) {
    throw CoverError(ErrorCode::kBadArgs, "need 1 <= x <= y");
  }
  double value = 1.0;
  for (int i = 1; i < x; ++i) value *= static_cast<double>(y - i) / y;
  return value;
}

double ProductLower(int x, int y) {
  if (x < 1 || x > y) {
    throw CoverError(ErrorCode::kBadArgs, "need 1 <= x <= y");
  }
  return std::pow(static_cast<double>(y - x) / y, (x - 1) / 2.0);
}

double ProductUpper(int x, int y) {
  if (x < 1 || x > y) {
    throw CoverError(ErrorCode::kBadArgs, "need 1 <= x <= y");
  }
  return std::pow(static_cast<double>(2 * int64_t{y} - x) / (2.0 * y), x - 1);
}

double ImprovementRatio(double gamma, int m, int k) {
  CheckGamma(gamma);
  CheckRows(m);
  CheckStep(k, m);
  const StepFactors f(gamma, m);
  CheckRegion(f, k);
  const double residual = m - f.ones;
  double ratio = 1.0;
  for (int i = 1; i < k; ++i) {
    const double factor = ((residual - i) / residual) /
                          (static_cast<double>(m - i) / m);
    ratio *= std::clamp(factor, 0.0, 1.0);
  }
  return ratio;
}

int FirstZeroStep(double gamma, int m) {
  CheckGamma(gamma);
  CheckRows(m);
  const StepFactors f(gamma, m);
  double b = 1.0;
  for (int j = 0; j < m; ++j) {
    b *= f.Improved(j);
    if (b == 0.0) return j + 1;
  }
  return m + 1;
}

BoundSeries ComputeBoundSeries(double gamma, int m, int k_max) {
  CheckGamma(gamma);
  CheckRows(m);
  CheckStep(k_max, m);
  const StepFactors f(gamma, m);
  BoundSeries series;
  series.gamma = gamma;
  series.m = m;
  series.entries.reserve(k_max + 1);
  double classical = 1.0;
  double improved = 1.0;
  for (int k = 0; k <= k_max; ++k) {
    if (k > 0) {
      if (classical != 0.0) classical *= f.classical;
      if (improved != 0.0) improved *= f.Improved(k - 1);
    }
    BoundEntry entry;
    entry.k = k;
    entry.classical = classical;
    entry.improved = improved;
    entry.ratio = classical == 0.0 ? 1.0 : improved / classical;
    series.entries.push_back(entry);
  }
  return series;
}

std::string BoundSeriesCsv(const BoundSeries& series) {
  std::string csv = "k,classical,improved,ratio\n";
  for (const BoundEntry& e : series.entries) {
    csv += std::to_string(e.k) + "," + FormatDouble(e.classical) + "," +
           FormatDouble(e.improved) + "," + FormatDouble(e.ratio) + "\n";
  }
  return csv;
}

CoverSizeEstimate CoverSizeBound(double gamma, int m, int n, BoundKind kind) {
  CheckGamma(gamma);
  CheckRows(m);
  if (n < 0) throw CoverError(ErrorCode::kBadArgs, "n must be >= 0");
  const BoundSeries series = ComputeBoundSeries(gamma, m, m);
  CoverSizeEstimate best{0, 0};
  bool first = true;
  for (const BoundEntry& e : series.entries) {
    const double b = kind == BoundKind::kImproved ? e.improved : e.classical;
    // Bound values like 0.5 can come out as 0.5000000000000001; the slack
    // keeps ceil from adding a phantom element.
    const double remaining = std::max(0.0, std::ceil(n * b - 1e-9));
    const int size = e.k + static_cast<int>(remaining);
    if (first || size < best.size_bound) {
      best = {e.k, size};
      first = false;
    }
  }
  return best;
}

}  // namespace greedy_cover
