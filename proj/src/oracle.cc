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

#include "greedy_cover/oracle.h"

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "greedy_cover/bounds.h"
#include "greedy_cover/errors.h"
#include "greedy_cover/format.h"
#include "greedy_cover/greedy.h"
#include "greedy_cover/splitmix.h"
#include "json.hpp"

namespace greedy_cover {
namespace {

// Depth-first over index sets of exactly `size` rows in lexicographic order;
// the first cover reached is therefore the lexicographically smallest.
bool FindCoverOfSize(const Instance& inst, int size, int next,
                     const BitRow& covered, std::vector<int>& chosen) {
  if (static_cast<int>(chosen.size()) == size) return covered.all();
  const int still_needed = size - static_cast<int>(chosen.size());
  for (int i = next; i <= inst.num_rows() - still_needed; ++i) {
    BitRow extended = covered;
    extended |= inst.row(i);
    chosen.push_back(i);
    if (FindCoverOfSize(inst, size, i + 1, extended, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

void AddViolation(OracleReport& report, const Instance& inst,
                  const char* check, int k, double observed, double bound) {
  report.violations.push_back(
      Violation{WriteInstance(inst), check, k, observed, bound});
}

}  // namespace

ExactCover ExactMinCover(const Instance& inst) {
  if (inst.num_rows() > kMaxExactRows) {
    throw CoverError(ErrorCode::kTooLarge,
                     "exact search limited to " +
                         std::to_string(kMaxExactRows) + " rows, got " +
                         std::to_string(inst.num_rows()));
  }
  const BitRow empty(inst.num_cols());
  for (int size = 1; size <= inst.num_rows(); ++size) {
    std::vector<int> chosen;
    if (FindCoverOfSize(inst, size, 0, empty, chosen)) {
      return ExactCover{size, std::move(chosen)};
    }
  }
  // A valid instance is covered by all of its rows.
  throw CoverError(ErrorCode::kUncoverable, "no cover exists");
}

void CheckInstance(const Instance& inst, OracleReport& report) {
  ++report.instances_checked;
  const DensitySpec density = Density(inst);
  const int m = inst.num_rows();
  const int n = inst.num_cols();
  const CoverTrace trace = RunGreedy(inst);
  const int steps = static_cast<int>(trace.greedy_rows.size());
  const BoundSeries series =
      ComputeBoundSeries(density.gamma_effective, m, steps);
  for (int k = 0; k <= steps; ++k) {
    const int u = trace.uncovered_counts[k];
    const BoundEntry& e = series.entries[k];
    if (u > n * e.improved + kBoundSlack) {
      AddViolation(report, inst, "improved", k, u, n * e.improved);
    }
    if (u > n * e.classical + kBoundSlack) {
      AddViolation(report, inst, "classical", k, u, n * e.classical);
    }
    if (k < steps) {
      const int64_t newly = u - trace.uncovered_counts[k + 1];
      const int64_t unselected = m - k;
      const int64_t numerator = int64_t{density.c_effective} * u;
      const int64_t guaranteed = (numerator + unselected - 1) / unselected;
      if (newly < guaranteed) {
        AddViolation(report, inst, "pigeonhole", k,
                     static_cast<double>(newly),
                     static_cast<double>(guaranteed));
      }
    }
  }
}

OracleReport CheckBoundExhaustive(int m, int n) {
  if (m < 1 || n < 1) {
    throw CoverError(ErrorCode::kBadArgs, "m and n must be >= 1");
  }
  if (m * n > kMaxExhaustiveCells) {
    throw CoverError(ErrorCode::kTooLarge,
                     "exhaustive enumeration limited to m*n <= " +
                         std::to_string(kMaxExhaustiveCells));
  }
  OracleReport report;
  const int cells = m * n;
  const uint32_t limit = uint32_t{1} << cells;
  for (uint32_t mask = 0; mask < limit; ++mask) {
    std::vector<BitRow> rows(m, BitRow(n));
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n; ++j) {
        if ((mask >> (i * n + j)) & 1u) rows[i].set(j);
      }
    }
    bool zero_column = false;
    for (int j = 0; j < n && !zero_column; ++j) {
      bool any = false;
      for (int i = 0; i < m; ++i) any = any || rows[i].test(j);
      zero_column = !any;
    }
    if (zero_column) continue;
    CheckInstance(Instance(std::move(rows)), report);
  }
  return report;
}

OracleReport CheckBoundRandom(const std::vector<GenSpec>& specs) {
  OracleReport report;
  for (const GenSpec& spec : specs) CheckInstance(Generate(spec), report);
  return report;
}

std::vector<GenSpec> RandomSchedule(int count, uint64_t seed) {
  static constexpr std::array<double, 4> kGammas = {0.1, 0.2, 0.3, 0.5};
  SplitMix64 rng(seed);
  std::vector<GenSpec> specs;
  specs.reserve(count);
  for (int i = 0; i < count; ++i) {
    GenSpec spec;
    spec.model = i % 2 == 0 ? GenModel::kColumnRegular
                            : GenModel::kBernoulliRepair;
    spec.gamma = kGammas[(i / 2) % kGammas.size()];
    spec.m = 2 + static_cast<int>(rng.Below(63));
    spec.n = 1 + static_cast<int>(rng.Below(256));
    spec.p = 0.05 + 0.55 * rng.UnitDouble();
    spec.seed = rng.Next();
    specs.push_back(spec);
  }
  return specs;
}

OracleReport CheckProductInequality(int max_y) {
  if (max_y < 1) throw CoverError(ErrorCode::kBadArgs, "max_y must be >= 1");
  // Relative slack for pairs where two sides coincide (x = 1, x = 2).
  constexpr double kRelative = 1e-12;
  OracleReport report;
  for (int y = 1; y <= max_y; ++y) {
    for (int x = 1; x <= y; ++x) {
      ++report.instances_checked;
      const double exact = ProductExact(x, y);
      const double lower = ProductLower(x, y);
      const double upper = ProductUpper(x, y);
      const std::string pair =
          "x=" + std::to_string(x) + ",y=" + std::to_string(y);
      if (lower > exact * (1 + kRelative)) {
        report.violations.push_back(Violation{pair, "lower", x, exact, lower});
      }
      if (exact > upper * (1 + kRelative)) {
        report.violations.push_back(Violation{pair, "upper", x, exact, upper});
      }
    }
  }
  return report;
}

std::string ReportSummary(const std::string& suite,
                          const OracleReport& report) {
  return std::string(report.pass() ? "PASS" : "FAIL") + " suite=" + suite +
         " instances=" + std::to_string(report.instances_checked) +
         " violations=" + std::to_string(report.violations.size());
}

std::string ReportJson(const std::string& suite, const OracleReport& report) {
  nlohmann::ordered_json doc;
  doc["suite"] = suite;
  doc["pass"] = report.pass();
  doc["instances_checked"] = report.instances_checked;
  doc["violations"] = nlohmann::ordered_json::array();
  for (const Violation& v : report.violations) {
    doc["violations"].push_back({{"subject", v.subject},
                                 {"check", v.check},
                                 {"k", v.k},
                                 {"observed", v.observed},
                                 {"bound", v.bound}});
  }
  return doc.dump(2) + "\n";
}

}  // namespace greedy_cover
