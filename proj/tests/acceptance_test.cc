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

// Acceptance suite: one PASS/FAIL line per criterion; exits nonzero if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "greedy_cover/bounds.h"
#include "greedy_cover/cli.h"
#include "greedy_cover/greedy.h"
#include "greedy_cover/instance.h"
#include "greedy_cover/oracle.h"

namespace greedy_cover {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Timer {
 public:
  double Seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

std::string Fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

// gamma = i / 20 for i = 1..19.
constexpr int kGridDenominator = 20;

double GridGamma(int i) { return static_cast<double>(i) / kGridDenominator; }

Outcome ExhaustiveTrajectory() {
  Timer timer;
  Outcome result;
  const std::vector<std::pair<int, int>> shapes = {
      {2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 3}};
  for (const auto& [m, n] : shapes) {
    const OracleReport report = CheckBoundExhaustive(m, n);
    int64_t expected = 1;
    for (int j = 0; j < n; ++j) expected *= (int64_t{1} << m) - 1;
    result.detail += std::to_string(m) + "x" + std::to_string(n) + ":" +
                     std::to_string(report.instances_checked) + " ";
    if (!report.pass() || report.instances_checked != expected) {
      result.pass = false;
      result.detail += "(violations=" +
                       std::to_string(report.violations.size()) + ") ";
    }
  }
  const double seconds = timer.Seconds();
  result.detail += "time=" + Fmt(seconds) + "s";
  if (seconds >= 10.0) result.pass = false;
  return result;
}

Outcome RandomTrajectory() {
  Timer timer;
  const std::vector<GenSpec> specs = RandomSchedule(1000, 1);
  const OracleReport report = CheckBoundRandom(specs);
  int improved = 0;
  int classical = 0;
  int pigeonhole = 0;
  for (const Violation& v : report.violations) {
    improved += v.check == "improved";
    classical += v.check == "classical";
    pigeonhole += v.check == "pigeonhole";
  }
  const double seconds = timer.Seconds();
  Outcome result;
  result.pass = report.pass() && report.instances_checked >= 1000 &&
                seconds < 60.0;
  result.detail = "instances=" + std::to_string(report.instances_checked) +
                  " improved=" + std::to_string(improved) +
                  " classical=" + std::to_string(classical) +
                  " pigeonhole=" + std::to_string(pigeonhole) +
                  " time=" + Fmt(seconds) + "s";
  return result;
}

Outcome ProductSandwich() {
  Timer timer;
  const OracleReport report = CheckProductInequality(200);
  const double seconds = timer.Seconds();
  Outcome result;
  result.pass = report.pass() && report.instances_checked == 200 * 201 / 2 &&
                seconds < 5.0;
  result.detail = "pairs=" + std::to_string(report.instances_checked) +
                  " violations=" + std::to_string(report.violations.size()) +
                  " time=" + Fmt(seconds) + "s";
  return result;
}

Outcome ClosedFormConsistency() {
  Outcome result;
  double worst = 0.0;
  int64_t points = 0;
  for (int i = 1; i < kGridDenominator; ++i) {
    const double gamma = GridGamma(i);
    for (int m = 2; m <= 128; ++m) {
      // k <= m(1 - gamma), decided in integers.
      for (int k = 0; k * kGridDenominator <= (kGridDenominator - i) * m;
           ++k) {
        const double rec = ImprovedBound(gamma, m, k);
        const double closed = ClosedFormBound(gamma, m, k);
        const double rel = std::abs(closed - rec) / std::max(rec, 1e-300);
        worst = std::max(worst, rel);
        ++points;
        if (rel > 1e-12) result.pass = false;
      }
    }
  }
  result.detail =
      "points=" + std::to_string(points) + " max_rel_err=" + Fmt(worst);
  return result;
}

Outcome DominanceAndClamping() {
  Outcome result;
  int64_t points = 0;
  int dominance_failures = 0;
  int zero_failures = 0;
  for (int i = 1; i < kGridDenominator; ++i) {
    const double gamma = GridGamma(i);
    for (int m = 2; m <= 128; ++m) {
      // Factor at step j is <= 0 iff (m - j) <= gamma * m, i.e.
      // 20 (m - j) <= i m. The bound first vanishes one step later.
      int expected_zero = m + 1;
      for (int j = 0; j < m; ++j) {
        if (kGridDenominator * (m - j) <= i * m) {
          expected_zero = j + 1;
          break;
        }
      }
      // Same thing via ceil(m(1 - gamma)) + 1.
      const int residual_ceil =
          ((kGridDenominator - i) * m + kGridDenominator - 1) /
          kGridDenominator;
      if (expected_zero != residual_ceil + 1) ++zero_failures;
      if (FirstZeroStep(gamma, m) != expected_zero) ++zero_failures;
      for (int k = 0; k <= m; ++k) {
        ++points;
        const double improved = ImprovedBound(gamma, m, k);
        if (improved > ClassicalBound(gamma, k)) ++dominance_failures;
        if ((k >= expected_zero) != (improved == 0.0)) ++zero_failures;
      }
    }
  }
  result.pass = dominance_failures == 0 && zero_failures == 0;
  result.detail = "points=" + std::to_string(points) +
                  " dominance_failures=" + std::to_string(dominance_failures) +
                  " zero_index_failures=" + std::to_string(zero_failures);
  return result;
}

Outcome RatioBehaviour() {
  Outcome result;
  const double near_zero = ImprovementRatio(1e-9, 100, 50);
  if (!(near_zero >= 1 - 1e-6)) result.pass = false;
  result.detail = "ratio(1e-9)=" + Fmt(near_zero) + " series:";
  double previous = near_zero;
  for (const double gamma : {0.01, 0.05, 0.1, 0.2, 0.3, 0.4}) {
    const double ratio = ImprovementRatio(gamma, 100, 50);
    result.detail += " " + Fmt(ratio);
    if (!(ratio < previous)) result.pass = false;
    previous = ratio;
  }
  return result;
}

Outcome WorkedExamples() {
  Outcome result;
  const Instance inst = InstanceFromStrings({"111100", "110010", "001101"});
  const int greedy_total = CompleteCover(inst, RunGreedy(inst)).total_size;
  const ExactCover exact = ExactMinCover(inst);
  if (greedy_total != 3 || exact.size != 2 ||
      exact.rows != std::vector<int>{1, 2}) {
    result.pass = false;
  }
  const std::vector<double> expected = {1, 0.75, 0.5, 0.25, 0};
  for (int k = 0; k <= 4; ++k) {
    if (ImprovedBound(0.25, 4, k) != expected[k]) result.pass = false;
  }
  const CoverSizeEstimate size =
      CoverSizeBound(0.25, 4, 100, BoundKind::kImproved);
  if (size.k_star != 4 || size.size_bound != 4) result.pass = false;
  result.detail = "greedy=" + std::to_string(greedy_total) +
                  " exact=" + std::to_string(exact.size) +
                  " cover_size_bound=(" + std::to_string(size.k_star) + "," +
                  std::to_string(size.size_bound) + ")";
  return result;
}

std::string Slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// gen -> solve --patch -> compare for one seed; returns the three files.
std::vector<std::string> RunPipeline(const fs::path& dir, int seed,
                                     bool& ok) {
  const std::string inst = (dir / "inst.txt").string();
  const std::string trace = (dir / "trace.json").string();
  const std::string csv = (dir / "compare.csv").string();
  std::ostringstream sink;
  const std::vector<std::vector<std::string>> commands = {
      {"greedy_cover", "gen", "--m", "24", "--n", "96", "--gamma", "0.2",
       "--model", "bernoulli-repair", "--p", "0.15", "--seed",
       std::to_string(seed), "--out", inst},
      {"greedy_cover", "solve", "--in", inst, "--k-star", "improved",
       "--patch", "--out", trace},
      {"greedy_cover", "compare", "--in", inst, "--out", csv},
  };
  for (const auto& args : commands) {
    if (RunCli(args, sink, sink) != kExitOk) ok = false;
  }
  return {Slurp(inst), Slurp(trace), Slurp(csv)};
}

Outcome DeterminismGoldens() {
  Outcome result;
  const fs::path root = fs::temp_directory_path() / "greedy_cover_acceptance";
  fs::remove_all(root);
  int files = 0;
  for (const int seed : {1, 42, 20261018}) {
    const fs::path first = root / ("a" + std::to_string(seed));
    const fs::path second = root / ("b" + std::to_string(seed));
    fs::create_directories(first);
    fs::create_directories(second);
    bool ok = true;
    const auto a = RunPipeline(first, seed, ok);
    const auto b = RunPipeline(second, seed, ok);
    if (!ok || a != b) result.pass = false;
    for (const std::string& text : a) {
      if (text.empty()) result.pass = false;
      ++files;
    }
  }
  fs::remove_all(root);
  result.detail = "seeds=3 files_compared=" + std::to_string(files);
  return result;
}

}  // namespace
}  // namespace greedy_cover

int main() {
  using greedy_cover::Outcome;
  const std::vector<std::pair<std::string, std::function<Outcome()>>>
      criteria = {
          {"1 exhaustive trajectory bound", greedy_cover::ExhaustiveTrajectory},
          {"2 randomized trajectory bound", greedy_cover::RandomTrajectory},
          {"3 product sandwich", greedy_cover::ProductSandwich},
          {"4 closed form vs recurrence", greedy_cover::ClosedFormConsistency},
          {"5 dominance and clamping", greedy_cover::DominanceAndClamping},
          {"6 improvement ratio", greedy_cover::RatioBehaviour},
          {"7 worked micro-instances", greedy_cover::WorkedExamples},
          {"8 determinism goldens", greedy_cover::DeterminismGoldens},
      };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome outcome;
    try {
      outcome = check();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    failures += !outcome.pass;
    std::cout << (outcome.pass ? "[PASS] " : "[FAIL] ") << name << "  "
              << outcome.detail << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : "criteria failed: ")
            << (failures == 0 ? "" : std::to_string(failures)) << std::endl;
  return failures == 0 ? 0 : 1;
}
