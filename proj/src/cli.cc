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

#include "greedy_cover/cli.h"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <future>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "greedy_cover/bounds.h"
#include "greedy_cover/errors.h"
#include "greedy_cover/experiment.h"
#include "greedy_cover/format.h"
#include "greedy_cover/generate.h"
#include "greedy_cover/greedy.h"
#include "greedy_cover/instance.h"
#include "greedy_cover/oracle.h"

namespace greedy_cover {
namespace {

// Thrown for flag values that parse but are out of range.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void WriteOutput(const std::string& path, const std::string& text,
                 std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + path);
  file << text;
  if (!file) throw std::runtime_error("write failed: " + path);
}

void RequireGamma(double gamma) {
  if (!(gamma > 0.0 && gamma <= 1.0)) {
    throw UsageError("--gamma: must lie in (0,1], got " + FormatDouble(gamma));
  }
}

void RequirePositive(const char* flag, int value) {
  if (value < 1) {
    throw UsageError(std::string(flag) + ": must be >= 1, got " +
                     std::to_string(value));
  }
}

struct GenFlags {
  int m = 0;
  int n = 0;
  double gamma = 0.0;
  std::string model = "column-regular";
  double p = 0.5;
  uint64_t seed = 0;
};

void AddGenFlags(CLI::App* cmd, GenFlags& flags, bool required) {
  cmd->add_option("--m", flags.m, "rows (subsets)")->required(required);
  cmd->add_option("--n", flags.n, "columns (elements)")->required(required);
  cmd->add_option("--gamma", flags.gamma, "minimum column density in (0,1]")
      ->required(required);
  cmd->add_option("--model", flags.model, "generator model")
      ->check(CLI::IsMember({"column-regular", "bernoulli-repair"}));
  cmd->add_option("--p", flags.p, "cell probability for bernoulli-repair");
  cmd->add_option("--seed", flags.seed, "64-bit seed")->required(required);
}

GenSpec ToGenSpec(const GenFlags& flags) {
  RequirePositive("--m", flags.m);
  RequirePositive("--n", flags.n);
  RequireGamma(flags.gamma);
  if (!(flags.p >= 0.0 && flags.p <= 1.0)) {
    throw UsageError("--p: must lie in [0,1], got " + FormatDouble(flags.p));
  }
  GenSpec spec;
  spec.m = flags.m;
  spec.n = flags.n;
  spec.gamma = flags.gamma;
  spec.model = *ParseGenModel(flags.model);
  spec.p = flags.p;
  spec.seed = flags.seed;
  return spec;
}

std::string DensityLine(const Instance& inst) {
  const DensitySpec d = Density(inst);
  return "m=" + std::to_string(inst.num_rows()) +
         " n=" + std::to_string(inst.num_cols()) +
         " c_effective=" + std::to_string(d.c_effective) +
         " gamma_effective=" + FormatDouble(d.gamma_effective) + "\n";
}

int CmdGen(const GenFlags& flags, const std::string& out_path,
           std::ostream& out) {
  const GenSpec spec = ToGenSpec(flags);
  const Instance inst = Generate(spec);
  WriteInstanceFile(out_path, inst);
  out << DensityLine(inst);
  return kExitOk;
}

struct SolveFlags {
  std::string in;
  std::optional<int> k_max;
  std::string k_star;
  bool patch = false;
  std::string out;
};

int CmdSolve(const SolveFlags& flags, std::ostream& out) {
  const Instance inst = ReadInstanceFile(flags.in);
  std::optional<int> stop = flags.k_max;
  if (stop && *stop < 0) throw UsageError("--k-max: must be >= 0");
  if (!flags.k_star.empty()) {
    const BoundKind kind = flags.k_star == "classical" ? BoundKind::kClassical
                                                       : BoundKind::kImproved;
    stop = CoverSizeBound(Density(inst).gamma_effective, inst.num_rows(),
                          inst.num_cols(), kind)
               .k_star;
  }
  CoverTrace trace = RunGreedy(inst, stop);
  if (flags.patch) trace = CompleteCover(inst, trace);
  WriteOutput(flags.out, TraceJson(inst, trace), out);
  return kExitOk;
}

struct BoundsFlags {
  double gamma = 0.0;
  int m = 0;
  std::optional<int> k_max;
  std::optional<int> n;
  std::string out;
};

std::string EstimateText(const CoverSizeEstimate& e) {
  return "(" + std::to_string(e.k_star) + "," + std::to_string(e.size_bound) +
         ")";
}

int CmdBounds(const BoundsFlags& flags, std::ostream& out) {
  RequireGamma(flags.gamma);
  RequirePositive("--m", flags.m);
  const int k_max = flags.k_max.value_or(flags.m);
  if (k_max < 0 || k_max > flags.m) {
    throw UsageError("--k-max: must lie in [0, m]");
  }
  if (flags.n && *flags.n < 0) throw UsageError("--n: must be >= 0");
  std::string csv =
      BoundSeriesCsv(ComputeBoundSeries(flags.gamma, flags.m, k_max));
  if (flags.n) {
    const CoverSizeEstimate improved =
        CoverSizeBound(flags.gamma, flags.m, *flags.n, BoundKind::kImproved);
    const CoverSizeEstimate classical =
        CoverSizeBound(flags.gamma, flags.m, *flags.n, BoundKind::kClassical);
    csv += "# cover_size_bound improved=" + EstimateText(improved) +
           " classical=" + EstimateText(classical) + "\n";
  }
  WriteOutput(flags.out, csv, out);
  return kExitOk;
}

struct CompareFlags {
  std::string in;
  GenFlags gen;
  int count = 1;
  int threads = 1;
  std::string out;
};

int CmdCompare(const CompareFlags& flags, bool sweep_flags_given,
               std::ostream& out, std::ostream& err) {
  std::vector<std::vector<ExperimentRecord>> per_instance;
  if (!flags.in.empty()) {
    if (sweep_flags_given) {
      throw UsageError("--in: cannot be combined with generator flags");
    }
    const Instance inst = ReadInstanceFile(flags.in);
    InstanceOrigin origin;
    origin.gamma_nominal = Density(inst).gamma_effective;
    per_instance.push_back(CompareInstance(inst, origin));
  } else {
    if (flags.gen.m == 0 || flags.gen.n == 0 || flags.gen.gamma == 0.0) {
      throw UsageError("compare: give --in PATH or --m, --n, --gamma");
    }
    const GenSpec base = ToGenSpec(flags.gen);
    RequirePositive("--count", flags.count);
    RequirePositive("--threads", flags.threads);
    per_instance.resize(flags.count);
    auto run = [&](int id) {
      GenSpec spec = base;
      spec.seed = base.seed + static_cast<uint64_t>(id);
      InstanceOrigin origin{id, spec.gamma, spec.seed,
                            std::string(GenModelName(spec.model))};
      per_instance[id] = CompareInstance(Generate(spec), origin);
    };
    // Each worker owns a strided slice of ids; results land by id, so output
    // order does not depend on scheduling.
    std::vector<std::future<void>> workers;
    const int threads = std::min(flags.threads, flags.count);
    for (int t = 0; t < threads; ++t) {
      workers.push_back(std::async(std::launch::async, [&, t] {
        for (int id = t; id < flags.count; id += threads) run(id);
      }));
    }
    for (auto& w : workers) w.get();
  }
  std::string csv = std::string(kExperimentCsvHeader) + "\n";
  int violations = 0;
  for (const auto& records : per_instance) {
    for (const ExperimentRecord& r : records) {
      csv += ExperimentCsvRow(r) + "\n";
      if (!SatisfiesDominance(r)) {
        ++violations;
        err << "bound violation: " << ExperimentCsvRow(r) << "\n";
      }
    }
  }
  WriteOutput(flags.out, csv, out);
  return violations == 0 ? kExitOk : kExitViolation;
}

int CmdExact(const std::string& in, std::ostream& out) {
  const Instance inst = ReadInstanceFile(in);
  const ExactCover cover = ExactMinCover(inst);
  out << "size " << cover.size << "\nrows";
  for (const int row : cover.rows) out << " " << row;
  out << "\n";
  return kExitOk;
}

struct VerifyFlags {
  std::string suite;
  int max_y = 200;
  int m = 0;
  int n = 0;
  int count = 1000;
  uint64_t seed = 1;
  std::string report;
};

int CmdVerify(const VerifyFlags& flags, std::ostream& out) {
  OracleReport report;
  if (flags.suite == "product-inequality") {
    RequirePositive("--max-y", flags.max_y);
    report = CheckProductInequality(flags.max_y);
  } else if (flags.suite == "exhaustive") {
    RequirePositive("--m", flags.m);
    RequirePositive("--n", flags.n);
    report = CheckBoundExhaustive(flags.m, flags.n);
  } else {
    RequirePositive("--count", flags.count);
    report = CheckBoundRandom(RandomSchedule(flags.count, flags.seed));
  }
  out << ReportSummary(flags.suite, report) << "\n";
  if (!flags.report.empty()) {
    WriteOutput(flags.report, ReportJson(flags.suite, report), out);
  }
  return report.pass() ? kExitOk : kExitViolation;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Greedy set cover with coverage-trajectory bounds",
               "greedy_cover"};
  app.require_subcommand(1);

  GenFlags gen_flags;
  std::string gen_out;
  CLI::App* gen = app.add_subcommand("gen", "generate an instance file");
  AddGenFlags(gen, gen_flags, /*required=*/true);
  gen->add_option("--out", gen_out, "instance file to write")->required();

  SolveFlags solve_flags;
  CLI::App* solve = app.add_subcommand("solve", "run greedy and write a trace");
  solve->add_option("--in", solve_flags.in, "instance file")->required();
  CLI::Option* k_max_opt =
      solve->add_option("--k-max", solve_flags.k_max, "stop after K steps");
  solve->add_option("--k-star", solve_flags.k_star,
                    "stop at the step minimizing the cover-size bound")
      ->check(CLI::IsMember({"classical", "improved"}))
      ->excludes(k_max_opt);
  solve->add_flag("--patch", solve_flags.patch, "cover leftovers one by one");
  solve->add_option("--out", solve_flags.out, "trace file (default stdout)");

  BoundsFlags bounds_flags;
  CLI::App* bounds = app.add_subcommand("bounds", "tabulate the bound series");
  bounds->add_option("--gamma", bounds_flags.gamma, "density")->required();
  bounds->add_option("--m", bounds_flags.m, "rows")->required();
  bounds->add_option("--k-max", bounds_flags.k_max, "last step (default m)");
  bounds->add_option("--n", bounds_flags.n, "columns, adds a size-bound line");
  bounds->add_option("--out", bounds_flags.out, "CSV file (default stdout)");

  CompareFlags compare_flags;
  CLI::App* compare =
      app.add_subcommand("compare", "empirical trajectory against both bounds");
  compare->add_option("--in", compare_flags.in, "single instance file");
  AddGenFlags(compare, compare_flags.gen, /*required=*/false);
  compare->add_option("--count", compare_flags.count, "instances in the sweep");
  compare->add_option("--threads", compare_flags.threads, "worker threads");
  compare->add_option("--out", compare_flags.out, "CSV file (default stdout)");

  std::string exact_in;
  CLI::App* exact = app.add_subcommand("exact", "minimum cover by search");
  exact->add_option("--in", exact_in, "instance file")->required();

  VerifyFlags verify_flags;
  CLI::App* verify = app.add_subcommand("verify", "run an oracle suite");
  verify->add_option("--suite", verify_flags.suite)
      ->required()
      ->check(CLI::IsMember({"product-inequality", "exhaustive", "random"}));
  verify->add_option("--max-y", verify_flags.max_y, "product suite range");
  verify->add_option("--m", verify_flags.m, "exhaustive rows");
  verify->add_option("--n", verify_flags.n, "exhaustive columns");
  verify->add_option("--count", verify_flags.count, "random instances");
  verify->add_option("--seed", verify_flags.seed, "random schedule seed");
  verify->add_option("--report", verify_flags.report, "JSON report file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (gen->parsed()) return CmdGen(gen_flags, gen_out, out);
    if (solve->parsed()) return CmdSolve(solve_flags, out);
    if (bounds->parsed()) return CmdBounds(bounds_flags, out);
    if (compare->parsed()) {
      bool sweep = false;
      for (const char* flag : {"--m", "--n", "--gamma", "--model", "--p",
                               "--seed", "--count", "--threads"}) {
        sweep = sweep || compare->count(flag) > 0;
      }
      return CmdCompare(compare_flags, sweep, out, err);
    }
    if (exact->parsed()) return CmdExact(exact_in, out);
    if (verify->parsed()) return CmdVerify(verify_flags, out);
  } catch (const UsageError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  } catch (const CoverError& e) {
    err << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::kTooLarge:
      case ErrorCode::kBadArgs:
      case ErrorCode::kBadGamma:
      case ErrorCode::kBadSpec:
        return kExitUsage;
      default:
        return kExitFailure;
    }
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace greedy_cover
