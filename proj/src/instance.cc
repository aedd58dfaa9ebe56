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

#include "greedy_cover/instance.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "greedy_cover/errors.h"

namespace greedy_cover {
namespace {

constexpr double kIntegralTolerance = 1e-9;

std::string LinePrefix(int line) { return "line " + std::to_string(line) + ": "; }

// Splits on LF, dropping one trailing CR per line. A final empty segment
// (text ending in a newline) is not a line.
std::vector<std::string_view> SplitLines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

bool ParsePositive(std::string_view token, int& value) {
  if (token.empty()) return false;
  for (const char ch : token) {
    if (ch < '0' || ch > '9') return false;
  }
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  return ec == std::errc() && ptr == token.data() + token.size() && value > 0;
}

}  // namespace

Instance::Instance(std::vector<BitRow> rows) : rows_(std::move(rows)) {
  if (rows_.empty()) {
    throw CoverError(ErrorCode::kBadArgs, "instance needs at least one row");
  }
  num_cols_ = static_cast<int>(rows_.front().size());
  if (num_cols_ == 0) {
    throw CoverError(ErrorCode::kBadArgs, "instance needs at least one column");
  }
  BitRow covered(num_cols_);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (static_cast<int>(rows_[i].size()) != num_cols_) {
      throw CoverError(ErrorCode::kBadRowLength,
                       "row " + std::to_string(i + 1) + " has " +
                           std::to_string(rows_[i].size()) +
                           " positions, expected " + std::to_string(num_cols_));
    }
    covered |= rows_[i];
  }
  for (int j = 0; j < num_cols_; ++j) {
    if (!covered.test(j)) {
      throw CoverError(ErrorCode::kZeroColumn,
                       "column " + std::to_string(j + 1) + " has no ones");
    }
  }
}

Instance InstanceFromStrings(const std::vector<std::string>& rows) {
  std::vector<BitRow> bits;
  bits.reserve(rows.size());
  for (const std::string& row : rows) {
    BitRow bit_row(row.size());
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] == '1') {
        bit_row.set(j);
      } else if (row[j] != '0') {
        throw CoverError(ErrorCode::kBadChar,
                         std::string("unexpected character '") + row[j] + "'");
      }
    }
    bits.push_back(std::move(bit_row));
  }
  return Instance(std::move(bits));
}

std::vector<int> ColumnCounts(const Instance& inst) {
  std::vector<int> counts(inst.num_cols(), 0);
  for (const BitRow& row : inst.rows()) {
    for (int j = 0; j < inst.num_cols(); ++j) counts[j] += row.test(j);
  }
  return counts;
}

DensitySpec Density(const Instance& inst) {
  const std::vector<int> counts = ColumnCounts(inst);
  const int c = *std::min_element(counts.begin(), counts.end());
  if (c == 0) {
    // Unreachable for a constructed Instance; kept for the contract.
    throw CoverError(ErrorCode::kZeroColumn, "column with no ones");
  }
  DensitySpec spec;
  spec.c_effective = c;
  spec.gamma_effective = static_cast<double>(c) / inst.num_rows();
  spec.gamma_nominal = spec.gamma_effective;
  return spec;
}

double OnesPerColumn(double gamma, int m) {
  const double product = gamma * m;
  const double above = std::ceil(product);
  if (above - product <= kIntegralTolerance * std::max(1.0, above)) {
    return above;
  }
  return product;
}

int RequiredOnesPerColumn(double gamma, int m) {
  const int c = static_cast<int>(std::ceil(OnesPerColumn(gamma, m)));
  return std::clamp(c, 1, m);
}

Instance ParseInstance(std::string_view text) {
  const std::vector<std::string_view> lines = SplitLines(text);
  if (lines.empty()) {
    throw CoverError(ErrorCode::kBadHeader, LinePrefix(1) + "missing header");
  }
  const std::string_view header = lines[0];
  const std::size_t space = header.find(' ');
  int m = 0;
  int n = 0;
  if (space == std::string_view::npos ||
      !ParsePositive(header.substr(0, space), m) ||
      !ParsePositive(header.substr(space + 1), n)) {
    throw CoverError(ErrorCode::kBadHeader,
                     LinePrefix(1) + "expected \"m n\" with positive integers, "
                                     "got \"" + std::string(header) + "\"");
  }
  std::vector<BitRow> rows;
  rows.reserve(m);
  for (int i = 0; i < m; ++i) {
    const int line_no = i + 2;
    if (static_cast<std::size_t>(i + 1) >= lines.size()) {
      throw CoverError(ErrorCode::kBadRowCount,
                       LinePrefix(line_no) + "expected " + std::to_string(m) +
                           " rows, input ends after " + std::to_string(i));
    }
    const std::string_view line = lines[i + 1];
    if (static_cast<int>(line.size()) != n) {
      throw CoverError(ErrorCode::kBadRowLength,
                       LinePrefix(line_no) + "row has " +
                           std::to_string(line.size()) + " characters, expected " +
                           std::to_string(n));
    }
    BitRow row(n);
    for (int j = 0; j < n; ++j) {
      if (line[j] == '1') {
        row.set(j);
      } else if (line[j] != '0') {
        throw CoverError(ErrorCode::kBadChar,
                         LinePrefix(line_no) + "character " +
                             std::to_string(j + 1) + " is not 0 or 1");
      }
    }
    rows.push_back(std::move(row));
  }
  for (std::size_t extra = m + 1; extra < lines.size(); ++extra) {
    if (!lines[extra].empty()) {
      throw CoverError(ErrorCode::kBadRowCount,
                       LinePrefix(static_cast<int>(extra) + 1) +
                           "unexpected data after " + std::to_string(m) +
                           " rows");
    }
  }
  BitRow covered(n);
  for (const BitRow& row : rows) covered |= row;
  for (int j = 0; j < n; ++j) {
    if (!covered.test(j)) {
      throw CoverError(ErrorCode::kZeroColumn,
                       LinePrefix(1) + "column " + std::to_string(j + 1) +
                           " has no ones");
    }
  }
  return Instance(std::move(rows));
}

std::string WriteInstance(const Instance& inst) {
  std::string text = std::to_string(inst.num_rows()) + " " +
                     std::to_string(inst.num_cols()) + "\n";
  text.reserve(text.size() +
               static_cast<std::size_t>(inst.num_rows()) * (inst.num_cols() + 1));
  for (const BitRow& row : inst.rows()) {
    for (int j = 0; j < inst.num_cols(); ++j) text.push_back(row.test(j) ? '1' : '0');
    text.push_back('\n');
  }
  return text;
}

Instance ReadInstanceFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseInstance(buffer.str());
}

void WriteInstanceFile(const std::string& path, const Instance& inst) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << WriteInstance(inst);
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace greedy_cover
