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

#include "greedy_cover/greedy.h"

#include <vector>

#include "fixtures.h"
#include "greedy_cover/errors.h"
#include "gtest/gtest.h"

namespace greedy_cover {
namespace {

using ::greedy_cover::testing::GreedyBadInstance;
using ::greedy_cover::testing::Identity3;

TEST(GainTest, Examples) {
  const Instance full = InstanceFromStrings({"0101", "1111"});
  EXPECT_EQ(Gain(full, 1, BitRow(4, true)), 4);
  EXPECT_EQ(Gain(full, 1, BitRow(4)), 0);
  const Instance bad = GreedyBadInstance();
  const BitRow all(6, true);
  EXPECT_EQ(Gain(bad, 0, all), 4);
  EXPECT_EQ(Gain(bad, 1, all), 3);
  EXPECT_EQ(Gain(bad, 2, all), 3);
}

TEST(GainTest, IndexOutOfRange) {
  const Instance inst = Identity3();
  EXPECT_THROW(Gain(inst, 3, BitRow(3, true)), CoverError);
  EXPECT_THROW(Gain(inst, -1, BitRow(3, true)), CoverError);
  EXPECT_THROW(Gain(inst, 0, BitRow(4, true)), CoverError);
}

TEST(GreedyStepTest, TieGoesToLowestIndex) {
  EXPECT_EQ(GreedyStep(Identity3(), BitRow(3, true)), 0);
}

TEST(GreedyStepTest, GreedyBadInstance) {
  const Instance inst = GreedyBadInstance();
  EXPECT_EQ(GreedyStep(inst, BitRow(6, true)), 0);
  BitRow uncovered(6);
  uncovered.set(4);
  uncovered.set(5);
  EXPECT_EQ(GreedyStep(inst, uncovered), 1);
}

TEST(GreedyStepTest, NoProgressOnEmptyUncovered) {
  try {
    GreedyStep(Identity3(), BitRow(3));
    FAIL();
  } catch (const CoverError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNoProgress);
  }
}

TEST(RunGreedyTest, Identity) {
  const CoverTrace trace = RunGreedy(Identity3());
  EXPECT_EQ(trace.greedy_rows, (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(trace.uncovered_counts, (std::vector<int>{3, 2, 1, 0}));
  EXPECT_TRUE(trace.patch_rows.empty());
  EXPECT_EQ(trace.total_size, 3);
}

TEST(RunGreedyTest, AllOnesRowStopsAfterOneStep) {
  const Instance inst = InstanceFromStrings({"1010", "1111", "0101", "1111"});
  const CoverTrace trace = RunGreedy(inst, 10);
  EXPECT_EQ(trace.greedy_rows, (std::vector<int>{1}));
  EXPECT_EQ(trace.uncovered_counts, (std::vector<int>{4, 0}));
}

TEST(RunGreedyTest, GreedyBadInstance) {
  const CoverTrace trace = RunGreedy(GreedyBadInstance());
  EXPECT_EQ(trace.greedy_rows, (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(trace.uncovered_counts, (std::vector<int>{6, 2, 1, 0}));
}

TEST(RunGreedyTest, StepLimit) {
  const CoverTrace trace = RunGreedy(GreedyBadInstance(), 1);
  EXPECT_EQ(trace.greedy_rows, (std::vector<int>{0}));
  EXPECT_EQ(trace.uncovered_counts, (std::vector<int>{6, 2}));
  EXPECT_EQ(RunGreedy(Identity3(), 0).uncovered_counts, (std::vector<int>{3}));
  EXPECT_THROW(RunGreedy(Identity3(), -1), CoverError);
}

TEST(CompleteCoverTest, CompleteTraceUnchanged) {
  const Instance inst = GreedyBadInstance();
  const CoverTrace trace = RunGreedy(inst);
  EXPECT_EQ(CompleteCover(inst, trace), trace);
}

TEST(CompleteCoverTest, PatchAfterOneStep) {
  const Instance inst = GreedyBadInstance();
  const CoverTrace trace = CompleteCover(inst, RunGreedy(inst, 1));
  EXPECT_EQ(trace.patch_rows, (std::vector<int>{1, 2}));
  EXPECT_EQ(trace.total_size, 3);
}

TEST(CompleteCoverTest, PatchFromScratch) {
  const Instance inst = Identity3();
  const CoverTrace trace = CompleteCover(inst, RunGreedy(inst, 0));
  EXPECT_TRUE(trace.greedy_rows.empty());
  EXPECT_EQ(trace.patch_rows, (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(trace.total_size, 3);
}

TEST(CompleteCoverTest, OnePatchRowMayCoverSeveralColumns) {
  // Columns 0 and 1 are both first reached by row 0.
  const Instance inst = InstanceFromStrings({"110", "001", "111"});
  const CoverTrace trace = CompleteCover(inst, RunGreedy(inst, 0));
  EXPECT_EQ(trace.patch_rows, (std::vector<int>{0, 1}));
}

TEST(VerifyCoverTest, Examples) {
  EXPECT_TRUE(VerifyCover(Identity3(), {0, 1, 2}));
  EXPECT_FALSE(VerifyCover(Identity3(), {0, 1}));
  EXPECT_TRUE(VerifyCover(GreedyBadInstance(), {1, 2}));
  EXPECT_THROW(VerifyCover(Identity3(), {5}), CoverError);
}

}  // namespace
}  // namespace greedy_cover
