// Copyright 2026 The Stablematch Authors.
//
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

#include "stablematch/generator.h"

#include "gtest/gtest.h"
#include "stablematch/analysis.h"
#include "stablematch/errors.h"
#include "stablematch/oracle.h"

namespace stablematch {
namespace {

TEST(RandomInstanceTest, DeterministicPerSeed) {
  EXPECT_EQ(RandomInstance(12, 5), RandomInstance(12, 5));
  EXPECT_NE(RandomInstance(12, 5), RandomInstance(12, 6));
  const PreferenceInstance inst = RandomInstance(7, 1);
  EXPECT_EQ(inst.size(), 7);
  EXPECT_EQ(inst.men_ids().front(), 1);
  EXPECT_EQ(inst.women_ids().back(), 7);
}

TEST(RandomInstanceTest, SizeZeroIsEmptyAndNegativeThrows) {
  EXPECT_TRUE(RandomInstance(0, 1).empty());
  EXPECT_THROW(RandomInstance(-1, 1), SizeError);
}

TEST(WorstCaseInstanceTest, SatisfiesClassifier) {
  for (int n : {3, 4, 5, 6}) {
    const WorstCaseSample sample = WorstCaseInstance(n, /*seed=*/n);
    EXPECT_EQ(sample.instance.size(), n);
    EXPECT_GE(sample.attempts, 1u);
    const WorstCaseReport report = ClassifyWorstCase(sample.instance);
    EXPECT_TRUE(report.unique_stable);
    EXPECT_TRUE(report.no_first_choice);
    EXPECT_EQ(EnumerateStable(sample.instance).size(), 1u);
  }
}

TEST(WorstCaseInstanceTest, Deterministic) {
  const WorstCaseSample a = WorstCaseInstance(4, 77);
  const WorstCaseSample b = WorstCaseInstance(4, 77);
  EXPECT_EQ(a.instance, b.instance);
  EXPECT_EQ(a.attempts, b.attempts);
}

TEST(WorstCaseInstanceTest, TooSmallThrows) {
  EXPECT_THROW(WorstCaseInstance(1, 0), SizeError);
  // Two men can never both miss their first choice in a unique matching.
  EXPECT_THROW(WorstCaseInstance(2, 0, 1000), GeneratorExhausted);
}

TEST(WorstCaseInstanceTest, HonoursAttemptCap) {
  try {
    WorstCaseInstance(12, 3, /*max_attempts=*/5);
    FAIL() << "expected exhaustion";
  } catch (const GeneratorExhausted& e) {
    EXPECT_EQ(e.attempts(), 5u);
  }
}

}  // namespace
}  // namespace stablematch
