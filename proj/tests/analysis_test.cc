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

#include "stablematch/analysis.h"

#include <vector>

#include "gtest/gtest.h"
#include "stablematch/errors.h"
#include "stablematch/fixtures.h"
#include "stablematch/gsa.h"
#include "stablematch/oracle.h"
#include "stablematch/prefs_io.h"
#include "test_util.h"

namespace stablematch {
namespace {

using testing::Couples;

const Matching& Baseline() {
  static const Matching m = Couples({{1, 2}, {2, 1}, {3, 4}, {4, 3}});
  return m;
}

TEST(IsBlockingTest, WorstCaseBaseline) {
  const PreferenceInstance inst = WorstCase4x4();
  // M1 prefers W1, but W1 ranks her partner M2 first.
  EXPECT_FALSE(IsBlocking(inst, Baseline(), 1, 1));
  EXPECT_FALSE(IsBlocking(inst, Baseline(), 1, 2));
}

TEST(IsBlockingTest, TwoByTwoWomanOptimal) {
  const Matching m = Couples({{1, 2}, {2, 1}});
  EXPECT_FALSE(IsBlocking(TwoStable2x2(), m, 1, 1));
  EXPECT_FALSE(IsBlocking(TwoStable2x2(), m, 2, 2));
}

TEST(IsBlockingTest, DetectsMutualPreference) {
  // W1 ranks M2 first and M2 prefers W1 to W2.
  const PreferenceInstance inst = DeletePair(WorstCase4x4(), {4, 3});
  EXPECT_TRUE(IsBlocking(inst, Couples({{1, 1}, {2, 2}, {3, 4}}), 2, 1));
}

TEST(IsBlockingTest, UnmatchedOrUnknownThrows) {
  const Matching partial = Couples({{1, 2}});
  EXPECT_THROW(IsBlocking(WorstCase4x4(), partial, 1, 1), InvalidArgument);
  EXPECT_THROW(IsBlocking(WorstCase4x4(), Baseline(), 5, 1), InvalidArgument);
}

TEST(IsStableTest, Baseline) {
  EXPECT_TRUE(IsStable(WorstCase4x4(), Baseline()).stable);
  EXPECT_EQ(IsStable(WorstCase4x4(), Baseline()).witness, std::nullopt);
}

TEST(IsStableTest, WrongMatchingAfterDeletingM4W3IsUnstable) {
  const PreferenceInstance inst = DeletePair(WorstCase4x4(), {4, 3});
  const StabilityVerdict verdict =
      IsStable(inst, Couples({{1, 1}, {2, 2}, {3, 4}}));
  EXPECT_FALSE(verdict.stable);
  EXPECT_EQ(verdict.witness, (Couple{2, 1}));
  // Deferred acceptance on the same reduced instance.
  const Matching actual = GsaSolve(inst, Orientation::kMenPropose).matching;
  EXPECT_EQ(actual, Couples({{1, 2}, {2, 1}, {3, 4}}));
  EXPECT_TRUE(IsStable(inst, actual).stable);
}

TEST(IsStableTest, OneByOneAndSubsets) {
  EXPECT_TRUE(IsStable(ParseInstance("1\n1\n1\n"), Couples({{1, 1}})).stable);
  EXPECT_TRUE(IsStable(WorstCase4x4(), Matching()).stable);
  EXPECT_THROW(IsStable(WorstCase4x4(), Couples({{5, 1}})), InvalidArgument);
}

TEST(IsStableTest, WitnessIsSmallestBlockingCouple) {
  // Enumerate all perfect matchings of small random instances and compare
  // with a direct scan in (man, woman) order.
  for (const PreferenceInstance& inst :
       testing::RandomSuite(40, 2, 5, /*seed=*/4)) {
    std::vector<Id> wives(inst.women_ids().begin(), inst.women_ids().end());
    do {
      std::vector<Couple> couples;
      for (int i = 0; i < inst.size(); ++i) {
        couples.push_back({inst.men_ids()[i], wives[i]});
      }
      const Matching m(couples);
      std::optional<Couple> first;
      for (Id man : inst.men_ids()) {
        for (Id woman : inst.women_ids()) {
          if (!first && IsBlocking(inst, m, man, woman)) first = {man, woman};
        }
      }
      const StabilityVerdict verdict = IsStable(inst, m);
      EXPECT_EQ(verdict.stable, !first.has_value());
      EXPECT_EQ(verdict.witness, first);
    } while (std::next_permutation(wives.begin(), wives.end()));
  }
}

TEST(ScoreTest, WorstCaseScores) {
  const PreferenceInstance inst = WorstCase4x4();
  EXPECT_EQ(ComputeScore(inst, Baseline(), Orientation::kMenPropose).value, 8);
  EXPECT_EQ(ComputeScore(inst, Baseline(), Orientation::kWomenPropose).value,
            4);
  EXPECT_EQ(ComputeScore(inst, Couples({{1, 1}, {2, 3}, {4, 2}}),
                         Orientation::kMenPropose)
                .value,
            3);
  EXPECT_EQ(ComputeScore(inst, Matching(), Orientation::kMenPropose).value, 0);
}

TEST(ScoreTest, UsesOriginalRanksNotReducedOnes) {
  // After deleting (M1,W2), M2-W1 is rank 2 in both lists but M3-W4 is rank 1
  // in M3's reduced list and rank 2 in his original one.
  const PreferenceInstance inst = WorstCase4x4();
  const PreferenceInstance reduced = DeletePair(inst, {1, 2});
  const Matching m = GsaSolve(reduced, Orientation::kMenPropose).matching;
  EXPECT_EQ(ComputeScore(inst, m, Orientation::kMenPropose).value, 6);
  EXPECT_EQ(ComputeScore(reduced, m, Orientation::kMenPropose).value, 4);
}

TEST(ScoreTest, RemovingACoupleSubtractsItsRank) {
  for (const PreferenceInstance& inst :
       testing::RandomSuite(30, 2, 20, /*seed=*/12)) {
    const Matching m = GsaSolve(inst, Orientation::kMenPropose).matching;
    const Score full = ComputeScore(inst, m, Orientation::kMenPropose);
    EXPECT_GE(full.value, inst.size());
    EXPECT_LE(full.value, inst.size() * inst.size());
    for (const Couple& dropped : m.couples()) {
      std::vector<Couple> rest;
      for (const Couple& c : m.couples()) {
        if (c != dropped) rest.push_back(c);
      }
      EXPECT_EQ(
          ComputeScore(inst, Matching(rest), Orientation::kMenPropose).value,
          full.value -
              inst.rank_of(Side::kMen, dropped.man, dropped.woman).value);
    }
  }
}

TEST(ClassifyWorstCaseTest, WorstCaseFixture) {
  const WorstCaseReport report = ClassifyWorstCase(WorstCase4x4());
  EXPECT_TRUE(report.unique_stable);
  EXPECT_TRUE(report.man_pessimal);
  EXPECT_TRUE(report.no_first_choice);
  EXPECT_EQ(report.proposer_score.value, 8);
}

TEST(ClassifyWorstCaseTest, TwoStableInstance) {
  const WorstCaseReport report = ClassifyWorstCase(TwoStable2x2());
  EXPECT_FALSE(report.unique_stable);
  EXPECT_FALSE(report.man_pessimal);
  EXPECT_FALSE(report.no_first_choice);
  EXPECT_EQ(report.proposer_score.value, 2);
}

TEST(ClassifyWorstCaseTest, OneByOne) {
  const WorstCaseReport report = ClassifyWorstCase(ParseInstance("1\n1\n1\n"));
  EXPECT_TRUE(report.unique_stable);
  EXPECT_FALSE(report.no_first_choice);
  EXPECT_EQ(report.proposer_score.value, 1);
  EXPECT_THROW(ClassifyWorstCase(PreferenceInstance()), SizeError);
}

TEST(ClassifyWorstCaseTest, UniqueStableAgreesWithOracleCount) {
  for (const PreferenceInstance& inst :
       testing::RandomSuite(200, 1, 7, /*seed=*/31)) {
    const WorstCaseReport report = ClassifyWorstCase(inst);
    const std::vector<Matching> all = EnumerateStable(inst);
    EXPECT_EQ(report.unique_stable, all.size() == 1);
    EXPECT_EQ(report.man_pessimal, report.unique_stable);
    if (report.no_first_choice) {
      EXPECT_GE(report.proposer_score.value, 2 * inst.size());
    }
    if (report.unique_stable) {
      // Man-optimal and man-pessimal coincide.
      EXPECT_EQ(ProposerOptimal(inst, all, Orientation::kMenPropose),
                ProposerOptimal(inst, all, Orientation::kWomenPropose));
    }
  }
}

}  // namespace
}  // namespace stablematch
