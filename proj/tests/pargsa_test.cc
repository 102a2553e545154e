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

#include "stablematch/pargsa.h"

#include <algorithm>
#include <mutex>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "stablematch/analysis.h"
#include "stablematch/errors.h"
#include "stablematch/fixtures.h"
#include "stablematch/prefs_io.h"
#include "test_util.h"

namespace stablematch {
namespace {

using testing::Couples;
using ::testing::ElementsAre;

TEST(PargsaSolveTest, WorstCase) {
  const ParallelSolveResult result = PargsaSolve(WorstCase4x4());
  EXPECT_EQ(result.matching, Couples({{1, 2}, {2, 1}, {3, 4}, {4, 3}}));
  // Each man has at least proposed down to his partner.
  EXPECT_THAT(result.histories.at(3), ::testing::IsSupersetOf({2, 4}));
}

TEST(PargsaSolveTest, TinyInstances) {
  EXPECT_TRUE(PargsaSolve(PreferenceInstance()).matching.empty());
  const ParallelSolveResult one = PargsaSolve(ParseInstance("1\n1\n1\n"));
  EXPECT_EQ(one.matching, Couples({{1, 1}}));
  EXPECT_EQ(one.counters.proposals, 1u);
  EXPECT_EQ(PargsaSolve(TwoStable2x2()).matching, Couples({{1, 1}, {2, 2}}));
}

TEST(MergeMatchingsTest, WorstCaseHalves) {
  const PreferenceInstance inst = WorstCase4x4();
  // Men 1-2 with women 1-2 settle as {(1,2),(2,1)} after M1 tries W1; the
  // other half settles on first choices.
  const ParallelSolveResult merged =
      MergeMatchings(inst, Couples({{1, 2}, {2, 1}}), Couples({{3, 4}, {4, 3}}),
                     {{1, {1, 2}}, {2, {1}}, {3, {4}}, {4, {3}}});
  EXPECT_EQ(merged.matching, Couples({{1, 2}, {2, 1}, {3, 4}, {4, 3}}));
  // M2 tries W3, M3 and M4 try W2.
  EXPECT_EQ(merged.counters.proposals, 3u);
  EXPECT_THAT(merged.histories.at(2), ElementsAre(1, 3));
  EXPECT_THAT(merged.histories.at(4), ElementsAre(2, 3));
}

TEST(MergeMatchingsTest, FirstChoicesCostNothing) {
  const ParallelSolveResult merged =
      MergeMatchings(TwoStable2x2(), Couples({{1, 1}}), Couples({{2, 2}}),
                     {{1, {1}}, {2, {2}}});
  EXPECT_EQ(merged.matching, Couples({{1, 1}, {2, 2}}));
  EXPECT_EQ(merged.counters.proposals, 0u);
}

TEST(MergeMatchingsTest, SharedTopChoiceDisplacesOne) {
  // Both men want W1, and W1 prefers M2.
  const PreferenceInstance inst =
      PreferenceInstance::FromLists({{1, 2}, {1, 2}}, {{2, 1}, {1, 2}});
  const ParallelSolveResult merged = MergeMatchings(
      inst, Couples({{1, 1}}), Couples({{2, 2}}), {{1, {1}}, {2, {2}}});
  EXPECT_EQ(merged.matching, Couples({{1, 2}, {2, 1}}));
  EXPECT_TRUE(IsStable(inst, merged.matching).stable);
  EXPECT_EQ(merged.counters.proposals, 2u);
}

TEST(MergeMatchingsTest, RejectsBadInputs) {
  const PreferenceInstance inst = TwoStable2x2();
  EXPECT_THROW(MergeMatchings(inst, Couples({{1, 2}}), Couples({{2, 2}}),
                              {{1, {2}}, {2, {2}}}),
               InvalidArgument);
  EXPECT_THROW(MergeMatchings(inst, Couples({{1, 1}}), Matching(), {{1, {1}}}),
               InvalidArgument);
  EXPECT_THROW(MergeMatchings(inst, Couples({{1, 1}}), Couples({{2, 2}}),
                              {{1, {1}}, {2, {1}}}),
               StateError);
  EXPECT_THROW(
      MergeMatchings(inst, Couples({{1, 1}}), Couples({{2, 2}}), {{1, {1}}}),
      StateError);
  EXPECT_THROW(MergeMatchings(inst, Couples({{1, 1}}), Couples({{2, 2}}),
                              {{1, {1, 7}}, {2, {2}}}),
               StateError);
}

TEST(PargsaSolveTest, EquivalentToSequentialOnRandomInstances) {
  for (const PreferenceInstance& inst :
       testing::RandomSuite(1000, 1, 64, /*seed=*/61)) {
    const SolveResult seq = GsaSolve(inst, Orientation::kMenPropose);
    const ParallelSolveResult par = PargsaSolve(inst, {.concurrent = false});
    ASSERT_EQ(par.matching, seq.matching);
    EXPECT_GE(par.counters.proposals, seq.counters.proposals);
    for (const Couple& c : par.matching.couples()) {
      // Every woman he prefers to his partner turned him down.
      for (Id woman : inst.prefs(Side::kMen, c.man)) {
        EXPECT_TRUE(std::binary_search(par.histories.at(c.man).begin(),
                                       par.histories.at(c.man).end(), woman));
        if (woman == c.woman) break;
      }
    }
  }
}

TEST(PargsaSolveTest, ConcurrentMatchesSerial) {
  for (const PreferenceInstance& inst :
       testing::RandomSuite(30, 1, 96, /*seed=*/63)) {
    const ParallelSolveResult serial = PargsaSolve(inst, {.concurrent = false});
    const ParallelSolveResult threaded =
        PargsaSolve(inst, {.concurrent = true, .min_concurrent_size = 2});
    EXPECT_EQ(threaded.matching, serial.matching);
    EXPECT_EQ(threaded.counters, serial.counters);
    EXPECT_EQ(threaded.histories, serial.histories);
  }
}

TEST(PargsaSolveTest, EveryMergeIsStable) {
  for (const PreferenceInstance& inst :
       testing::RandomSuite(20, 2, 48, /*seed=*/65)) {
    std::mutex mu;
    int merges = 0;
    bool all_stable = true;
    PargsaSolve(inst, {.concurrent = true,
                       .min_concurrent_size = 2,
                       .on_merge = [&](const PreferenceInstance& node,
                                       const Matching& m) {
                         const bool stable =
                             IsStable(node, m).stable &&
                             m.size() == static_cast<std::size_t>(node.size());
                         std::lock_guard<std::mutex> lock(mu);
                         ++merges;
                         all_stable = all_stable && stable;
                       }});
    // A binary tree over n leaves has n - 1 internal nodes.
    EXPECT_EQ(merges, inst.size() - 1);
    EXPECT_TRUE(all_stable);
  }
}

}  // namespace
}  // namespace stablematch
