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

#include <string>
#include <vector>

#include "stablematch/errors.h"

namespace stablematch {
namespace {

void RequireOver(const PreferenceInstance& inst, const Matching& matching) {
  for (const Couple& c : matching.couples()) {
    if (!inst.contains(Side::kMen, c.man) ||
        !inst.contains(Side::kWomen, c.woman)) {
      throw InvalidArgument("couple " + ToString(c) +
                            " is not part of the instance");
    }
  }
}

}  // namespace

bool IsBlocking(const PreferenceInstance& inst, const Matching& matching,
                Id man, Id woman) {
  const std::optional<Id> his = matching.woman_of(man);
  const std::optional<Id> hers = matching.man_of(woman);
  if (!his || !hers) {
    throw InvalidArgument("M" + std::to_string(man) + " and W" +
                          std::to_string(woman) + " must both be matched");
  }
  if (!inst.contains(Side::kMen, man) || !inst.contains(Side::kWomen, woman)) {
    throw InvalidArgument("M" + std::to_string(man) + " or W" +
                          std::to_string(woman) + " is not in the instance");
  }
  if (*his == woman) return false;
  return inst.prefers(Side::kMen, man, woman, *his) &&
         inst.prefers(Side::kWomen, woman, man, *hers);
}

StabilityVerdict IsStable(const PreferenceInstance& inst,
                          const Matching& matching) {
  RequireOver(inst, matching);
  const int n = inst.size();
  // Partner index per participant index, -1 when unmatched.
  std::vector<int> wife(n, -1);
  std::vector<int> husband(n, -1);
  for (const Couple& c : matching.couples()) {
    const int m = inst.index_of(Side::kMen, c.man);
    const int w = inst.index_of(Side::kWomen, c.woman);
    wife[m] = w;
    husband[w] = m;
  }
  // Indices follow ascending ids, so the first hit is the smallest witness.
  for (int m = 0; m < n; ++m) {
    if (wife[m] < 0) continue;
    const int his_rank = inst.position(Side::kMen, m, wife[m]);
    for (int w = 0; w < n; ++w) {
      if (husband[w] < 0 || w == wife[m]) continue;
      if (inst.position(Side::kMen, m, w) < his_rank &&
          inst.position(Side::kWomen, w, m) <
              inst.position(Side::kWomen, w, husband[w])) {
        return {false,
                Couple{inst.id_at(Side::kMen, m), inst.id_at(Side::kWomen, w)}};
      }
    }
  }
  return {};
}

Score ComputeScore(const PreferenceInstance& original, const Matching& matching,
                   Orientation orientation) {
  RequireOver(original, matching);
  Score score;
  for (const Couple& c : matching.couples()) {
    const Rank rank = orientation == Orientation::kMenPropose
                          ? original.rank_of(Side::kMen, c.man, c.woman)
                          : original.rank_of(Side::kWomen, c.woman, c.man);
    score.value += rank.value;
  }
  return score;
}

WorstCaseReport ClassifyWorstCase(const PreferenceInstance& inst) {
  if (inst.empty()) throw SizeError("worst-case classification needs n >= 1");
  const Matching men = GsaSolve(inst, Orientation::kMenPropose).matching;
  const Matching women = GsaSolve(inst, Orientation::kWomenPropose).matching;

  WorstCaseReport report;
  report.unique_stable = men == women;
  report.man_pessimal = report.unique_stable;
  report.no_first_choice = true;
  for (const Couple& c : men.couples()) {
    if (inst.rank_of(Side::kMen, c.man, c.woman).value == 1) {
      report.no_first_choice = false;
    }
  }
  report.proposer_score = ComputeScore(inst, men, Orientation::kMenPropose);
  return report;
}

}  // namespace stablematch
