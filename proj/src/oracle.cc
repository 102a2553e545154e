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

#include "stablematch/oracle.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "stablematch/errors.h"

namespace stablematch {
namespace {

// wife[m] is the woman index of man index m.
bool HasBlockingPair(const PreferenceInstance& inst,
                     const std::vector<int>& wife) {
  const int n = inst.size();
  std::vector<int> husband(n);
  for (int m = 0; m < n; ++m) husband[wife[m]] = m;
  for (int m = 0; m < n; ++m) {
    std::span<const Id> list =
        inst.prefs(Side::kMen, inst.id_at(Side::kMen, m));
    const Id current = inst.id_at(Side::kWomen, wife[m]);
    // Women he likes better than his wife, best first.
    for (Id woman : list) {
      if (woman == current) break;
      const int w = inst.index_of(Side::kWomen, woman);
      const Id rival = inst.id_at(Side::kMen, husband[w]);
      for (Id man : inst.prefs(Side::kWomen, woman)) {
        if (man == rival) break;
        if (man == inst.id_at(Side::kMen, m)) return true;
      }
    }
  }
  return false;
}

}  // namespace

std::vector<Matching> EnumerateStable(const PreferenceInstance& inst,
                                      int limit_n) {
  const int n = inst.size();
  if (n > limit_n) {
    throw SizeError("oracle infeasible at this size: n=" + std::to_string(n) +
                    " exceeds cap " + std::to_string(limit_n));
  }
  std::vector<int> wife(n);
  std::iota(wife.begin(), wife.end(), 0);
  std::vector<Matching> stable;
  do {
    if (HasBlockingPair(inst, wife)) continue;
    std::vector<Couple> couples;
    for (int m = 0; m < n; ++m) {
      couples.push_back(
          {inst.id_at(Side::kMen, m), inst.id_at(Side::kWomen, wife[m])});
    }
    stable.emplace_back(std::move(couples));
  } while (std::next_permutation(wife.begin(), wife.end()));
  return stable;
}

Matching ProposerOptimal(const PreferenceInstance& inst,
                         std::span<const Matching> matchings,
                         Orientation orientation) {
  if (matchings.empty()) {
    throw InvalidArgument("proposer-optimal of an empty set is undefined");
  }
  const Side side = ProposerSide(orientation);
  auto rank_in = [&](const Matching& matching, Id proposer) {
    const std::optional<Id> partner = side == Side::kMen
                                          ? matching.woman_of(proposer)
                                          : matching.man_of(proposer);
    if (!partner) {
      throw InvalidArgument("matching " + ToString(matching) +
                            " leaves a proposer single");
    }
    return inst.rank_of(side, proposer, *partner);
  };

  for (const Matching& candidate : matchings) {
    bool best_for_all = true;
    for (Id proposer : inst.ids(side)) {
      const Rank mine = rank_in(candidate, proposer);
      for (const Matching& other : matchings) {
        if (rank_in(other, proposer) < mine) {
          best_for_all = false;
          break;
        }
      }
      if (!best_for_all) break;
    }
    if (best_for_all) return candidate;
  }
  throw InvalidArgument("no matching is optimal for every proposer");
}

}  // namespace stablematch
