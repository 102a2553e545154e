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
#include <cassert>
#include <future>
#include <span>
#include <string>
#include <utility>

#include "stablematch/errors.h"

namespace stablematch {
namespace {

ParallelSolveResult SolveNode(const PreferenceInstance& inst,
                              const ParallelOptions& options) {
  const int n = inst.size();
  if (n <= 1) {
    EngineState state = EngineState::Fresh(inst, Orientation::kMenPropose);
    SolveResult leaf = GsaResume(inst, state);
    ParallelSolveResult out{std::move(leaf.matching), leaf.counters, {}};
    for (Id man : inst.men_ids()) out.histories[man] = state.ProposedTo(man);
    return out;
  }

  const std::size_t half = static_cast<std::size_t>(n + 1) / 2;
  std::span<const Id> men = inst.men_ids();
  std::span<const Id> women = inst.women_ids();
  const PreferenceInstance left_inst =
      inst.Restrict(men.first(half), women.first(half));
  const PreferenceInstance right_inst =
      inst.Restrict(men.subspan(half), women.subspan(half));

  ParallelSolveResult left;
  ParallelSolveResult right;
  if (options.concurrent && n >= options.min_concurrent_size) {
    auto pending = std::async(std::launch::async,
                              [&] { return SolveNode(left_inst, options); });
    right = SolveNode(right_inst, options);
    left = pending.get();
  } else {
    left = SolveNode(left_inst, options);
    right = SolveNode(right_inst, options);
  }

  ProposalHistories histories = std::move(left.histories);
  histories.merge(right.histories);
  ParallelSolveResult merged =
      MergeMatchings(inst, left.matching, right.matching, histories);
  merged.counters += left.counters;
  merged.counters += right.counters;
  if (options.on_merge) options.on_merge(inst, merged.matching);
  return merged;
}

}  // namespace

ParallelSolveResult MergeMatchings(const PreferenceInstance& combined,
                                   const Matching& left, const Matching& right,
                                   const ProposalHistories& histories) {
  std::vector<Couple> couples(left.couples().begin(), left.couples().end());
  couples.insert(couples.end(), right.couples().begin(), right.couples().end());
  const Matching both(std::move(couples));
  if (!both.IsOver(combined) ||
      both.size() != static_cast<std::size_t>(combined.size())) {
    throw InvalidArgument("children must partition the combined instance");
  }

  EngineState state = EngineState::Fresh(combined, Orientation::kMenPropose);
  for (const auto& [man, women] : histories) {
    if (!combined.contains(Side::kMen, man)) {
      throw StateError("history for unknown man M" + std::to_string(man));
    }
    for (Id woman : women) {
      if (!combined.contains(Side::kWomen, woman)) {
        throw StateError("history of M" + std::to_string(man) +
                         " names unknown woman W" + std::to_string(woman));
      }
      state.MarkProposed(man, woman);
    }
  }
  for (const Couple& c : both.couples()) {
    auto it = histories.find(c.man);
    if (it == histories.end() || std::find(it->second.begin(), it->second.end(),
                                           c.woman) == it->second.end()) {
      throw StateError("history of M" + std::to_string(c.man) +
                       " omits his partner W" + std::to_string(c.woman));
    }
  }

  SolveResult solved = GsaResume(combined, state);
  ParallelSolveResult out{std::move(solved.matching), solved.counters, {}};
  for (Id man : combined.men_ids()) {
    out.histories[man] = state.ProposedTo(man);
#ifndef NDEBUG
    auto before = histories.find(man);
    if (before != histories.end()) {
      for (Id woman : before->second) {
        assert(std::binary_search(out.histories[man].begin(),
                                  out.histories[man].end(), woman));
      }
    }
#endif
  }
  return out;
}

ParallelSolveResult PargsaSolve(const PreferenceInstance& inst,
                                const ParallelOptions& options) {
  return SolveNode(inst, options);
}

}  // namespace stablematch
