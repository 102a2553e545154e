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

// Divide-and-conquer Gale-Shapley.
//
// The men are split by index into halves of ceil(n/2) and floor(n/2), the
// women likewise, and each half-instance (lists restricted to the half,
// order kept) is solved recursively. Sibling halves are independent and may
// run on separate threads.
//
// Merging two children is deferred acceptance on the combined instance in
// which every proposal a man already made inside his subtree is replayed
// instead of paid for again. Proposals made in a subtree can be invalidated
// one level up: a woman may have rejected someone on behalf of a man who, in
// the combined lists, prefers a woman from the other half and leaves her.
// Replaying the histories under the combined lists keeps exactly the valid
// part, so every merge is an ordinary deferred-acceptance run and the final
// matching is the man-optimal one, identical to GsaSolve with men proposing.
//
// Counters report distinct proposal events: a man is charged once per woman
// no matter how many levels replay that proposal.

#ifndef STABLEMATCH_PARGSA_H_
#define STABLEMATCH_PARGSA_H_

#include <functional>
#include <map>
#include <vector>

#include "stablematch/gsa.h"
#include "stablematch/prefs.h"

namespace stablematch {

// Man id -> ascending ids of the women he has proposed to.
using ProposalHistories = std::map<Id, std::vector<Id>>;

struct ParallelOptions {
  // Run sibling subproblems on separate threads.
  bool concurrent = true;
  // Subproblems with fewer men than this are solved on the calling thread.
  int min_concurrent_size = 16;
  // Called with every merge node's instance and matching. May be invoked from
  // several threads at once.
  std::function<void(const PreferenceInstance&, const Matching&)> on_merge;
};

struct ParallelSolveResult {
  Matching matching;
  TraceCounters counters;
  ProposalHistories histories;
};

// Requires n >= 1 (n = 0 returns the empty matching).
ParallelSolveResult PargsaSolve(const PreferenceInstance& inst,
                                const ParallelOptions& options = {});

// Merges the stable matchings of two disjoint halves of `combined`.
// `histories` must cover every man of `combined` and contain his current
// partner; otherwise throws StateError. The returned counters hold only the
// proposals made by the merge itself.
ParallelSolveResult MergeMatchings(const PreferenceInstance& combined,
                                   const Matching& left, const Matching& right,
                                   const ProposalHistories& histories);

}  // namespace stablematch

#endif  // STABLEMATCH_PARGSA_H_
