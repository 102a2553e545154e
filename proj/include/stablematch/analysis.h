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

// Stability checks, scores and worst-case classification.

#ifndef STABLEMATCH_ANALYSIS_H_
#define STABLEMATCH_ANALYSIS_H_

#include <compare>
#include <cstdint>
#include <optional>

#include "stablematch/gsa.h"
#include "stablematch/prefs.h"

namespace stablematch {

// Sum of the proposers' partner ranks. Lower means happier proposers.
struct Score {
  std::int64_t value = 0;

  friend auto operator<=>(const Score&, const Score&) = default;
};

// True iff `man` and `woman` each prefer the other to their partners in
// `matching`. Both must be matched (to anyone) and belong to `inst`; throws
// InvalidArgument otherwise.
bool IsBlocking(const PreferenceInstance& inst, const Matching& matching,
                Id man, Id woman);

struct StabilityVerdict {
  bool stable = true;
  // Smallest blocking couple by (man, woman) when unstable.
  std::optional<Couple> witness;

  explicit operator bool() const { return stable; }
};

// Only matched participants are considered, so matchings of a subset are
// judged on that subset. Throws InvalidArgument if the matching names an id
// outside `inst`.
StabilityVerdict IsStable(const PreferenceInstance& inst,
                          const Matching& matching);

// Ranks are read from `original`, the full instance, even when `matching`
// comes from a reduced one.
Score ComputeScore(const PreferenceInstance& original, const Matching& matching,
                   Orientation orientation);

struct WorstCaseReport {
  // Man- and woman-proposing runs return the same matching.
  bool unique_stable = false;
  // Same value as unique_stable: the man-optimal matching is also the
  // woman-optimal one, hence man-pessimal.
  bool man_pessimal = false;
  // No man gets his first choice in the man-proposing matching.
  bool no_first_choice = false;
  // Men's score of the man-proposing matching.
  Score proposer_score;
};

// Requires n >= 1.
WorstCaseReport ClassifyWorstCase(const PreferenceInstance& inst);

}  // namespace stablematch

#endif  // STABLEMATCH_ANALYSIS_H_
