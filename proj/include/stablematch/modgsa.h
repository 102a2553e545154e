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

// Pair deletion by minimum score.
//
// Solve the instance with men proposing, then for every couple of that
// baseline matching delete the couple, re-solve the (n-1)-instance and score
// the result against the original lists. The deletion with the smallest score
// is kept; ties go to the lowest deleted man id. The deleted couple is
// excluded from the final matching and no claim is made about it.

#ifndef STABLEMATCH_MODGSA_H_
#define STABLEMATCH_MODGSA_H_

#include <cstddef>
#include <vector>

#include "stablematch/analysis.h"
#include "stablematch/gsa.h"
#include "stablematch/prefs.h"

namespace stablematch {

enum class Engine { kSequential, kParallel };

struct DeletionTrial {
  Couple deleted;
  Matching matching;
  Score score;
  TraceCounters counters;
};

struct ModGsaResult {
  Matching baseline;
  Score baseline_score;
  TraceCounters baseline_counters;
  // One per baseline couple, in baseline order (ascending man id).
  std::vector<DeletionTrial> trials;
  std::size_t chosen_index = 0;
  // chosen().score < baseline_score.
  bool improved = false;
  // Attached, not enforced.
  WorstCaseReport worst_case;

  const DeletionTrial& chosen() const { return trials[chosen_index]; }
};

struct ModGsaOptions {
  Engine engine = Engine::kSequential;
  // Solve the n trials on separate threads.
  bool concurrent_trials = true;
  // Smaller instances run their trials on the calling thread.
  int min_concurrent_size = 16;
};

// Throws SizeError when n < 2. The baseline is always solved sequentially.
ModGsaResult ModGsa(const PreferenceInstance& inst,
                    const ModGsaOptions& options = {});

// ModGsa with every trial solved by the divide-and-conquer engine.
ModGsaResult ModPgsa(const PreferenceInstance& inst);

}  // namespace stablematch

#endif  // STABLEMATCH_MODGSA_H_
