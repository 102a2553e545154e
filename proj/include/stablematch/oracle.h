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

// Exhaustive ground truth for small instances. Nothing here calls the
// engines or the analysis module.

#ifndef STABLEMATCH_ORACLE_H_
#define STABLEMATCH_ORACLE_H_

#include <span>
#include <vector>

#include "stablematch/gsa.h"
#include "stablematch/prefs.h"

namespace stablematch {

inline constexpr int kDefaultOracleCap = 8;

// Every stable perfect matching of `inst`, ordered lexicographically by the
// women assigned to men in ascending man id. Checks all n! perfect matchings;
// throws SizeError when n > limit_n.
std::vector<Matching> EnumerateStable(const PreferenceInstance& inst,
                                      int limit_n = kDefaultOracleCap);

// The matching in which every proposer's partner rank is minimal over
// `matchings`. Throws InvalidArgument when `matchings` is empty or no single
// matching attains every proposer's minimum.
Matching ProposerOptimal(const PreferenceInstance& inst,
                         std::span<const Matching> matchings,
                         Orientation orientation = Orientation::kMenPropose);

}  // namespace stablematch

#endif  // STABLEMATCH_ORACLE_H_
