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

#ifndef STABLEMATCH_GENERATOR_H_
#define STABLEMATCH_GENERATOR_H_

#include <cstdint>
#include <random>

#include "stablematch/prefs.h"

namespace stablematch {

inline constexpr std::uint64_t kDefaultWorstCaseAttempts = 1'000'000;

// Every list an independent uniform permutation; ids 1..n.
PreferenceInstance RandomInstance(int n, std::mt19937_64& rng);
PreferenceInstance RandomInstance(int n, std::uint64_t seed);

struct WorstCaseSample {
  PreferenceInstance instance;
  // Random instances drawn, including the accepted one.
  std::uint64_t attempts = 0;
};

// Draws random instances until one has a unique stable matching in which no
// man gets his first choice. Throws SizeError for n < 2 (no such instance
// exists below 3) and GeneratorExhausted after max_attempts failures.
WorstCaseSample WorstCaseInstance(
    int n, std::uint64_t seed,
    std::uint64_t max_attempts = kDefaultWorstCaseAttempts);

}  // namespace stablematch

#endif  // STABLEMATCH_GENERATOR_H_
