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

#include "stablematch/generator.h"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "stablematch/analysis.h"
#include "stablematch/errors.h"

namespace stablematch {

PreferenceInstance RandomInstance(int n, std::mt19937_64& rng) {
  if (n < 0) throw SizeError("n must be non-negative");
  auto side = [&] {
    std::vector<std::vector<Id>> lists(n);
    for (auto& list : lists) {
      list.resize(n);
      std::iota(list.begin(), list.end(), 1);
      std::shuffle(list.begin(), list.end(), rng);
    }
    return lists;
  };
  std::vector<std::vector<Id>> men = side();
  std::vector<std::vector<Id>> women = side();
  return PreferenceInstance::FromLists(men, women);
}

PreferenceInstance RandomInstance(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return RandomInstance(n, rng);
}

WorstCaseSample WorstCaseInstance(int n, std::uint64_t seed,
                                  std::uint64_t max_attempts) {
  if (n < 2) {
    throw SizeError("worst-case generation needs n >= 2, got " +
                    std::to_string(n));
  }
  std::mt19937_64 rng(seed);
  for (std::uint64_t attempt = 1; attempt <= max_attempts; ++attempt) {
    PreferenceInstance inst = RandomInstance(n, rng);
    const WorstCaseReport report = ClassifyWorstCase(inst);
    if (report.unique_stable && report.no_first_choice) {
      return {std::move(inst), attempt};
    }
  }
  throw GeneratorExhausted(
      max_attempts, "no worst-case instance of size " + std::to_string(n) +
                        " after " + std::to_string(max_attempts) + " attempts");
}

}  // namespace stablematch
