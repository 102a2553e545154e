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

#include "stablematch/fixtures.h"

#include <string>

#include "stablematch/errors.h"

namespace stablematch {

PreferenceInstance WorstCase4x4() {
  return PreferenceInstance::FromLists(
      {{1, 2, 3, 4}, {3, 1, 2, 4}, {2, 4, 3, 1}, {2, 3, 4, 1}},
      {{2, 1, 3, 4}, {1, 2, 3, 4}, {4, 3, 1, 2}, {3, 2, 1, 4}});
}

PreferenceInstance TwoStable2x2() {
  return PreferenceInstance::FromLists({{1, 2}, {2, 1}}, {{2, 1}, {1, 2}});
}

std::vector<std::string_view> FixtureNames() { return {kWorstCase4x4Name}; }

PreferenceInstance FixtureByName(std::string_view name) {
  if (name == kWorstCase4x4Name) return WorstCase4x4();
  throw InvalidArgument("unknown fixture '" + std::string(name) + "'");
}

}  // namespace stablematch
