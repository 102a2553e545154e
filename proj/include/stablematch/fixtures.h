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

#ifndef STABLEMATCH_FIXTURES_H_
#define STABLEMATCH_FIXTURES_H_

#include <string_view>
#include <vector>

#include "stablematch/prefs.h"

namespace stablematch {

// Four men and four women whose man-proposing outcome gives every man his
// second choice and every woman her first:
//
//   M1: W1 W2 W3 W4    W1: M2 M1 M3 M4
//   M2: W3 W1 W2 W4    W2: M1 M2 M3 M4
//   M3: W2 W4 W3 W1    W3: M4 M3 M1 M2
//   M4: W2 W3 W4 W1    W4: M3 M2 M1 M4
PreferenceInstance WorstCase4x4();

// Two men, two women, two stable matchings:
//   M1: W1 W2   W1: M2 M1
//   M2: W2 W1   W2: M1 M2
PreferenceInstance TwoStable2x2();

// Name used by the command-line --fixture flag.
inline constexpr std::string_view kWorstCase4x4Name = "paper-4x4";

std::vector<std::string_view> FixtureNames();

// Throws InvalidArgument for an unknown name.
PreferenceInstance FixtureByName(std::string_view name);

}  // namespace stablematch

#endif  // STABLEMATCH_FIXTURES_H_
