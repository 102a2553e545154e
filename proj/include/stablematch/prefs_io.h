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

// Text formats.
//
// Instance file:
//
//   # optional comment lines
//   n
//   <n lines: man i's list of woman ids, best first>
//   <n lines: woman j's list of man ids, best first>
//
// Entries are separated by single spaces on output; any run of blanks is
// accepted on input. Blank lines are ignored.
//
// Matching file: one "man_id woman_id" line per couple, '#' comments allowed.

#ifndef STABLEMATCH_PREFS_IO_H_
#define STABLEMATCH_PREFS_IO_H_

#include <string>
#include <string_view>

#include "stablematch/prefs.h"

namespace stablematch {

// Throws ParseError. The resulting instance uses ids 1..n on both sides.
PreferenceInstance ParseInstance(std::string_view text);

// Only instances whose ids are exactly 1..n on both sides can be written;
// others throw InvalidArgument.
std::string SerializeInstance(const PreferenceInstance& inst);

// Throws ParseError on malformed lines or on a non-1:1 couple set.
Matching ParseMatching(std::string_view text);

std::string SerializeMatching(const Matching& matching);

// Reads a whole file. Throws ParseError if it cannot be opened.
std::string ReadFile(const std::string& path);

}  // namespace stablematch

#endif  // STABLEMATCH_PREFS_IO_H_
