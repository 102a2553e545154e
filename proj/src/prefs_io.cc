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

#include "stablematch/prefs_io.h"

#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>
#include <vector>

#include "stablematch/errors.h"

namespace stablematch {
namespace {

struct Line {
  int number = 0;
  std::vector<long long> values;
};

// Splits into non-blank, non-comment lines of integers.
std::vector<Line> Tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  while (!text.empty()) {
    const std::size_t end = text.find('\n');
    std::string_view raw = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view()
                                         : text.substr(end + 1);
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);

    const std::size_t first = raw.find_first_not_of(" \t");
    if (first == std::string_view::npos || raw[first] == '#') continue;

    Line line{number, {}};
    std::size_t i = first;
    while (i < raw.size()) {
      if (raw[i] == ' ' || raw[i] == '\t') {
        ++i;
        continue;
      }
      long long value = 0;
      auto [ptr, ec] =
          std::from_chars(raw.data() + i, raw.data() + raw.size(), value);
      const std::size_t stop = static_cast<std::size_t>(ptr - raw.data());
      if (ec != std::errc() ||
          (stop < raw.size() && raw[stop] != ' ' && raw[stop] != '\t')) {
        throw ParseError("line " + std::to_string(number) +
                         ": expected an integer near '" +
                         std::string(raw.substr(i, 12)) + "'");
      }
      line.values.push_back(value);
      i = stop;
    }
    lines.push_back(std::move(line));
  }
  return lines;
}

Id ToId(long long value, int line) {
  if (value < 1 || value > std::numeric_limits<Id>::max()) {
    throw ParseError("line " + std::to_string(line) + ": id " +
                     std::to_string(value) + " out of range");
  }
  return static_cast<Id>(value);
}

}  // namespace

PreferenceInstance ParseInstance(std::string_view text) {
  const std::vector<Line> lines = Tokenize(text);
  if (lines.empty()) throw ParseError("empty input, expected n");
  if (lines[0].values.size() != 1) {
    throw ParseError("line " + std::to_string(lines[0].number) +
                     ": expected a single integer n");
  }
  const long long n = lines[0].values[0];
  if (n < 1) {
    throw ParseError("n must be at least 1, got " + std::to_string(n));
  }
  if (static_cast<long long>(lines.size()) - 1 != 2 * n) {
    throw ParseError("expected " + std::to_string(2 * n) +
                     " preference lines after n, got " +
                     std::to_string(lines.size() - 1));
  }
  std::vector<std::vector<Id>> men(n);
  std::vector<std::vector<Id>> women(n);
  for (long long row = 0; row < 2 * n; ++row) {
    const Line& line = lines[row + 1];
    if (static_cast<long long>(line.values.size()) != n) {
      throw ParseError("line " + std::to_string(line.number) + ": expected " +
                       std::to_string(n) + " ids, got " +
                       std::to_string(line.values.size()));
    }
    auto& target = row < n ? men[row] : women[row - n];
    for (long long v : line.values) target.push_back(ToId(v, line.number));
  }
  try {
    return PreferenceInstance::FromLists(men, women);
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

std::string SerializeInstance(const PreferenceInstance& inst) {
  const int n = inst.size();
  for (Side side : {Side::kMen, Side::kWomen}) {
    for (int i = 0; i < n; ++i) {
      if (inst.id_at(side, i) != i + 1) {
        throw InvalidArgument(
            "only instances with ids 1..n can be serialized; relabel first");
      }
    }
  }
  std::ostringstream out;
  out << n << '\n';
  for (Side side : {Side::kMen, Side::kWomen}) {
    for (Id owner : inst.ids(side)) {
      bool first = true;
      for (Id partner : inst.prefs(side, owner)) {
        if (!first) out << ' ';
        out << partner;
        first = false;
      }
      out << '\n';
    }
  }
  return out.str();
}

Matching ParseMatching(std::string_view text) {
  std::vector<Couple> couples;
  for (const Line& line : Tokenize(text)) {
    if (line.values.size() != 2) {
      throw ParseError("line " + std::to_string(line.number) +
                       ": expected 'man_id woman_id'");
    }
    couples.push_back(
        {ToId(line.values[0], line.number), ToId(line.values[1], line.number)});
  }
  try {
    return Matching(std::move(couples));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

std::string SerializeMatching(const Matching& matching) {
  std::ostringstream out;
  for (const Couple& c : matching.couples()) {
    out << c.man << ' ' << c.woman << '\n';
  }
  return out.str();
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace stablematch
