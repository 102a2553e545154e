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

#include "test_util.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <stdexcept>

#include "stablematch/generator.h"

namespace stablematch::testing {

Matching Couples(std::initializer_list<std::pair<Id, Id>> couples) {
  std::vector<Couple> out;
  for (const auto& [man, woman] : couples) out.push_back({man, woman});
  return Matching(std::move(out));
}

std::vector<PreferenceInstance> RandomSuite(int count, int n_min, int n_max,
                                            std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size(n_min, n_max);
  std::vector<PreferenceInstance> suite;
  suite.reserve(count);
  for (int i = 0; i < count; ++i)
    suite.push_back(RandomInstance(size(rng), rng));
  return suite;
}

CommandResult RunCommand(const std::string& command) {
  CommandResult result;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) throw std::runtime_error("popen failed: " + command);
  std::array<char, 4096> buffer;
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.out.append(buffer.data(), got);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string WriteTempFile(const std::string& name,
                          const std::string& contents) {
  const std::filesystem::path dir =
      std::filesystem::temp_directory_path() / "stablematch_tests";
  std::filesystem::create_directories(dir);
  const std::filesystem::path path = dir / name;
  std::ofstream(path, std::ios::binary) << contents;
  return path.string();
}

}  // namespace stablematch::testing
