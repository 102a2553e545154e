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

// Closed-form step counts and the comparison table built from them.
//
// One step is one proposal. The analytic columns are worst-case envelopes:
//
//   GSA        n^2
//   MOD_GSA    (n-1)^2 * n
//   MOD_P-GSA  ((n-1)^2 - 2(n-1) + ceil(log2 n)) * n
//
// Empirical columns count proposals of real runs and are never expected to
// equal the analytic ones.

#ifndef STABLEMATCH_ANALYTICS_H_
#define STABLEMATCH_ANALYTICS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace stablematch {

enum class Band { kLow, kIntermediate, kHigh };

std::string_view BandName(Band band);

// Smallest k with 2^k >= n. Requires n >= 1.
int CeilLog2(std::int64_t n);

std::int64_t StepsGsa(std::int64_t n);
// Both throw SizeError for n < 2.
std::int64_t StepsModGsa(std::int64_t n);
std::int64_t StepsModPgsa(std::int64_t n);

// LOW for 3..5, INTERMEDIATE for 6..10, HIGH from 11. Throws SizeError for
// n < 3.
Band EnhancementBand(std::int64_t n);

enum class BenchMode { kAnalytic, kEmpirical, kBoth };

struct EmpiricalSteps {
  // Man-proposing run on the instance.
  std::uint64_t gsa = 0;
  // Sum over the n deletion trials (baseline excluded), per engine.
  std::uint64_t mod_gsa = 0;
  std::uint64_t mod_pgsa = 0;
};

struct BenchRow {
  int n = 0;
  std::int64_t gsa_steps = 0;
  std::int64_t mod_gsa_steps = 0;
  std::int64_t mod_pgsa_steps = 0;
  Band band = Band::kLow;
  std::optional<EmpiricalSteps> empirical;
};

// Rows for n_min..n_max ascending. Empirical modes run both MOD variants on a
// generated worst-case instance per n (seeded with seed + n). Throws
// InvalidArgument unless 3 <= n_min <= n_max.
std::vector<BenchRow> BenchTable(int n_min, int n_max, BenchMode mode,
                                 std::uint64_t seed = 0);

// Header "n,gsa_steps,mod_gsa_steps,mod_pgsa_steps,band", plus
// ",gsa_empirical,mod_gsa_empirical,mod_pgsa_empirical" unless analytic.
// LF line endings.
std::string BenchCsv(std::span<const BenchRow> rows, BenchMode mode);

}  // namespace stablematch

#endif  // STABLEMATCH_ANALYTICS_H_
