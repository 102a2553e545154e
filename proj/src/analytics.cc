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

#include "stablematch/analytics.h"

#include <sstream>

#include "stablematch/errors.h"
#include "stablematch/generator.h"
#include "stablematch/gsa.h"
#include "stablematch/modgsa.h"

namespace stablematch {
namespace {

void RequireAtLeastTwo(std::int64_t n) {
  if (n < 2) {
    throw SizeError("step formula needs n >= 2, got " + std::to_string(n));
  }
}

std::uint64_t TrialProposals(const ModGsaResult& result) {
  std::uint64_t total = 0;
  for (const DeletionTrial& trial : result.trials) {
    total += trial.counters.proposals;
  }
  return total;
}

}  // namespace

std::string_view BandName(Band band) {
  switch (band) {
    case Band::kLow:
      return "LOW";
    case Band::kIntermediate:
      return "INTERMEDIATE";
    case Band::kHigh:
      return "HIGH";
  }
  return "?";
}

int CeilLog2(std::int64_t n) {
  if (n < 1) throw SizeError("log2 needs n >= 1");
  int k = 0;
  while ((std::int64_t{1} << k) < n) ++k;
  return k;
}

std::int64_t StepsGsa(std::int64_t n) { return n * n; }

std::int64_t StepsModGsa(std::int64_t n) {
  RequireAtLeastTwo(n);
  return (n - 1) * (n - 1) * n;
}

std::int64_t StepsModPgsa(std::int64_t n) {
  RequireAtLeastTwo(n);
  // The log term takes n, not n-1, and rounds up.
  return ((n - 1) * (n - 1) - 2 * (n - 1) + CeilLog2(n)) * n;
}

Band EnhancementBand(std::int64_t n) {
  if (n < 3) {
    throw SizeError("enhancement band defined from n = 3, got " +
                    std::to_string(n));
  }
  if (n <= 5) return Band::kLow;
  if (n <= 10) return Band::kIntermediate;
  return Band::kHigh;
}

std::vector<BenchRow> BenchTable(int n_min, int n_max, BenchMode mode,
                                 std::uint64_t seed) {
  if (n_min < 3 || n_max < n_min) {
    throw InvalidArgument("bench range must satisfy 3 <= n_min <= n_max, got " +
                          std::to_string(n_min) + ".." + std::to_string(n_max));
  }
  std::vector<BenchRow> rows;
  for (int n = n_min; n <= n_max; ++n) {
    BenchRow row{n,
                 StepsGsa(n),
                 StepsModGsa(n),
                 StepsModPgsa(n),
                 EnhancementBand(n),
                 std::nullopt};
    if (mode != BenchMode::kAnalytic) {
      const PreferenceInstance inst =
          WorstCaseInstance(n, seed + static_cast<std::uint64_t>(n)).instance;
      EmpiricalSteps steps;
      steps.gsa = GsaSolve(inst, Orientation::kMenPropose).counters.proposals;
      steps.mod_gsa = TrialProposals(ModGsa(inst));
      steps.mod_pgsa = TrialProposals(ModPgsa(inst));
      row.empirical = steps;
    }
    rows.push_back(row);
  }
  return rows;
}

std::string BenchCsv(std::span<const BenchRow> rows, BenchMode mode) {
  const bool empirical = mode != BenchMode::kAnalytic;
  std::ostringstream out;
  out << "n,gsa_steps,mod_gsa_steps,mod_pgsa_steps,band";
  if (empirical) out << ",gsa_empirical,mod_gsa_empirical,mod_pgsa_empirical";
  out << '\n';
  for (const BenchRow& row : rows) {
    out << row.n << ',' << row.gsa_steps << ',' << row.mod_gsa_steps << ','
        << row.mod_pgsa_steps << ',' << BandName(row.band);
    if (empirical) {
      if (!row.empirical) {
        throw InvalidArgument("row n=" + std::to_string(row.n) +
                              " has no empirical columns");
      }
      out << ',' << row.empirical->gsa << ',' << row.empirical->mod_gsa << ','
          << row.empirical->mod_pgsa;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace stablematch
