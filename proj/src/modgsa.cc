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

#include "stablematch/modgsa.h"

#include <functional>
#include <future>
#include <string>

#include "stablematch/errors.h"
#include "stablematch/pargsa.h"

namespace stablematch {
namespace {

DeletionTrial RunTrial(const PreferenceInstance& inst, const Couple& couple,
                       Engine engine) {
  const PreferenceInstance reduced = DeletePair(inst, couple);
  DeletionTrial trial{couple, {}, {}, {}};
  if (engine == Engine::kSequential) {
    SolveResult solved = GsaSolve(reduced, Orientation::kMenPropose);
    trial.matching = std::move(solved.matching);
    trial.counters = solved.counters;
  } else {
    // Trials already run side by side; keep each tree on its own thread.
    ParallelOptions options;
    options.concurrent = false;
    ParallelSolveResult solved = PargsaSolve(reduced, options);
    trial.matching = std::move(solved.matching);
    trial.counters = solved.counters;
  }
  trial.score = ComputeScore(inst, trial.matching, Orientation::kMenPropose);
  return trial;
}

}  // namespace

ModGsaResult ModGsa(const PreferenceInstance& inst,
                    const ModGsaOptions& options) {
  if (inst.size() < 2) {
    throw SizeError("instance too small to delete a pair: n=" +
                    std::to_string(inst.size()));
  }
  ModGsaResult result;
  SolveResult baseline = GsaSolve(inst, Orientation::kMenPropose);
  result.baseline = std::move(baseline.matching);
  result.baseline_counters = baseline.counters;
  result.baseline_score =
      ComputeScore(inst, result.baseline, Orientation::kMenPropose);
  result.worst_case = ClassifyWorstCase(inst);

  const auto couples = result.baseline.couples();
  if (options.concurrent_trials && inst.size() >= options.min_concurrent_size) {
    std::vector<std::future<DeletionTrial>> pending;
    pending.reserve(couples.size());
    for (const Couple& couple : couples) {
      pending.push_back(std::async(std::launch::async, RunTrial,
                                   std::cref(inst), couple, options.engine));
    }
    for (auto& trial : pending) result.trials.push_back(trial.get());
  } else {
    for (const Couple& couple : couples) {
      result.trials.push_back(RunTrial(inst, couple, options.engine));
    }
  }

  // Strict comparison keeps the earliest, i.e. lowest man id, on ties.
  for (std::size_t i = 1; i < result.trials.size(); ++i) {
    if (result.trials[i].score < result.trials[result.chosen_index].score) {
      result.chosen_index = i;
    }
  }
  result.improved = result.chosen().score < result.baseline_score;
  return result;
}

ModGsaResult ModPgsa(const PreferenceInstance& inst) {
  return ModGsa(inst, {.engine = Engine::kParallel, .concurrent_trials = true});
}

}  // namespace stablematch
