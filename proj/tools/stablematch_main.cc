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

// stablematch: command-line front end.
//
// Exit codes: 0 success, 1 internal error, 2 parse or usage error, 3 instance
// size error, 4 unstable matching, 5 generator exhausted.

#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "stablematch/analysis.h"
#include "stablematch/analytics.h"
#include "stablematch/errors.h"
#include "stablematch/fixtures.h"
#include "stablematch/generator.h"
#include "stablematch/gsa.h"
#include "stablematch/modgsa.h"
#include "stablematch/pargsa.h"
#include "stablematch/prefs.h"
#include "stablematch/prefs_io.h"

namespace stablematch {
namespace {

constexpr int kExitInternal = 1;
constexpr int kExitParse = 2;
constexpr int kExitSize = 3;
constexpr int kExitUnstable = 4;
constexpr int kExitExhausted = 5;

class UsageError : public Error {
 public:
  using Error::Error;
};

struct InstanceSource {
  std::string file;
  std::string fixture;
};

void AddInstanceSource(CLI::App* cmd, InstanceSource& src) {
  cmd->add_option("file", src.file, "Instance file");
  cmd->add_option("--fixture", src.fixture, "Built-in instance")
      ->check(CLI::IsMember(FixtureNames()));
}

PreferenceInstance LoadInstance(const InstanceSource& src) {
  if (src.file.empty() == src.fixture.empty()) {
    throw UsageError("give exactly one of an instance file or --fixture");
  }
  if (!src.fixture.empty()) return FixtureByName(src.fixture);
  return ParseInstance(ReadFile(src.file));
}

void PrintMatching(const Matching& matching) {
  for (const Couple& c : matching.couples()) {
    std::cout << 'M' << c.man << " -> W" << c.woman << '\n';
  }
}

const std::map<std::string, Orientation> kOrientations = {
    {"men", Orientation::kMenPropose}, {"women", Orientation::kWomenPropose}};
const std::map<std::string, Engine> kEngines = {
    {"sequential", Engine::kSequential}, {"parallel", Engine::kParallel}};
const std::map<std::string, BenchMode> kBenchModes = {
    {"analytic", BenchMode::kAnalytic},
    {"empirical", BenchMode::kEmpirical},
    {"both", BenchMode::kBoth}};

int Solve(const PreferenceInstance& inst, Orientation orientation,
          Engine engine) {
  SolveResult result;
  if (engine == Engine::kSequential) {
    result = GsaSolve(inst, orientation);
  } else if (orientation == Orientation::kMenPropose) {
    ParallelSolveResult par = PargsaSolve(inst);
    result = {std::move(par.matching), par.counters};
  } else {
    // Women propose: run the men-proposing engine with the sides swapped.
    ParallelSolveResult par = PargsaSolve(Transpose(inst));
    std::vector<Couple> couples;
    for (const Couple& c : par.matching.couples()) {
      couples.push_back({c.woman, c.man});
    }
    result = {Matching(std::move(couples)), par.counters};
  }
  if (!IsStable(inst, result.matching)) {
    throw StateError("engine produced an unstable matching");
  }
  PrintMatching(result.matching);
  std::cout << "proposals: " << result.counters.proposals << '\n';
  return 0;
}

int RunModGsa(const PreferenceInstance& inst, Engine engine) {
  const ModGsaResult result = ModGsa(inst, {.engine = engine});
  if (!result.worst_case.unique_stable) {
    std::cout << "WARNING: instance is not a worst-case scenario\n";
  }
  std::cout << "baseline score=" << result.baseline_score.value
            << " proposals=" << result.baseline_counters.proposals << '\n';
  PrintMatching(result.baseline);
  std::cout << "trials:\n";
  for (const DeletionTrial& trial : result.trials) {
    std::cout << ToString(trial.deleted) << " score=" << trial.score.value
              << " proposals=" << trial.counters.proposals << '\n';
  }
  const DeletionTrial& chosen = result.chosen();
  std::cout << "chosen: " << ToString(chosen.deleted)
            << " score=" << chosen.score.value
            << " improved=" << (result.improved ? "yes" : "no") << '\n';
  std::cout << "excluded: " << ToString(chosen.deleted) << '\n';
  std::cout << "matching:\n";
  PrintMatching(chosen.matching);
  return 0;
}

Couple ParseCouple(const std::string& text) {
  const std::size_t comma = text.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument(text);
    std::size_t used = 0;
    const int man = std::stoi(text.substr(0, comma), &used);
    if (used != comma) throw std::invalid_argument(text);
    const std::string rest = text.substr(comma + 1);
    const int woman = std::stoi(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(text);
    return {man, woman};
  } catch (const std::logic_error&) {
    throw UsageError("--delete expects 'man,woman', got '" + text + "'");
  }
}

int Verify(const InstanceSource& src, const std::vector<std::string>& files,
           const std::string& deletion) {
  InstanceSource instance_src = src;
  std::string matching_file;
  if (!src.fixture.empty()) {
    if (files.size() != 1) {
      throw UsageError("with --fixture, give only the matching file");
    }
    matching_file = files[0];
  } else {
    if (files.size() != 2) {
      throw UsageError("expected an instance file and a matching file");
    }
    instance_src.file = files[0];
    matching_file = files[1];
  }
  PreferenceInstance inst = LoadInstance(instance_src);
  if (!deletion.empty()) inst = DeletePair(inst, ParseCouple(deletion));
  const Matching matching = ParseMatching(ReadFile(matching_file));
  if (!matching.IsOver(inst)) {
    throw ParseError("matching names a participant outside the instance");
  }
  const StabilityVerdict verdict = IsStable(inst, matching);
  if (verdict.stable) {
    std::cout << "STABLE\n";
    return 0;
  }
  std::cout << "UNSTABLE: blocking pair " << ToString(*verdict.witness) << '\n';
  return kExitUnstable;
}

int Generate(int n, std::uint64_t seed, const std::string& mode,
             std::uint64_t max_attempts) {
  if (mode == "random") {
    if (n < 1) throw SizeError("n must be at least 1");
    std::cout << SerializeInstance(RandomInstance(n, seed));
    return 0;
  }
  const WorstCaseSample sample = WorstCaseInstance(n, seed, max_attempts);
  std::cerr << "worst-case instance found after " << sample.attempts
            << " attempts\n";
  std::cout << SerializeInstance(sample.instance);
  return 0;
}

int Main(int argc, char** argv) {
  CLI::App app{
      "Stable matching toolkit: Gale-Shapley, pair deletion by "
      "minimum score, divide-and-conquer engine, benchmarks."};
  app.require_subcommand(1);

  InstanceSource solve_src;
  std::string orientation = "men";
  std::string engine = "sequential";
  CLI::App* solve = app.add_subcommand("solve", "Run deferred acceptance");
  AddInstanceSource(solve, solve_src);
  solve->add_option("--orientation", orientation, "Proposing side")
      ->check(CLI::IsMember({"men", "women"}));
  solve->add_option("--engine", engine, "Engine")
      ->check(CLI::IsMember({"sequential", "parallel"}));

  InstanceSource mod_src;
  std::string mod_engine = "sequential";
  CLI::App* mod = app.add_subcommand("mod-gsa", "Delete the min-score pair");
  AddInstanceSource(mod, mod_src);
  mod->add_option("--engine", mod_engine, "Engine for the deletion trials")
      ->check(CLI::IsMember({"sequential", "parallel"}));

  InstanceSource par_src;
  CLI::App* par = app.add_subcommand("par-gsa", "mod-gsa --engine parallel");
  AddInstanceSource(par, par_src);

  InstanceSource verify_src;
  std::vector<std::string> verify_files;
  std::string deletion;
  CLI::App* verify =
      app.add_subcommand("verify", "Check a matching for blocking pairs");
  verify->add_option("files", verify_files, "[instance file] matching file")
      ->required();
  verify->add_option("--fixture", verify_src.fixture, "Built-in instance")
      ->check(CLI::IsMember(FixtureNames()));
  verify->add_option("--delete", deletion,
                     "Delete couple 'man,woman' before verifying");

  int gen_n = 0;
  std::uint64_t gen_seed = 0;
  std::string gen_mode = "random";
  std::uint64_t max_attempts = kDefaultWorstCaseAttempts;
  CLI::App* gen = app.add_subcommand("gen", "Generate an instance");
  gen->add_option("n", gen_n, "Participants per side")->required();
  gen->add_option("--seed", gen_seed, "Random seed");
  gen->add_option("--mode", gen_mode, "random or worst_case")
      ->check(CLI::IsMember({"random", "worst_case"}));
  gen->add_option("--max-attempts", max_attempts,
                  "Rejection-sampling cap for worst_case");

  int n_min = 0;
  int n_max = 0;
  std::string bench_mode = "analytic";
  std::uint64_t bench_seed = 0;
  CLI::App* bench = app.add_subcommand("bench", "Step-count table as CSV");
  bench->add_option("n_min", n_min)->required();
  bench->add_option("n_max", n_max)->required();
  bench->add_option("--mode", bench_mode, "analytic, empirical or both")
      ->check(CLI::IsMember({"analytic", "empirical", "both"}));
  bench->add_option("--seed", bench_seed, "Seed for generated instances");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (*solve) {
      return Solve(LoadInstance(solve_src), kOrientations.at(orientation),
                   kEngines.at(engine));
    }
    if (*mod) return RunModGsa(LoadInstance(mod_src), kEngines.at(mod_engine));
    if (*par) return RunModGsa(LoadInstance(par_src), Engine::kParallel);
    if (*verify) return Verify(verify_src, verify_files, deletion);
    if (*gen) return Generate(gen_n, gen_seed, gen_mode, max_attempts);
    if (*bench) {
      if (n_min > n_max) {
        throw UsageError("empty range: n_min > n_max");
      }
      const BenchMode mode = kBenchModes.at(bench_mode);
      std::cout << BenchCsv(BenchTable(n_min, n_max, mode, bench_seed), mode);
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitParse;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const InvalidArgument& e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return kExitParse;
  } catch (const SizeError& e) {
    std::cerr << "size error: " << e.what() << '\n';
    return kExitSize;
  } catch (const GeneratorExhausted& e) {
    std::cerr << "generator exhausted: " << e.what() << '\n';
    return kExitExhausted;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInternal;
}

}  // namespace
}  // namespace stablematch

int main(int argc, char** argv) { return stablematch::Main(argc, argv); }
