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

// Sequential deferred acceptance (Gale-Shapley).
//
// Free proposers are served lowest id first. A proposer walks down its list;
// a receiver keeps the better of its current holder and the new proposer and
// the loser becomes free again at once. Every proposal event counts as one
// step, whether it is accepted or not.
//
// The engine runs on an explicit EngineState so a run can be resumed from a
// partially built state. A proposal to a receiver that the state already
// records as proposed-to (for instance work done in a subproblem) is delivered
// again but not counted.

#ifndef STABLEMATCH_GSA_H_
#define STABLEMATCH_GSA_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "stablematch/prefs.h"

namespace stablematch {

enum class Orientation { kMenPropose, kWomenPropose };

constexpr Side ProposerSide(Orientation o) {
  return o == Orientation::kMenPropose ? Side::kMen : Side::kWomen;
}

struct TraceCounters {
  std::uint64_t proposals = 0;

  TraceCounters& operator+=(const TraceCounters& other) {
    proposals += other.proposals;
    return *this;
  }
  friend bool operator==(const TraceCounters&, const TraceCounters&) = default;
};

struct SolveResult {
  Matching matching;
  TraceCounters counters;
};

// Mutable deferred-acceptance state over one instance. Proposers and receivers
// are addressed by id; the state remembers the id layout of the instance it
// was created for and Validate() checks it against the instance it is used
// with.
class EngineState {
 public:
  static EngineState Fresh(const PreferenceInstance& inst,
                           Orientation orientation);

  Orientation orientation() const { return orientation_; }

  // 1-based rank position of the proposer's next proposal, in 1..n+1.
  int cursor(Id proposer) const;
  void set_cursor(Id proposer, int rank_position);

  std::optional<Id> holder(Id receiver) const;
  void set_holder(Id receiver, std::optional<Id> proposer);

  // The receiver the proposer is currently held by, if any.
  std::optional<Id> held_by(Id proposer) const;
  bool is_free(Id proposer) const { return !held_by(proposer).has_value(); }

  bool proposed(Id proposer, Id receiver) const;
  void MarkProposed(Id proposer, Id receiver);
  // Receiver ids in ascending order.
  std::vector<Id> ProposedTo(Id proposer) const;

  // Throws StateError when the state does not describe a reachable
  // deferred-acceptance configuration of `inst`:
  //  - ids or size differ from the instance the state was created for;
  //  - a cursor is outside 1..n+1;
  //  - a proposer is held by two receivers;
  //  - a held proposer's cursor is not past its holder, or it never proposed
  //    to its holder;
  //  - a receiver passed over by a cursor holds nobody, or holds someone it
  //    likes less than the passed-over proposer.
  void Validate(const PreferenceInstance& inst) const;

 private:
  friend SolveResult GsaResume(const PreferenceInstance& inst,
                               EngineState& state);

  int proposer_index(Id id) const;
  int receiver_index(Id id) const;

  Orientation orientation_ = Orientation::kMenPropose;
  int n_ = 0;
  std::vector<Id> proposer_ids_;
  std::vector<Id> receiver_ids_;
  std::vector<int> cursor_;     // 0-based, per proposer index
  std::vector<int> holder_;     // proposer index or -1, per receiver index
  std::vector<char> proposed_;  // n*n, proposer-major
};

// The proposer-optimal stable matching of `inst`.
SolveResult GsaSolve(const PreferenceInstance& inst, Orientation orientation);

// Continues deferred acceptance on `state` until no proposer is free. The
// state is left at quiescence; its proposal records include the new
// proposals. Throws StateError if Validate() fails or a free proposer runs out
// of receivers.
SolveResult GsaResume(const PreferenceInstance& inst, EngineState& state);

}  // namespace stablematch

#endif  // STABLEMATCH_GSA_H_
