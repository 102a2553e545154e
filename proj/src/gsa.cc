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

#include "stablematch/gsa.h"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>

#include "stablematch/errors.h"

namespace stablematch {
namespace {

int IndexIn(const std::vector<Id>& ids, Id id) {
  auto it = std::lower_bound(ids.begin(), ids.end(), id);
  if (it == ids.end() || *it != id) return -1;
  return static_cast<int>(it - ids.begin());
}

}  // namespace

EngineState EngineState::Fresh(const PreferenceInstance& inst,
                               Orientation orientation) {
  const Side proposers = ProposerSide(orientation);
  EngineState state;
  state.orientation_ = orientation;
  state.n_ = inst.size();
  state.proposer_ids_.assign(inst.ids(proposers).begin(),
                             inst.ids(proposers).end());
  state.receiver_ids_.assign(inst.ids(Opposite(proposers)).begin(),
                             inst.ids(Opposite(proposers)).end());
  state.cursor_.assign(state.n_, 0);
  state.holder_.assign(state.n_, -1);
  state.proposed_.assign(static_cast<std::size_t>(state.n_) * state.n_, 0);
  return state;
}

int EngineState::proposer_index(Id id) const {
  const int index = IndexIn(proposer_ids_, id);
  if (index < 0) {
    throw InvalidArgument("unknown proposer id " + std::to_string(id));
  }
  return index;
}

int EngineState::receiver_index(Id id) const {
  const int index = IndexIn(receiver_ids_, id);
  if (index < 0) {
    throw InvalidArgument("unknown receiver id " + std::to_string(id));
  }
  return index;
}

int EngineState::cursor(Id proposer) const {
  return cursor_[proposer_index(proposer)] + 1;
}

void EngineState::set_cursor(Id proposer, int rank_position) {
  cursor_[proposer_index(proposer)] = rank_position - 1;
}

std::optional<Id> EngineState::holder(Id receiver) const {
  const int h = holder_[receiver_index(receiver)];
  if (h < 0) return std::nullopt;
  return proposer_ids_[h];
}

void EngineState::set_holder(Id receiver, std::optional<Id> proposer) {
  holder_[receiver_index(receiver)] = proposer ? proposer_index(*proposer) : -1;
}

std::optional<Id> EngineState::held_by(Id proposer) const {
  const int p = proposer_index(proposer);
  for (int r = 0; r < n_; ++r) {
    if (holder_[r] == p) return receiver_ids_[r];
  }
  return std::nullopt;
}

bool EngineState::proposed(Id proposer, Id receiver) const {
  return proposed_[static_cast<std::size_t>(proposer_index(proposer)) * n_ +
                   receiver_index(receiver)] != 0;
}

void EngineState::MarkProposed(Id proposer, Id receiver) {
  proposed_[static_cast<std::size_t>(proposer_index(proposer)) * n_ +
            receiver_index(receiver)] = 1;
}

std::vector<Id> EngineState::ProposedTo(Id proposer) const {
  const auto row = static_cast<std::size_t>(proposer_index(proposer)) * n_;
  std::vector<Id> out;
  for (int r = 0; r < n_; ++r) {
    if (proposed_[row + r]) out.push_back(receiver_ids_[r]);
  }
  return out;
}

void EngineState::Validate(const PreferenceInstance& inst) const {
  const Side ps = ProposerSide(orientation_);
  const Side rs = Opposite(ps);
  if (inst.size() != n_ ||
      !std::equal(proposer_ids_.begin(), proposer_ids_.end(),
                  inst.ids(ps).begin(), inst.ids(ps).end()) ||
      !std::equal(receiver_ids_.begin(), receiver_ids_.end(),
                  inst.ids(rs).begin(), inst.ids(rs).end())) {
    throw StateError("engine state was built for a different instance");
  }

  std::vector<int> holding(n_, -1);
  for (int r = 0; r < n_; ++r) {
    const int p = holder_[r];
    if (p < -1 || p >= n_) throw StateError("holder index out of range");
    if (p < 0) continue;
    if (holding[p] >= 0) {
      throw StateError("proposer " + std::to_string(proposer_ids_[p]) +
                       " is held by two receivers");
    }
    holding[p] = r;
  }

  for (int p = 0; p < n_; ++p) {
    const int c = cursor_[p];
    const std::string who = "proposer " + std::to_string(proposer_ids_[p]);
    if (c < 0 || c > n_) {
      throw StateError(who + " has cursor " + std::to_string(c + 1) +
                       " outside 1.." + std::to_string(n_ + 1));
    }
    if (holding[p] >= 0) {
      const int r = holding[p];
      if (inst.position(ps, p, r) >= c) {
        throw StateError(who + " is held by receiver " +
                         std::to_string(receiver_ids_[r]) +
                         " but its cursor is not past it");
      }
      if (!proposed_[static_cast<std::size_t>(p) * n_ + r]) {
        throw StateError(who + " is held by a receiver it never proposed to");
      }
    }
    for (int k = 0; k < c; ++k) {
      const int r = inst.partner_at(ps, p, k);
      if (r == holding[p]) continue;
      const int h = holder_[r];
      if (h < 0 || inst.position(rs, r, h) > inst.position(rs, r, p)) {
        throw StateError(who + " passed receiver " +
                         std::to_string(receiver_ids_[r]) +
                         " which does not hold anyone it prefers");
      }
    }
  }
}

SolveResult GsaResume(const PreferenceInstance& inst, EngineState& state) {
  state.Validate(inst);
  const Side ps = ProposerSide(state.orientation_);
  const Side rs = Opposite(ps);
  const int n = state.n_;

  std::vector<char> held(n, 0);
  for (int r = 0; r < n; ++r) {
    if (state.holder_[r] >= 0) held[state.holder_[r]] = 1;
  }
  std::priority_queue<int, std::vector<int>, std::greater<int>> free;
  for (int p = 0; p < n; ++p) {
    if (!held[p]) free.push(p);
  }

  TraceCounters counters;
  while (!free.empty()) {
    const int p = free.top();
    free.pop();
    int& cursor = state.cursor_[p];
    if (cursor >= n) {
      throw StateError("proposer " + std::to_string(state.proposer_ids_[p]) +
                       " exhausted its list");
    }
    const int r = inst.partner_at(ps, p, cursor);
    ++cursor;
    char& seen = state.proposed_[static_cast<std::size_t>(p) * n + r];
    if (!seen) {
      seen = 1;
      ++counters.proposals;
    }
    const int h = state.holder_[r];
    if (h < 0) {
      state.holder_[r] = p;
    } else if (inst.position(rs, r, p) < inst.position(rs, r, h)) {
      state.holder_[r] = p;
      free.push(h);
    } else {
      free.push(p);
    }
  }

  std::vector<Couple> couples;
  couples.reserve(n);
  for (int r = 0; r < n; ++r) {
    const Id proposer = state.proposer_ids_[state.holder_[r]];
    const Id receiver = state.receiver_ids_[r];
    couples.push_back(state.orientation_ == Orientation::kMenPropose
                          ? Couple{proposer, receiver}
                          : Couple{receiver, proposer});
  }
  return {Matching(std::move(couples)), counters};
}

SolveResult GsaSolve(const PreferenceInstance& inst, Orientation orientation) {
  EngineState state = EngineState::Fresh(inst, orientation);
  return GsaResume(inst, state);
}

}  // namespace stablematch
