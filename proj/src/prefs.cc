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

#include "stablematch/prefs.h"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

#include "stablematch/errors.h"

namespace stablematch {
namespace {

char SideLetter(Side side) { return side == Side::kMen ? 'M' : 'W'; }

void CheckIds(Side side, const std::vector<Id>& ids) {
  std::vector<Id> sorted = ids;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] <= 0) {
      throw InvalidArgument(SideName(side) + ": id " +
                            std::to_string(sorted[i]) + " is not positive");
    }
    if (i > 0 && sorted[i] == sorted[i - 1]) {
      throw InvalidArgument(SideName(side) + ": id " +
                            std::to_string(sorted[i]) + " appears twice");
    }
  }
}

int IndexIn(std::span<const Id> sorted_ids, Id id) {
  auto it = std::lower_bound(sorted_ids.begin(), sorted_ids.end(), id);
  if (it == sorted_ids.end() || *it != id) return -1;
  return static_cast<int>(it - sorted_ids.begin());
}

}  // namespace

std::string SideName(Side side) { return side == Side::kMen ? "men" : "women"; }

std::string ToString(const Couple& couple) {
  std::ostringstream out;
  out << "(M" << couple.man << ",W" << couple.woman << ")";
  return out.str();
}

PreferenceInstance PreferenceInstance::FromLists(
    const std::vector<std::vector<Id>>& men_prefs,
    const std::vector<std::vector<Id>>& women_prefs) {
  std::vector<Id> men_ids(men_prefs.size());
  std::vector<Id> women_ids(women_prefs.size());
  std::iota(men_ids.begin(), men_ids.end(), 1);
  std::iota(women_ids.begin(), women_ids.end(), 1);
  return Create(men_ids, women_ids, men_prefs, women_prefs);
}

PreferenceInstance PreferenceInstance::Create(
    const std::vector<Id>& men_ids, const std::vector<Id>& women_ids,
    const std::vector<std::vector<Id>>& men_prefs,
    const std::vector<std::vector<Id>>& women_prefs) {
  const std::size_t n = men_ids.size();
  if (women_ids.size() != n) {
    throw InvalidArgument("men and women sides differ in size (" +
                          std::to_string(n) + " vs " +
                          std::to_string(women_ids.size()) + ")");
  }
  if (men_prefs.size() != n || women_prefs.size() != n) {
    throw InvalidArgument("expected one preference list per participant");
  }
  CheckIds(Side::kMen, men_ids);
  CheckIds(Side::kWomen, women_ids);

  PreferenceInstance inst;
  inst.n_ = static_cast<int>(n);

  auto build = [n](Side side, const std::vector<Id>& own_ids,
                   const std::vector<Id>& other_ids,
                   const std::vector<std::vector<Id>>& lists, SideData& out) {
    out.ids = own_ids;
    std::sort(out.ids.begin(), out.ids.end());
    std::vector<Id> other_sorted = other_ids;
    std::sort(other_sorted.begin(), other_sorted.end());

    out.list.assign(n * n, -1);
    out.pos.assign(n * n, -1);
    out.list_ids.assign(n * n, 0);
    for (std::size_t row = 0; row < n; ++row) {
      const Id owner = own_ids[row];
      const auto owner_index =
          static_cast<std::size_t>(IndexIn(out.ids, owner));
      const std::vector<Id>& list = lists[row];
      auto fail = [&](const std::string& why) {
        std::ostringstream msg;
        msg << SideName(side) << " row " << row + 1 << " (" << SideLetter(side)
            << owner << "): " << why;
        throw InvalidArgument(msg.str());
      };
      if (list.size() != n) {
        fail("expected " + std::to_string(n) + " entries, got " +
             std::to_string(list.size()));
      }
      for (std::size_t k = 0; k < n; ++k) {
        const int partner = IndexIn(other_sorted, list[k]);
        if (partner < 0) {
          fail("unknown id " + std::to_string(list[k]) +
               ", list is not a permutation");
        }
        int& slot = out.pos[owner_index * n + partner];
        if (slot >= 0) {
          fail("id " + std::to_string(list[k]) +
               " repeated, list is not a permutation");
        }
        slot = static_cast<int>(k);
        out.list[owner_index * n + k] = partner;
        out.list_ids[owner_index * n + k] = list[k];
      }
    }
  };
  build(Side::kMen, men_ids, women_ids, men_prefs, inst.men_);
  build(Side::kWomen, women_ids, men_ids, women_prefs, inst.women_);
  return inst;
}

int PreferenceInstance::index_of(Side side, Id id) const {
  return IndexIn(data(side).ids, id);
}

std::span<const Id> PreferenceInstance::prefs(Side side, Id owner) const {
  const int index = index_of(side, owner);
  if (index < 0) {
    throw InvalidArgument("unknown " + SideName(side) + " id " +
                          std::to_string(owner));
  }
  return std::span<const Id>(data(side).list_ids)
      .subspan(static_cast<std::size_t>(index) * n_, n_);
}

Rank PreferenceInstance::rank_of(Side side, Id owner, Id partner) const {
  const int owner_index = index_of(side, owner);
  if (owner_index < 0) {
    throw InvalidArgument("unknown " + SideName(side) + " id " +
                          std::to_string(owner));
  }
  const int partner_index = index_of(Opposite(side), partner);
  if (partner_index < 0) {
    throw InvalidArgument("unknown " + SideName(Opposite(side)) + " id " +
                          std::to_string(partner));
  }
  return Rank{position(side, owner_index, partner_index) + 1};
}

PreferenceInstance PreferenceInstance::Restrict(
    std::span<const Id> men, std::span<const Id> women) const {
  for (Id id : men) {
    if (!contains(Side::kMen, id)) {
      throw InvalidArgument("unknown men id " + std::to_string(id));
    }
  }
  for (Id id : women) {
    if (!contains(Side::kWomen, id)) {
      throw InvalidArgument("unknown women id " + std::to_string(id));
    }
  }
  auto filtered = [this](Side side, std::span<const Id> owners,
                         std::span<const Id> keep) {
    std::vector<Id> kept(keep.begin(), keep.end());
    std::sort(kept.begin(), kept.end());
    std::vector<std::vector<Id>> lists;
    lists.reserve(owners.size());
    for (Id owner : owners) {
      std::vector<Id>& list = lists.emplace_back();
      for (Id partner : prefs(side, owner)) {
        if (std::binary_search(kept.begin(), kept.end(), partner)) {
          list.push_back(partner);
        }
      }
    }
    return lists;
  };
  return Create(std::vector<Id>(men.begin(), men.end()),
                std::vector<Id>(women.begin(), women.end()),
                filtered(Side::kMen, men, women),
                filtered(Side::kWomen, women, men));
}

Matching::Matching(std::vector<Couple> couples) : couples_(std::move(couples)) {
  std::sort(couples_.begin(), couples_.end());
  std::vector<Id> women;
  women.reserve(couples_.size());
  for (std::size_t i = 0; i < couples_.size(); ++i) {
    const Couple& c = couples_[i];
    if (c.man <= 0 || c.woman <= 0) {
      throw InvalidArgument("couple " + ToString(c) + " has a non-positive id");
    }
    if (i > 0 && couples_[i - 1].man == c.man) {
      throw InvalidArgument("man M" + std::to_string(c.man) +
                            " appears in two couples");
    }
    women.push_back(c.woman);
  }
  std::sort(women.begin(), women.end());
  auto dup = std::adjacent_find(women.begin(), women.end());
  if (dup != women.end()) {
    throw InvalidArgument("woman W" + std::to_string(*dup) +
                          " appears in two couples");
  }
}

std::optional<Id> Matching::woman_of(Id man) const {
  auto it =
      std::lower_bound(couples_.begin(), couples_.end(), man,
                       [](const Couple& c, Id value) { return c.man < value; });
  if (it == couples_.end() || it->man != man) return std::nullopt;
  return it->woman;
}

std::optional<Id> Matching::man_of(Id woman) const {
  for (const Couple& c : couples_) {
    if (c.woman == woman) return c.man;
  }
  return std::nullopt;
}

bool Matching::contains(const Couple& couple) const {
  return std::binary_search(couples_.begin(), couples_.end(), couple);
}

bool Matching::IsOver(const PreferenceInstance& inst) const {
  return std::all_of(couples_.begin(), couples_.end(), [&](const Couple& c) {
    return inst.contains(Side::kMen, c.man) &&
           inst.contains(Side::kWomen, c.woman);
  });
}

std::string ToString(const Matching& matching) {
  std::string out = "{";
  bool first = true;
  for (const Couple& c : matching.couples()) {
    if (!first) out += ", ";
    out += ToString(c);
    first = false;
  }
  return out + "}";
}

PreferenceInstance DeletePair(const PreferenceInstance& inst,
                              const Couple& couple) {
  if (!inst.contains(Side::kMen, couple.man)) {
    throw InvalidArgument("unknown men id " + std::to_string(couple.man));
  }
  if (!inst.contains(Side::kWomen, couple.woman)) {
    throw InvalidArgument("unknown women id " + std::to_string(couple.woman));
  }
  std::vector<Id> men;
  std::vector<Id> women;
  for (Id id : inst.men_ids()) {
    if (id != couple.man) men.push_back(id);
  }
  for (Id id : inst.women_ids()) {
    if (id != couple.woman) women.push_back(id);
  }
  return inst.Restrict(men, women);
}

PreferenceInstance Transpose(const PreferenceInstance& inst) {
  auto lists = [&](Side side) {
    std::vector<std::vector<Id>> out;
    for (Id owner : inst.ids(side)) {
      std::span<const Id> list = inst.prefs(side, owner);
      out.emplace_back(list.begin(), list.end());
    }
    return out;
  };
  auto ids = [&](Side side) {
    return std::vector<Id>(inst.ids(side).begin(), inst.ids(side).end());
  };
  return PreferenceInstance::Create(ids(Side::kWomen), ids(Side::kMen),
                                    lists(Side::kWomen), lists(Side::kMen));
}

}  // namespace stablematch
