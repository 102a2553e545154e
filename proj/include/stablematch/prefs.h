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

// Preference instances and matchings.
//
// A PreferenceInstance holds n men and n women, each with a complete, strictly
// ordered preference list over the other side. Participants are identified by
// positive integers that stay fixed when the instance is reduced, so a man
// called 4 in the full instance is still 4 after someone else is deleted.
//
// Internally every side is stored by index (position of the id in the sorted
// id list). The index-level accessors exist for the engines; everything else
// should go through the id-level API.

#ifndef STABLEMATCH_PREFS_H_
#define STABLEMATCH_PREFS_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace stablematch {

using Id = std::int32_t;

enum class Side { kMen, kWomen };

constexpr Side Opposite(Side side) {
  return side == Side::kMen ? Side::kWomen : Side::kMen;
}

std::string SideName(Side side);

// 1-based position in a preference list; 1 is the most preferred partner.
struct Rank {
  int value = 0;

  friend auto operator<=>(const Rank&, const Rank&) = default;
};

struct Couple {
  Id man = 0;
  Id woman = 0;

  friend auto operator<=>(const Couple&, const Couple&) = default;
};

// Formats as "(M3,W4)".
std::string ToString(const Couple& couple);

class PreferenceInstance {
 public:
  // The empty instance, n = 0.
  PreferenceInstance() = default;

  // Ids 1..n on both sides; men_prefs[i] is the list of man i+1, best first.
  static PreferenceInstance FromLists(
      const std::vector<std::vector<Id>>& men_prefs,
      const std::vector<std::vector<Id>>& women_prefs);

  // General form: men_prefs[i] belongs to men_ids[i]. Ids need not be
  // contiguous or sorted. Throws InvalidArgument naming side, row and id when
  // a list is not a permutation of the opposite id set.
  static PreferenceInstance Create(
      const std::vector<Id>& men_ids, const std::vector<Id>& women_ids,
      const std::vector<std::vector<Id>>& men_prefs,
      const std::vector<std::vector<Id>>& women_prefs);

  int size() const { return n_; }
  bool empty() const { return n_ == 0; }

  // Sorted ascending.
  std::span<const Id> ids(Side side) const { return data(side).ids; }
  std::span<const Id> men_ids() const { return men_.ids; }
  std::span<const Id> women_ids() const { return women_.ids; }

  bool contains(Side side, Id id) const { return index_of(side, id) >= 0; }

  // Owner's list, best first. Throws InvalidArgument for an unknown owner.
  std::span<const Id> prefs(Side side, Id owner) const;

  // Throws InvalidArgument if either id is unknown.
  Rank rank_of(Side side, Id owner, Id partner) const;

  // True if owner strictly prefers a to b.
  bool prefers(Side side, Id owner, Id a, Id b) const {
    return rank_of(side, owner, a) < rank_of(side, owner, b);
  }

  // The instance restricted to the given participants. Lists keep their
  // relative order. Every id must be present.
  PreferenceInstance Restrict(std::span<const Id> men,
                              std::span<const Id> women) const;

  // Index-level access. index_of returns -1 for unknown ids.
  int index_of(Side side, Id id) const;
  Id id_at(Side side, int index) const { return data(side).ids[index]; }
  // Index of the partner at 0-based list position `pos` of owner `owner`.
  int partner_at(Side side, int owner, int pos) const {
    return data(side).list[static_cast<std::size_t>(owner) * n_ + pos];
  }
  // 0-based position of `partner` in `owner`'s list.
  int position(Side side, int owner, int partner) const {
    return data(side).pos[static_cast<std::size_t>(owner) * n_ + partner];
  }

  friend bool operator==(const PreferenceInstance& a,
                         const PreferenceInstance& b) {
    return a.n_ == b.n_ && a.men_ == b.men_ && a.women_ == b.women_;
  }

 private:
  struct SideData {
    std::vector<Id> ids;
    // n*n, row per owner; entries are opposite-side indices.
    std::vector<int> list;
    // n*n inverse of `list`.
    std::vector<int> pos;
    // `list` translated to ids, backing prefs().
    std::vector<Id> list_ids;

    friend bool operator==(const SideData& a, const SideData& b) {
      return a.ids == b.ids && a.list == b.list;
    }
  };

  const SideData& data(Side side) const {
    return side == Side::kMen ? men_ : women_;
  }

  int n_ = 0;
  SideData men_;
  SideData women_;
};

// A set of man-woman couples in which nobody appears twice. Couples are kept
// sorted by man id.
class Matching {
 public:
  Matching() = default;
  // Throws InvalidArgument when an id repeats on either side or is not
  // positive.
  explicit Matching(std::vector<Couple> couples);

  std::span<const Couple> couples() const { return couples_; }
  std::size_t size() const { return couples_.size(); }
  bool empty() const { return couples_.empty(); }

  std::optional<Id> woman_of(Id man) const;
  std::optional<Id> man_of(Id woman) const;
  bool contains(const Couple& couple) const;

  // Every id of every couple is a participant of `inst`.
  bool IsOver(const PreferenceInstance& inst) const;

  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  std::vector<Couple> couples_;
};

// Formats as "{(M1,W2), (M2,W1)}".
std::string ToString(const Matching& matching);

// Removes one man and one woman from the instance and from every remaining
// list. Deleting the only couple of a 1x1 instance yields the empty instance.
PreferenceInstance DeletePair(const PreferenceInstance& inst,
                              const Couple& couple);

// Men become women and vice versa; ids and lists are kept.
PreferenceInstance Transpose(const PreferenceInstance& inst);

}  // namespace stablematch

#endif  // STABLEMATCH_PREFS_H_
