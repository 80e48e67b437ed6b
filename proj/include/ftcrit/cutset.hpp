// Copyright 2026 The ftcrit Authors
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

/// @file cutset.hpp
/// OR-of-ANDs normal form of coherent fault trees and its minimization.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ftcrit/model.hpp"

namespace ftcrit {

/// Fixed-universe bit set of event indices.
class EventSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  EventSet() = default;
  explicit EventSet(std::size_t universe)
      : universe_(universe), words_((universe + kWordBits - 1) / kWordBits) {}

  std::size_t universe() const noexcept { return universe_; }
  const std::vector<Word>& words() const noexcept { return words_; }

  void insert(std::size_t k) { words_[k / kWordBits] |= Word{1} << (k % kWordBits); }
  bool contains(std::size_t k) const {
    return (words_[k / kWordBits] >> (k % kWordBits)) & 1U;
  }
  std::size_t count() const noexcept;
  bool empty() const noexcept;

  bool is_subset_of(const EventSet& other) const noexcept;
  EventSet& operator|=(const EventSet& other) noexcept;

  /// Members in ascending index order.
  std::vector<std::size_t> members() const;

  /// True if every member is set in `state`.
  bool satisfied_by(StateBits state) const noexcept;

  friend bool operator==(const EventSet&, const EventSet&) = default;

 private:
  std::size_t universe_ = 0;
  std::vector<Word> words_;
};

/// Canonical cut order: by size, then lexicographic over ascending
/// member indices.
bool canonical_less(const EventSet& a, const EventSet& b);

struct CutSetForm {
  /// Event ids in the tree's declaration order; cut members index this.
  std::vector<std::string> event_ids;
  std::vector<EventSet> cuts;

  friend bool operator==(const CutSetForm&, const CutSetForm&) = default;
};

/// Top-down expansion of a NOT-free tree into cut sets.
///
/// Each row holds a partial cut and a stack of pending gates. An And gate
/// pushes all of its children onto the row; an Or gate with k children
/// splits the row into k rows; an Atomic leaf joins the partial cut
/// (repeats are absorbed by the set). Rows left with no pending gates are
/// the cut sets. The result is logically equivalent to the tree but not
/// necessarily minimal.
///
/// Throws NotFreeViolation, or ExpansionTooLarge once more than
/// `limits.max_expansion` rows have been created.
CutSetForm to_cutsets(const FaultTree& tree, const Limits& limits = {});

/// Drops duplicates and supersets, then sorts canonically.
CutSetForm minimize(CutSetForm form);

/// minimize(to_cutsets(tree)).
CutSetForm minimal_cut_sets(const FaultTree& tree, const Limits& limits = {});

/// 1 iff some cut has all of its members failed.
bool evaluate(const CutSetForm& form, StateBits state);

/// Ids of the cut's members in declaration order.
std::vector<std::string> cut_ids(const CutSetForm& form, std::size_t cut);

}  // namespace ftcrit
