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

/// @file structure.hpp
/// The structure function, state forcing, and the exhaustive
/// probability oracle that every exact computation is checked against.

#pragma once

#include <map>
#include <string>
#include <vector>

#include "ftcrit/model.hpp"

namespace ftcrit {

/// Partial map of event id to a pinned state.
using ForcedAssignment = std::map<std::string, State, std::less<>>;

/// Total map of event id to failure probability.
using ProbAssignment = std::map<std::string, double, std::less<>>;

/// 1 iff the top event occurs. Throws MissingState.
bool phi(const FaultTree& tree, const StateVector& state);
bool phi(const FaultTree& tree, StateBits state);

/// A tree seen through a set of pinned event states. The tree itself is
/// never modified.
class ForcedView {
 public:
  ForcedView(const FaultTree& tree, StateBits mask, StateBits failed)
      : tree_(&tree), mask_(mask), failed_(failed) {}

  const FaultTree& tree() const noexcept { return *tree_; }
  /// Bits of forced events.
  StateBits mask() const noexcept { return mask_; }
  /// Bits of events forced to Failed (subset of mask()).
  StateBits failed() const noexcept { return failed_; }

  /// Forced entries of `state` are ignored; the rest must be present.
  bool phi(const StateVector& state) const;
  bool phi(StateBits state) const {
    return tree_->circuit().evaluate_bits((state & ~mask_) | failed_);
  }

  /// Indices of the events not pinned by this view, ascending.
  std::vector<std::size_t> free_events() const;

 private:
  const FaultTree* tree_;
  StateBits mask_;
  StateBits failed_;
};

/// Throws UnknownEvent. Requires the tree to have at most 63 events.
ForcedView force(const FaultTree& tree, const ForcedAssignment& forced);

/// Converts a named assignment to a per-index vector. Throws
/// MissingProbability or ProbabilityOutOfRange.
std::vector<double> probability_vector(const FaultTree& tree,
                                       const ProbAssignment& probs);

/// Sum over every residual state of [phi = 1] times its product weight.
///
/// Summation is pairwise over contiguous power-of-two blocks of the state
/// index, so the result is bitwise identical for any `workers` count
/// (0 picks the hardware concurrency).
double oracle_probability(const FaultTree& tree, const ProbAssignment& probs,
                          const ForcedAssignment& forced = {},
                          const Limits& limits = {}, unsigned workers = 0);

double oracle_probability(const ForcedView& view,
                          const std::vector<double>& probs,
                          const Limits& limits = {}, unsigned workers = 0);

}  // namespace ftcrit
