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

/// @file coherence.hpp
/// Exhaustive checks of the coherent-system conditions: both boundary
/// states, monotonicity, and relevance of every component.

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ftcrit/model.hpp"

namespace ftcrit {

/// A state where failing one more working component repairs the system.
struct MonotoneWitness {
  StateBits state = 0;
  StateVector states;
  std::string event;
};

struct MonotoneResult {
  bool monotone = true;
  /// Lowest violating state index, then lowest event index.
  std::optional<MonotoneWitness> witness;
};

struct CoherenceReport {
  bool boundary_zero = false;  ///< phi(all Working) = 0
  bool boundary_one = false;   ///< phi(all Failed) = 1
  bool monotone = false;
  std::optional<MonotoneWitness> witness;
  std::vector<std::string> irrelevant;  ///< declaration order
  bool is_coherent = false;
};

/// All functions below throw TooManyEvents past `limits.max_events`.
std::pair<bool, bool> check_boundaries(const FaultTree& tree,
                                       const Limits& limits = {});
MonotoneResult check_monotone(const FaultTree& tree, const Limits& limits = {});
/// Ids of events whose state never changes phi.
std::vector<std::string> check_relevance(const FaultTree& tree,
                                         const Limits& limits = {});
CoherenceReport check_coherence(const FaultTree& tree, const Limits& limits = {});

}  // namespace ftcrit
