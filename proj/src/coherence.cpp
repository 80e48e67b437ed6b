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

#include "ftcrit/coherence.hpp"

#include "ftcrit/structure.hpp"

namespace ftcrit {

namespace {

// phi for every state, indexed by packed bits.
std::vector<std::uint8_t> truth_table(const FaultTree& tree, const Limits& limits) {
  require_enumerable(tree.size(), limits);
  StateBits count = StateBits{1} << tree.size();
  std::vector<std::uint8_t> table(count);
  for (StateBits s = 0; s < count; ++s) table[s] = phi(tree, s) ? 1 : 0;
  return table;
}

StateBits all_failed(const FaultTree& tree) {
  return tree.size() == 0 ? 0 : (~StateBits{0} >> (64 - tree.size()));
}

MonotoneResult monotone_from(const FaultTree& tree,
                             const std::vector<std::uint8_t>& table) {
  for (StateBits s = 0; s < table.size(); ++s) {
    if (!table[s]) continue;  // 0 <= anything
    for (std::size_t k = 0; k < tree.size(); ++k) {
      StateBits bit = StateBits{1} << k;
      if ((s & bit) == 0 && !table[s | bit])
        return {false, MonotoneWitness{s, to_state_vector(tree, s),
                                       tree.events()[k].id}};
    }
  }
  return {true, std::nullopt};
}

std::vector<std::string> irrelevant_from(const FaultTree& tree,
                                         const std::vector<std::uint8_t>& table) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < tree.size(); ++k) {
    StateBits bit = StateBits{1} << k;
    bool relevant = false;
    for (StateBits s = 0; s < table.size() && !relevant; ++s)
      if (!(s & bit) && table[s] != table[s | bit]) relevant = true;
    if (!relevant) out.push_back(tree.events()[k].id);
  }
  return out;
}

}  // namespace

std::pair<bool, bool> check_boundaries(const FaultTree& tree,
                                       const Limits& limits) {
  require_enumerable(tree.size(), limits);
  return {!phi(tree, StateBits{0}), phi(tree, all_failed(tree))};
}

MonotoneResult check_monotone(const FaultTree& tree, const Limits& limits) {
  return monotone_from(tree, truth_table(tree, limits));
}

std::vector<std::string> check_relevance(const FaultTree& tree,
                                         const Limits& limits) {
  return irrelevant_from(tree, truth_table(tree, limits));
}

CoherenceReport check_coherence(const FaultTree& tree, const Limits& limits) {
  std::vector<std::uint8_t> table = truth_table(tree, limits);
  CoherenceReport report;
  report.boundary_zero = table.front() == 0;
  report.boundary_one = table[all_failed(tree)] == 1;
  MonotoneResult m = monotone_from(tree, table);
  report.monotone = m.monotone;
  report.witness = std::move(m.witness);
  report.irrelevant = irrelevant_from(tree, table);
  report.is_coherent = report.boundary_zero && report.boundary_one &&
                       report.monotone && report.irrelevant.empty();
  return report;
}

}  // namespace ftcrit
