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

#include "ftcrit/structure.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <thread>

#include "ftcrit/error.hpp"

namespace ftcrit {

bool phi(const FaultTree& tree, const StateVector& state) {
  std::vector<bool> failed(tree.size());
  for (std::size_t k = 0; k < tree.size(); ++k) {
    const std::string& id = tree.events()[k].id;
    auto s = state.get(id);
    if (!s)
      throw Error(ErrorKind::MissingState,
                  "state vector has no entry for event '" + id + "'", id);
    failed[k] = *s == State::Failed;
  }
  return tree.circuit().evaluate([&](std::size_t k) { return failed[k]; });
}

bool phi(const FaultTree& tree, StateBits state) {
  return tree.circuit().evaluate_bits(state);
}

bool ForcedView::phi(const StateVector& state) const {
  std::vector<bool> failed(tree_->size());
  for (std::size_t k = 0; k < tree_->size(); ++k) {
    StateBits bit = StateBits{1} << k;
    if (mask_ & bit) {
      failed[k] = (failed_ & bit) != 0;
      continue;
    }
    const std::string& id = tree_->events()[k].id;
    auto s = state.get(id);
    if (!s)
      throw Error(ErrorKind::MissingState,
                  "state vector has no entry for event '" + id + "'", id);
    failed[k] = *s == State::Failed;
  }
  return tree_->circuit().evaluate([&](std::size_t k) { return failed[k]; });
}

std::vector<std::size_t> ForcedView::free_events() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < tree_->size(); ++k)
    if (!((mask_ >> k) & 1U)) out.push_back(k);
  return out;
}

ForcedView force(const FaultTree& tree, const ForcedAssignment& forced) {
  require_enumerable(tree.size(), Limits{kMaxEnumerableEvents});
  StateBits mask = 0;
  StateBits failed = 0;
  for (const auto& [id, state] : forced) {
    StateBits bit = StateBits{1} << tree.require_index(id);
    mask |= bit;
    if (state == State::Failed) failed |= bit;
  }
  return ForcedView(tree, mask, failed);
}

std::vector<double> probability_vector(const FaultTree& tree,
                                       const ProbAssignment& probs) {
  std::vector<double> out(tree.size());
  for (std::size_t k = 0; k < tree.size(); ++k) {
    const std::string& id = tree.events()[k].id;
    auto it = probs.find(id);
    if (it == probs.end())
      throw Error(ErrorKind::MissingProbability,
                  "no probability given for event '" + id + "'", id);
    double p = it->second;
    if (!(p >= 0.0 && p <= 1.0))
      throw Error(ErrorKind::ProbabilityOutOfRange,
                  "probability of '" + id + "' is outside [0, 1]", id);
    out[k] = p;
  }
  return out;
}

namespace {

constexpr StateBits kLeafBlock = 1024;

struct OracleJob {
  const ForcedView* view;
  std::vector<std::size_t> free;
  std::vector<double> fail;
  std::vector<double> work;

  double weight_sum(StateBits lo, StateBits hi) const {
    double sum = 0.0;
    for (StateBits r = lo; r < hi; ++r) {
      StateBits state = 0;
      double weight = 1.0;
      for (std::size_t b = 0; b < free.size(); ++b) {
        if ((r >> b) & 1U) {
          state |= StateBits{1} << free[b];
          weight *= fail[b];
        } else {
          weight *= work[b];
        }
      }
      if (view->phi(state)) sum += weight;
    }
    return sum;
  }

  // Fixed binary split at midpoints; leaves are sequential blocks.
  double pairwise(StateBits lo, StateBits hi) const {
    if (hi - lo <= kLeafBlock) return weight_sum(lo, hi);
    StateBits mid = lo + (hi - lo) / 2;
    return pairwise(lo, mid) + pairwise(mid, hi);
  }

  // Same addition tree as pairwise(), with the top `depth` levels
  // evaluated concurrently.
  double parallel(StateBits lo, StateBits hi, unsigned depth) const {
    if (depth == 0 || hi - lo <= kLeafBlock) return pairwise(lo, hi);
    StateBits mid = lo + (hi - lo) / 2;
    auto left = std::async(std::launch::async,
                           [&] { return parallel(lo, mid, depth - 1); });
    double right = parallel(mid, hi, depth - 1);
    return left.get() + right;
  }
};

}  // namespace

double oracle_probability(const ForcedView& view,
                          const std::vector<double>& probs,
                          const Limits& limits, unsigned workers) {
  OracleJob job{&view, view.free_events(), {}, {}};
  require_enumerable(job.free.size(), limits);
  for (std::size_t k : job.free) {
    job.fail.push_back(probs[k]);
    job.work.push_back(1.0 - probs[k]);
  }
  StateBits count = StateBits{1} << job.free.size();
  if (workers == 0) workers = std::max(1U, std::thread::hardware_concurrency());
  unsigned depth = 0;
  while ((1U << depth) < workers && depth < 6) ++depth;
  double total = count >= (StateBits{1} << 16) ? job.parallel(0, count, depth)
                                               : job.pairwise(0, count);
  return std::clamp(total, 0.0, 1.0);
}

double oracle_probability(const FaultTree& tree, const ProbAssignment& probs,
                          const ForcedAssignment& forced, const Limits& limits,
                          unsigned workers) {
  ForcedView view = force(tree, forced);
  std::vector<double> p(tree.size(), 0.0);
  for (std::size_t k : view.free_events()) {
    const std::string& id = tree.events()[k].id;
    auto it = probs.find(id);
    if (it == probs.end())
      throw Error(ErrorKind::MissingProbability,
                  "no probability given for event '" + id + "'", id);
    if (!(it->second >= 0.0 && it->second <= 1.0))
      throw Error(ErrorKind::ProbabilityOutOfRange,
                  "probability of '" + id + "' is outside [0, 1]", id);
    p[k] = it->second;
  }
  return oracle_probability(view, p, limits, workers);
}

}  // namespace ftcrit
