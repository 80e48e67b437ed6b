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

#include "ftcrit/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <thread>
#include <vector>

#include "ftcrit/error.hpp"
#include "ftcrit/structure.hpp"

namespace ftcrit {

namespace {

constexpr std::uint64_t kBatch = 1 << 14;

// SplitMix64 finalizer.
std::uint64_t mix(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

struct Counts {
  std::uint64_t failures = 0;
  std::uint64_t critical = 0;
};

/// Sample-index ranges are independent, so batches can run anywhere; the
/// counts are integers and their sum does not depend on the split.
template <class PerSample>
Counts run_batches(std::uint64_t samples, const PerSample& per_sample) {
  std::uint64_t batches = (samples + kBatch - 1) / kBatch;
  unsigned workers = std::max(1U, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, batches));
  std::vector<std::future<Counts>> parts;
  for (unsigned w = 0; w < workers; ++w) {
    parts.push_back(std::async(std::launch::async, [=, &per_sample] {
      Counts c;
      for (std::uint64_t b = w; b < batches; b += workers) {
        std::uint64_t end = std::min(samples, (b + 1) * kBatch);
        for (std::uint64_t s = b * kBatch; s < end; ++s) per_sample(s, c);
      }
      return c;
    }));
  }
  Counts total;
  for (auto& part : parts) {
    Counts c = part.get();
    total.failures += c.failures;
    total.critical += c.critical;
  }
  return total;
}

McEstimate proportion(std::uint64_t hits, std::uint64_t n) {
  double p = static_cast<double>(hits) / static_cast<double>(n);
  return {p, std::sqrt(p * (1.0 - p) / static_cast<double>(n)), n};
}

struct Sampler {
  const FaultTree& tree;
  std::uint64_t seed;
  std::vector<double> probs;

  StateBits draw(std::uint64_t sample) const {
    StateBits s = 0;
    for (std::size_t k = 0; k < probs.size(); ++k)
      if (counter_uniform(seed, sample, k) < probs[k]) s |= StateBits{1} << k;
    return s;
  }
};

Sampler make_sampler(const FaultTree& tree, const McConfig& cfg) {
  if (cfg.samples == 0)
    throw Error(ErrorKind::InvalidArgument, "sample count must be positive");
  require_enumerable(tree.size(), Limits{kMaxEnumerableEvents});
  TimePoint t(cfg.t);
  Sampler sampler{tree, cfg.seed, {}};
  for (const BasicEvent& e : tree.events())
    sampler.probs.push_back(exp_cdf(e.rate, t));
  return sampler;
}

}  // namespace

double counter_uniform(std::uint64_t seed, std::uint64_t sample,
                       std::uint64_t event) noexcept {
  std::uint64_t h = mix(seed ^ mix(sample ^ mix(event)));
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

McEstimate estimate_unreliability(const FaultTree& tree, const McConfig& cfg) {
  Sampler sampler = make_sampler(tree, cfg);
  Counts c = run_batches(cfg.samples, [&](std::uint64_t s, Counts& acc) {
    if (phi(tree, sampler.draw(s))) ++acc.failures;
  });
  return proportion(c.failures, cfg.samples);
}

McEstimate estimate_criticality(const FaultTree& tree, const McConfig& cfg,
                                std::string_view id) {
  Sampler sampler = make_sampler(tree, cfg);
  StateBits bit = StateBits{1} << tree.require_index(id);
  Counts c = run_batches(cfg.samples, [&](std::uint64_t s, Counts& acc) {
    StateBits state = sampler.draw(s);
    if (!phi(tree, state)) return;
    ++acc.failures;
    if ((state & bit) && !phi(tree, state & ~bit)) ++acc.critical;
  });
  if (c.failures == 0)
    throw Error(ErrorKind::NoFailureSamples,
                "no sample produced a system failure", std::string(id));
  return proportion(c.critical, c.failures);
}

}  // namespace ftcrit
