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

/// @file montecarlo.hpp
/// Sampling estimators used as a statistical cross-check of the exact
/// results.

#pragma once

#include <cstdint>
#include <string_view>

#include "ftcrit/model.hpp"
#include "ftcrit/prob.hpp"

namespace ftcrit {

struct McConfig {
  std::uint64_t samples = 100'000;
  std::uint64_t seed = 0;
  double t = 0.0;
};

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
};

/// Uniform variate in [0, 1) determined only by (seed, sample, event).
double counter_uniform(std::uint64_t seed, std::uint64_t sample,
                       std::uint64_t event) noexcept;

/// Fraction of sampled states in which the top event occurs. Each event is
/// Failed with probability exp_cdf(rate, t). Throws InvalidArgument for
/// zero samples.
McEstimate estimate_unreliability(const FaultTree& tree, const McConfig& cfg);

/// Among samples where the system failed, the fraction in which `id` is
/// failed and repairing it alone restores the system. `samples` in the
/// result counts the system-failure samples. Throws NoFailureSamples.
McEstimate estimate_criticality(const FaultTree& tree, const McConfig& cfg,
                                std::string_view id);

}  // namespace ftcrit
