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

/// @file prob.hpp
/// Exact failure probabilities: exponential lifetimes, closed-form gate
/// probabilities, inclusion-exclusion over cut sets, and system
/// unreliability.

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ftcrit/cutset.hpp"
#include "ftcrit/model.hpp"
#include "ftcrit/structure.hpp"

namespace ftcrit {

/// Mission time in hours; never negative.
class TimePoint {
 public:
  /// Throws NegativeTime for negative or NaN input.
  explicit TimePoint(double hours);
  double hours() const noexcept { return hours_; }

 private:
  double hours_;
};

/// 1 - exp(-rate * t), clamped to [0, 1]. Throws NegativeRate.
double exp_cdf(double rate, TimePoint t);

/// Closed-form gate probabilities for independent inputs. All throw
/// ProbabilityOutOfRange for inputs outside [0, 1].
double and_prob(std::span<const double> probs);
double or_prob(std::span<const double> probs);
/// prod(1 - neg) * prod(pos).
double nand_prob(std::span<const double> neg, std::span<const double> pos);
double nor_prob(std::span<const double> probs);
double xor_prob(double a, double b);

/// Probability of each event at time t under its exponential rate.
ProbAssignment failure_probabilities(const FaultTree& tree, TimePoint t);

/// Inclusion-exclusion over the cuts: the sum over nonempty subsets T of
/// (-1)^(|T|+1) times the product of probabilities over the union of T.
///
/// Terms are accumulated per subset cardinality with compensated
/// summation, and the per-cardinality sums are combined in ascending order.
/// Throws TooManyCuts, or NumericalInstability when the result falls
/// outside [-1e-9, 1 + 1e-9].
double pie_probability(const CutSetForm& form, const ProbAssignment& probs,
                       const Limits& limits = {});
double pie_probability(const CutSetForm& form, const std::vector<double>& probs,
                       const Limits& limits = {});

/// Bottom-up evaluation with the gate formulas. Exact only when no event
/// repeats; throws InvalidArgument otherwise.
double bottom_up_probability(const FaultTree& tree, const ProbAssignment& probs);

/// How an ExactEvaluator computes the top-event probability.
enum class Route {
  /// Each event occurs once: gate formulas applied bottom-up.
  BottomUp,
  /// Repeated events, NOT-free: inclusion-exclusion over minimal cut sets.
  CutSetsPie,
  /// Repeated events with NOT gates or more cuts than the PIE cap:
  /// condition on every repeated event, then evaluate bottom-up.
  Conditioning,
};

/// Top-event probability of one tree for arbitrary event probabilities.
/// The route and any minimal cut sets are prepared once at construction.
class ExactEvaluator {
 public:
  explicit ExactEvaluator(const FaultTree& tree, const Limits& limits = {});

  Route route() const noexcept { return route_; }
  /// Present only on the CutSetsPie route.
  const std::optional<CutSetForm>& cut_sets() const noexcept { return cuts_; }

  /// `probs` is indexed by declaration order.
  double operator()(const std::vector<double>& probs) const;

  /// Forced events take probability 1 (Failed) or 0 (Working).
  double operator()(const ForcedView& view, std::vector<double> probs) const;

 private:
  double conditioned(const std::vector<double>& probs) const;

  const FaultTree* tree_;
  Limits limits_;
  Route route_;
  std::optional<CutSetForm> cuts_;
  std::vector<std::size_t> repeated_;
};

/// Exact top-event probability for the given event probabilities.
double unreliability(const FaultTree& tree, const ProbAssignment& probs,
                     const Limits& limits = {});

/// Exact top-event probability under forcing.
double unreliability(const ForcedView& view, const ProbAssignment& probs,
                     const Limits& limits = {});

/// Probability that the top event has occurred by time t.
double system_unreliability(const FaultTree& tree, TimePoint t,
                            const Limits& limits = {});

}  // namespace ftcrit
