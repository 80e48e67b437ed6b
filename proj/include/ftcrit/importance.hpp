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

/// @file importance.hpp
/// Component importance measures and their ranking.
///
/// Every measure is built from three exact probabilities at one time point:
/// the baseline F, F with the component forced Failed, and F with it forced
/// Working. Forcing goes through ForcedView, so the model is never rewritten.
///
///   Birnbaum        F(i Failed) - F(i Working)
///   Fussell-Vesely  (F - F(i Working)) / F
///   RRW             F / F(i Working)
///   RAW             F(i Failed) / F
///
/// Forcing::Swapped exchanges the forced state inside Fussell-Vesely, RRW
/// and RAW. It reproduces an alternative set of published definitions and
/// gives nonpositive Fussell-Vesely values on coherent trees.

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ftcrit/model.hpp"
#include "ftcrit/prob.hpp"
#include "ftcrit/structure.hpp"

namespace ftcrit {

enum class Forcing { Standard, Swapped };

enum class Measure { Birnbaum, FussellVesely, RiskReductionWorth, RiskAchievementWorth };

/// Parses "birnbaum", "fv", "rrw", "raw" (and the long names). Throws
/// InvalidArgument.
Measure parse_measure(std::string_view name);
std::string_view to_string(Measure m) noexcept;

double birnbaum(const FaultTree& tree, TimePoint t, std::string_view id,
                const Limits& limits = {});
double birnbaum(const FaultTree& tree, const ProbAssignment& probs,
                std::string_view id, const Limits& limits = {});

/// Second mixed partial of the top-event probability in p_i and p_j:
/// F(1i,1j) - F(1i,0j) - F(0i,1j) + F(0i,0j). Throws SameIndex.
double mixed_second(const FaultTree& tree, const ProbAssignment& probs,
                    std::string_view i, std::string_view j,
                    const Limits& limits = {});

/// phi(1i,0j,x) == phi(0i,1j,x) for every residual state x.
bool permutation_equivalent(const FaultTree& tree, std::string_view i,
                            std::string_view j, const Limits& limits = {});

/// Throws SystemNeverFails when F = 0.
double fussell_vesely(const FaultTree& tree, TimePoint t, std::string_view id,
                      Forcing forcing = Forcing::Standard,
                      const Limits& limits = {});
/// +inf when the denominator is zero and F > 0; 1 when both are zero.
double rrw(const FaultTree& tree, TimePoint t, std::string_view id,
           Forcing forcing = Forcing::Standard, const Limits& limits = {});
/// Throws SystemNeverFails when F = 0 and the numerator is positive.
double raw(const FaultTree& tree, TimePoint t, std::string_view id,
           Forcing forcing = Forcing::Standard, const Limits& limits = {});

struct ComponentImportance {
  std::string event;
  double birnbaum = 0.0;
  double fussell_vesely = 0.0;
  double rrw = 0.0;
  double raw = 0.0;

  double value(Measure m) const noexcept;
};

struct ImportanceReport {
  double t = 0.0;
  double unreliability = 0.0;
  Measure ranked_by = Measure::Birnbaum;
  std::vector<ComponentImportance> components;  ///< declaration order
  /// Event ids, descending by the ranking measure; ties by ascending id.
  std::vector<std::string> ranking;

  /// 1-based position of `id` in the ranking.
  std::size_t rank_of(std::string_view id) const;
};

ImportanceReport importance_report(const FaultTree& tree, TimePoint t,
                                   Measure ranked_by = Measure::Birnbaum,
                                   Forcing forcing = Forcing::Standard,
                                   const Limits& limits = {});

/// Event ids in descending order of `measure`, +inf first, ties by
/// ascending id.
std::vector<std::string> rank(const FaultTree& tree, TimePoint t, Measure measure,
                              Forcing forcing = Forcing::Standard,
                              const Limits& limits = {});

enum class MixedPartialSign { NonNegativeEverywhere, Indeterminate };
enum class ProbOrdering { ILeJ, JLeI, Equal };
enum class Verdict { ILeJ, JLeI, TheoremInapplicable };

std::string_view to_string(MixedPartialSign s) noexcept;
std::string_view to_string(ProbOrdering o) noexcept;
std::string_view to_string(Verdict v) noexcept;

/// Comparison of two components by the relative-importance theorem: if i
/// and j are permutation equivalent and the mixed partial is nonnegative
/// for all probabilities, then p_i <= p_j implies I_B(j) <= I_B(i).
struct RelativeComparison {
  std::string i;
  std::string j;
  bool permutation_equivalent = false;
  MixedPartialSign mixed_partial_sign = MixedPartialSign::Indeterminate;
  /// Smallest mixed partial over all residual vertex states.
  double min_mixed_partial = 0.0;
  ProbOrdering prob_ordering = ProbOrdering::Equal;
  Verdict verdict = Verdict::TheoremInapplicable;
  /// Whether the direct values satisfy the verdict (true when inapplicable).
  bool verdict_holds = true;
  double prob_i = 0.0;
  double prob_j = 0.0;
  double birnbaum_i = 0.0;
  double birnbaum_j = 0.0;
};

/// The mixed partial is multilinear in every remaining probability, so
/// its minimum over the unit box (and over any grid containing 0 and 1)
/// is attained at a vertex; the sign is certified by evaluating all
/// 2^(n-2) vertices exactly. Throws SameIndex or TooManyEvents.
RelativeComparison relative_compare(const FaultTree& tree, TimePoint t,
                                    std::string_view i, std::string_view j,
                                    const Limits& limits = {});

}  // namespace ftcrit
