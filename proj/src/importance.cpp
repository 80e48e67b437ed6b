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

#include "ftcrit/importance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ftcrit/error.hpp"

namespace ftcrit {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kVerdictTolerance = 1e-12;

/// Exact probabilities of one tree at one assignment, with and without a
/// component pinned.
class Forcer {
 public:
  Forcer(const FaultTree& tree, std::vector<double> probs, const Limits& limits)
      : tree_(tree), eval_(tree, limits), probs_(std::move(probs)) {}

  double base() const { return eval_(probs_); }

  double with(std::size_t k, State s) const {
    return eval_(view({{k, s}}), probs_);
  }

  double with(std::size_t a, State sa, std::size_t b, State sb) const {
    return eval_(view({{a, sa}, {b, sb}}), probs_);
  }

  const std::vector<double>& probs() const noexcept { return probs_; }

 private:
  ForcedView view(std::initializer_list<std::pair<std::size_t, State>> pins) const {
    ForcedAssignment forced;
    for (auto [k, s] : pins) forced.emplace(tree_.events()[k].id, s);
    return force(tree_, forced);
  }

  const FaultTree& tree_;
  ExactEvaluator eval_;
  std::vector<double> probs_;
};

std::vector<double> probs_at(const FaultTree& tree, TimePoint t) {
  std::vector<double> p;
  p.reserve(tree.size());
  for (const BasicEvent& e : tree.events()) p.push_back(exp_cdf(e.rate, t));
  return p;
}

double fv_of(double f, double forced, const std::string& id) {
  if (f == 0.0)
    throw Error(ErrorKind::SystemNeverFails,
                "Fussell-Vesely is undefined: the system never fails", id);
  return (f - forced) / f;
}

double rrw_of(double f, double denominator) {
  if (denominator == 0.0) return f > 0.0 ? kInf : 1.0;
  return f / denominator;
}

double raw_of(double f, double numerator, const std::string& id) {
  if (f == 0.0) {
    if (numerator > 0.0)
      throw Error(ErrorKind::SystemNeverFails,
                  "achievement worth is undefined: the system never fails", id);
    return 1.0;
  }
  return numerator / f;
}

ComponentImportance component(const Forcer& forcer, double f, std::size_t k,
                              const std::string& id, Forcing forcing) {
  double failed = forcer.with(k, State::Failed);
  double working = forcer.with(k, State::Working);
  bool swapped = forcing == Forcing::Swapped;
  ComponentImportance c;
  c.event = id;
  c.birnbaum = failed - working;
  c.fussell_vesely = fv_of(f, swapped ? failed : working, id);
  c.rrw = rrw_of(f, swapped ? failed : working);
  c.raw = raw_of(f, swapped ? working : failed, id);
  return c;
}

std::vector<std::string> order_by(const std::vector<std::pair<std::string, double>>& values) {
  std::vector<std::pair<std::string, double>> sorted = values;
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  std::vector<std::string> out;
  out.reserve(sorted.size());
  for (auto& [id, v] : sorted) out.push_back(id);
  return out;
}

std::pair<std::size_t, std::size_t> distinct_pair(const FaultTree& tree,
                                                  std::string_view i,
                                                  std::string_view j) {
  std::size_t a = tree.require_index(i);
  std::size_t b = tree.require_index(j);
  if (a == b)
    throw Error(ErrorKind::SameIndex, "components must differ", std::string(i));
  return {a, b};
}

}  // namespace

Measure parse_measure(std::string_view name) {
  if (name == "birnbaum") return Measure::Birnbaum;
  if (name == "fv" || name == "fussell_vesely") return Measure::FussellVesely;
  if (name == "rrw") return Measure::RiskReductionWorth;
  if (name == "raw") return Measure::RiskAchievementWorth;
  throw Error(ErrorKind::InvalidArgument,
              "unknown measure '" + std::string(name) + "'");
}

std::string_view to_string(Measure m) noexcept {
  switch (m) {
    case Measure::Birnbaum: return "birnbaum";
    case Measure::FussellVesely: return "fussell_vesely";
    case Measure::RiskReductionWorth: return "rrw";
    case Measure::RiskAchievementWorth: return "raw";
  }
  return "";
}

double ComponentImportance::value(Measure m) const noexcept {
  switch (m) {
    case Measure::Birnbaum: return birnbaum;
    case Measure::FussellVesely: return fussell_vesely;
    case Measure::RiskReductionWorth: return rrw;
    case Measure::RiskAchievementWorth: return raw;
  }
  return 0.0;
}

std::size_t ImportanceReport::rank_of(std::string_view id) const {
  auto it = std::find(ranking.begin(), ranking.end(), id);
  if (it == ranking.end())
    throw Error(ErrorKind::UnknownEvent, "unknown event '" + std::string(id) + "'",
                std::string(id));
  return static_cast<std::size_t>(it - ranking.begin()) + 1;
}

double birnbaum(const FaultTree& tree, const ProbAssignment& probs,
                std::string_view id, const Limits& limits) {
  std::size_t k = tree.require_index(id);
  Forcer forcer(tree, probability_vector(tree, probs), limits);
  return forcer.with(k, State::Failed) - forcer.with(k, State::Working);
}

double birnbaum(const FaultTree& tree, TimePoint t, std::string_view id,
                const Limits& limits) {
  return birnbaum(tree, failure_probabilities(tree, t), id, limits);
}

double mixed_second(const FaultTree& tree, const ProbAssignment& probs,
                    std::string_view i, std::string_view j, const Limits& limits) {
  auto [a, b] = distinct_pair(tree, i, j);
  Forcer forcer(tree, probability_vector(tree, probs), limits);
  constexpr State F = State::Failed;
  constexpr State W = State::Working;
  // Grouped so that swapping i and j gives the same bits.
  return (forcer.with(a, F, b, F) + forcer.with(a, W, b, W)) -
         (forcer.with(a, F, b, W) + forcer.with(a, W, b, F));
}

bool permutation_equivalent(const FaultTree& tree, std::string_view i,
                            std::string_view j, const Limits& limits) {
  distinct_pair(tree, i, j);
  require_enumerable(tree.size() - 2, limits);
  ForcedView ij = force(tree, {{std::string(i), State::Failed},
                               {std::string(j), State::Working}});
  ForcedView ji = force(tree, {{std::string(i), State::Working},
                               {std::string(j), State::Failed}});
  std::vector<std::size_t> free = ij.free_events();
  StateBits count = StateBits{1} << free.size();
  for (StateBits r = 0; r < count; ++r) {
    StateBits s = 0;
    for (std::size_t k = 0; k < free.size(); ++k)
      if ((r >> k) & 1U) s |= StateBits{1} << free[k];
    if (ij.phi(s) != ji.phi(s)) return false;
  }
  return true;
}

double fussell_vesely(const FaultTree& tree, TimePoint t, std::string_view id,
                      Forcing forcing, const Limits& limits) {
  std::size_t k = tree.require_index(id);
  Forcer forcer(tree, probs_at(tree, t), limits);
  double f = forcer.base();
  State pinned = forcing == Forcing::Swapped ? State::Failed : State::Working;
  return fv_of(f, forcer.with(k, pinned), std::string(id));
}

double rrw(const FaultTree& tree, TimePoint t, std::string_view id,
           Forcing forcing, const Limits& limits) {
  std::size_t k = tree.require_index(id);
  Forcer forcer(tree, probs_at(tree, t), limits);
  State pinned = forcing == Forcing::Swapped ? State::Failed : State::Working;
  return rrw_of(forcer.base(), forcer.with(k, pinned));
}

double raw(const FaultTree& tree, TimePoint t, std::string_view id,
           Forcing forcing, const Limits& limits) {
  std::size_t k = tree.require_index(id);
  Forcer forcer(tree, probs_at(tree, t), limits);
  State pinned = forcing == Forcing::Swapped ? State::Working : State::Failed;
  return raw_of(forcer.base(), forcer.with(k, pinned), std::string(id));
}

ImportanceReport importance_report(const FaultTree& tree, TimePoint t,
                                   Measure ranked_by, Forcing forcing,
                                   const Limits& limits) {
  Forcer forcer(tree, probs_at(tree, t), limits);
  ImportanceReport report;
  report.t = t.hours();
  report.unreliability = forcer.base();
  report.ranked_by = ranked_by;
  std::vector<std::pair<std::string, double>> values;
  for (std::size_t k = 0; k < tree.size(); ++k) {
    const std::string& id = tree.events()[k].id;
    report.components.push_back(
        component(forcer, report.unreliability, k, id, forcing));
    values.emplace_back(id, report.components.back().value(ranked_by));
  }
  report.ranking = order_by(values);
  return report;
}

std::vector<std::string> rank(const FaultTree& tree, TimePoint t, Measure measure,
                              Forcing forcing, const Limits& limits) {
  Forcer forcer(tree, probs_at(tree, t), limits);
  double f = forcer.base();
  std::vector<std::pair<std::string, double>> values;
  for (std::size_t k = 0; k < tree.size(); ++k) {
    const std::string& id = tree.events()[k].id;
    double failed = forcer.with(k, State::Failed);
    double working = forcer.with(k, State::Working);
    bool swapped = forcing == Forcing::Swapped;
    double v = 0.0;
    switch (measure) {
      case Measure::Birnbaum: v = failed - working; break;
      case Measure::FussellVesely: v = fv_of(f, swapped ? failed : working, id); break;
      case Measure::RiskReductionWorth: v = rrw_of(f, swapped ? failed : working); break;
      case Measure::RiskAchievementWorth: v = raw_of(f, swapped ? working : failed, id); break;
    }
    values.emplace_back(id, v);
  }
  return order_by(values);
}

std::string_view to_string(MixedPartialSign s) noexcept {
  return s == MixedPartialSign::NonNegativeEverywhere ? "nonnegative_everywhere"
                                                      : "indeterminate";
}

std::string_view to_string(ProbOrdering o) noexcept {
  switch (o) {
    case ProbOrdering::ILeJ: return "i_le_j";
    case ProbOrdering::JLeI: return "j_le_i";
    case ProbOrdering::Equal: return "equal";
  }
  return "";
}

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::ILeJ: return "birnbaum_i_le_j";
    case Verdict::JLeI: return "birnbaum_j_le_i";
    case Verdict::TheoremInapplicable: return "theorem_inapplicable";
  }
  return "";
}

RelativeComparison relative_compare(const FaultTree& tree, TimePoint t,
                                    std::string_view i, std::string_view j,
                                    const Limits& limits) {
  auto [a, b] = distinct_pair(tree, i, j);
  RelativeComparison out;
  out.i = std::string(i);
  out.j = std::string(j);
  out.permutation_equivalent = permutation_equivalent(tree, i, j, limits);

  // At a vertex every probability is 0 or 1, so the mixed partial reduces
  // to the same alternating sum over phi.
  ForcedView ff = force(tree, {{out.i, State::Failed}, {out.j, State::Failed}});
  ForcedView fw = force(tree, {{out.i, State::Failed}, {out.j, State::Working}});
  ForcedView wf = force(tree, {{out.i, State::Working}, {out.j, State::Failed}});
  ForcedView ww = force(tree, {{out.i, State::Working}, {out.j, State::Working}});
  std::vector<std::size_t> free = ff.free_events();
  int lowest = 1;
  StateBits count = StateBits{1} << free.size();
  for (StateBits r = 0; r < count; ++r) {
    StateBits s = 0;
    for (std::size_t k = 0; k < free.size(); ++k)
      if ((r >> k) & 1U) s |= StateBits{1} << free[k];
    int v = int{ff.phi(s)} - int{fw.phi(s)} - int{wf.phi(s)} + int{ww.phi(s)};
    lowest = std::min(lowest, v);
  }
  out.min_mixed_partial = lowest;
  out.mixed_partial_sign = lowest >= 0 ? MixedPartialSign::NonNegativeEverywhere
                                       : MixedPartialSign::Indeterminate;

  Forcer forcer(tree, probs_at(tree, t), limits);
  out.prob_i = forcer.probs()[a];
  out.prob_j = forcer.probs()[b];
  out.prob_ordering = out.prob_i == out.prob_j ? ProbOrdering::Equal
                      : out.prob_i < out.prob_j ? ProbOrdering::ILeJ
                                                : ProbOrdering::JLeI;
  out.birnbaum_i = forcer.with(a, State::Failed) - forcer.with(a, State::Working);
  out.birnbaum_j = forcer.with(b, State::Failed) - forcer.with(b, State::Working);

  if (out.permutation_equivalent &&
      out.mixed_partial_sign == MixedPartialSign::NonNegativeEverywhere) {
    if (out.prob_i <= out.prob_j) {
      out.verdict = Verdict::JLeI;
      out.verdict_holds = out.birnbaum_j <= out.birnbaum_i + kVerdictTolerance;
    } else {
      out.verdict = Verdict::ILeJ;
      out.verdict_holds = out.birnbaum_i <= out.birnbaum_j + kVerdictTolerance;
    }
  }
  return out;
}

}  // namespace ftcrit
