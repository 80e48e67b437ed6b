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

#include "ftcrit/prob.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "ftcrit/error.hpp"
#include "numeric.hpp"

namespace ftcrit {

namespace {

constexpr double kPieSlack = 1e-9;

void require_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw Error(ErrorKind::ProbabilityOutOfRange,
                "probability " + std::to_string(p) + " is outside [0, 1]");
}

void require_probabilities(std::span<const double> probs) {
  for (double p : probs) require_probability(p);
}

}  // namespace

TimePoint::TimePoint(double hours) : hours_(hours) {
  if (!(hours >= 0.0))
    throw Error(ErrorKind::NegativeTime, "time must be nonnegative");
}

double exp_cdf(double rate, TimePoint t) {
  if (!(rate >= 0.0))
    throw Error(ErrorKind::NegativeRate, "failure rate must be nonnegative");
  double f = -std::expm1(-rate * t.hours());
  return std::clamp(f, 0.0, 1.0);
}

double and_prob(std::span<const double> probs) {
  require_probabilities(probs);
  double product = 1.0;
  for (double p : probs) product *= p;
  return product;
}

double or_prob(std::span<const double> probs) {
  require_probabilities(probs);
  double survive = 1.0;
  for (double p : probs) survive *= 1.0 - p;
  return 1.0 - survive;
}

double nand_prob(std::span<const double> neg, std::span<const double> pos) {
  require_probabilities(neg);
  require_probabilities(pos);
  double product = 1.0;
  for (double p : neg) product *= 1.0 - p;
  for (double p : pos) product *= p;
  return product;
}

double nor_prob(std::span<const double> probs) { return 1.0 - or_prob(probs); }

double xor_prob(double a, double b) {
  require_probability(a);
  require_probability(b);
  return (1.0 - a) * b + a * (1.0 - b);
}

ProbAssignment failure_probabilities(const FaultTree& tree, TimePoint t) {
  ProbAssignment out;
  for (const BasicEvent& e : tree.events()) out.emplace(e.id, exp_cdf(e.rate, t));
  return out;
}

namespace {

using Word = EventSet::Word;

struct PieWalk {
  const std::vector<EventSet>& cuts;
  const std::vector<double>& probs;
  std::size_t words;
  std::vector<std::vector<Word>> unions;  // unions[d]: union at subset size d
  std::vector<detail::CompensatedSum> by_size;

  void walk(std::size_t start, std::size_t depth, double product) {
    const std::vector<Word>& current = unions[depth];
    std::vector<Word>& next = unions[depth + 1];
    for (std::size_t c = start; c < cuts.size(); ++c) {
      const std::vector<Word>& cut = cuts[c].words();
      double term = product;
      for (std::size_t w = 0; w < words; ++w) {
        Word fresh = cut[w] & ~current[w];
        next[w] = current[w] | cut[w];
        while (fresh) {
          term *= probs[w * EventSet::kWordBits +
                        static_cast<std::size_t>(std::countr_zero(fresh))];
          fresh &= fresh - 1;
        }
      }
      by_size[depth + 1].add(term);
      // Every superset of a zero-probability union contributes zero.
      if (term != 0.0) walk(c + 1, depth + 1, term);
    }
  }
};

}  // namespace

double pie_probability(const CutSetForm& form, const std::vector<double>& probs,
                       const Limits& limits) {
  std::size_t m = form.cuts.size();
  if (m > limits.max_pie_cuts)
    throw Error(ErrorKind::TooManyCuts,
                std::to_string(m) + " cut sets exceed the inclusion-exclusion cap of " +
                    std::to_string(limits.max_pie_cuts));
  if (probs.size() != form.event_ids.size())
    throw Error(ErrorKind::InvalidArgument,
                "probability vector does not match the cut-set universe");
  require_probabilities(probs);
  if (m == 0) return 0.0;

  std::size_t words = form.cuts.front().words().size();
  PieWalk walk{form.cuts, probs, words,
               std::vector<std::vector<Word>>(m + 1, std::vector<Word>(words, 0)),
               std::vector<detail::CompensatedSum>(m + 1)};
  walk.walk(0, 0, 1.0);

  detail::CompensatedSum total;
  for (std::size_t k = 1; k <= m; ++k) {
    double v = walk.by_size[k].value();
    total.add(k % 2 == 1 ? v : -v);
  }
  double result = total.value();
  if (result < -kPieSlack || result > 1.0 + kPieSlack)
    throw Error(ErrorKind::NumericalInstability,
                "inclusion-exclusion result " + std::to_string(result) +
                    " is outside [0, 1]");
  return std::clamp(result, 0.0, 1.0);
}

double pie_probability(const CutSetForm& form, const ProbAssignment& probs,
                       const Limits& limits) {
  std::vector<double> p(form.event_ids.size());
  for (std::size_t k = 0; k < p.size(); ++k) {
    const std::string& id = form.event_ids[k];
    auto it = probs.find(id);
    if (it == probs.end())
      throw Error(ErrorKind::MissingProbability,
                  "no probability given for event '" + id + "'", id);
    p[k] = it->second;
  }
  return pie_probability(form, p, limits);
}

double bottom_up_probability(const FaultTree& tree, const ProbAssignment& probs) {
  if (tree.repeated_events())
    throw Error(ErrorKind::InvalidArgument,
                "bottom-up evaluation is exact only without repeated events");
  return std::clamp(tree.circuit().probability(probability_vector(tree, probs)),
                    0.0, 1.0);
}

ExactEvaluator::ExactEvaluator(const FaultTree& tree, const Limits& limits)
    : tree_(&tree), limits_(limits), route_(Route::BottomUp) {
  if (!tree.repeated_events()) return;

  const auto& counts = tree.circuit().leaf_counts();
  for (std::size_t k = 0; k < counts.size(); ++k)
    if (counts[k] >= 2) repeated_.push_back(k);

  if (tree.not_free()) {
    try {
      CutSetForm cuts = minimal_cut_sets(tree, limits);
      if (cuts.cuts.size() <= limits.max_pie_cuts) {
        cuts_ = std::move(cuts);
        route_ = Route::CutSetsPie;
        return;
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::ExpansionTooLarge) throw;
    }
  }
  require_enumerable(repeated_.size(), limits);
  route_ = Route::Conditioning;
}

double ExactEvaluator::operator()(const std::vector<double>& probs) const {
  if (probs.size() != tree_->size())
    throw Error(ErrorKind::InvalidArgument,
                "probability vector does not match the tree's events");
  require_probabilities(probs);
  switch (route_) {
    case Route::BottomUp:
      return std::clamp(tree_->circuit().probability(probs), 0.0, 1.0);
    case Route::CutSetsPie:
      return pie_probability(*cuts_, probs, limits_);
    case Route::Conditioning:
      return conditioned(probs);
  }
  return 0.0;
}

double ExactEvaluator::operator()(const ForcedView& view,
                                  std::vector<double> probs) const {
  for (std::size_t k = 0; k < probs.size(); ++k) {
    if ((view.mask() >> k) & 1U) probs[k] = ((view.failed() >> k) & 1U) ? 1.0 : 0.0;
  }
  return (*this)(probs);
}

// Once every repeated event is pinned, the rest appear once each and the
// gate formulas are exact.
double ExactEvaluator::conditioned(const std::vector<double>& probs) const {
  std::vector<double> pinned = probs;
  detail::CompensatedSum total;
  StateBits count = StateBits{1} << repeated_.size();
  for (StateBits a = 0; a < count; ++a) {
    double weight = 1.0;
    for (std::size_t b = 0; b < repeated_.size(); ++b) {
      std::size_t k = repeated_[b];
      bool failed = (a >> b) & 1U;
      pinned[k] = failed ? 1.0 : 0.0;
      weight *= failed ? probs[k] : 1.0 - probs[k];
    }
    if (weight == 0.0) continue;
    total.add(weight * tree_->circuit().probability(pinned));
  }
  return std::clamp(total.value(), 0.0, 1.0);
}

double unreliability(const FaultTree& tree, const ProbAssignment& probs,
                     const Limits& limits) {
  return ExactEvaluator(tree, limits)(probability_vector(tree, probs));
}

double unreliability(const ForcedView& view, const ProbAssignment& probs,
                     const Limits& limits) {
  const FaultTree& tree = view.tree();
  std::vector<double> p(tree.size(), 0.0);
  for (std::size_t k : view.free_events()) {
    const std::string& id = tree.events()[k].id;
    auto it = probs.find(id);
    if (it == probs.end())
      throw Error(ErrorKind::MissingProbability,
                  "no probability given for event '" + id + "'", id);
    p[k] = it->second;
  }
  return ExactEvaluator(tree, limits)(view, std::move(p));
}

double system_unreliability(const FaultTree& tree, TimePoint t,
                            const Limits& limits) {
  return unreliability(tree, failure_probabilities(tree, t), limits);
}

}  // namespace ftcrit
