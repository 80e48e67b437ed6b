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

#include "ftcrit/ftcrit.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "ftcrit/casestudy.hpp"
#include "ftcrit/coherence.hpp"
#include "ftcrit/cutset.hpp"
#include "ftcrit/error.hpp"
#include "ftcrit/importance.hpp"
#include "ftcrit/montecarlo.hpp"
#include "ftcrit/parser.hpp"
#include "ftcrit/prob.hpp"

struct ftc_tree {
  ftcrit::FaultTree tree;
  ftcrit::Limits limits;
};

struct ftc_cutsets {
  std::vector<std::vector<std::size_t>> members;
};

namespace {

using ftcrit::Error;
using ftcrit::ErrorKind;

static_assert(static_cast<int>(ErrorKind::DuplicateEventId) + 1 ==
              FTC_DUPLICATE_EVENT_ID);
static_assert(static_cast<int>(ErrorKind::Io) + 1 == FTC_IO_ERROR);

thread_local std::string last_kind;
thread_local std::string last_message;

ftc_status fail(ftc_status status, std::string message) {
  last_kind = ftc_status_name(status);
  last_message = std::move(message);
  return status;
}

template <class Body>
ftc_status guarded(Body&& body) noexcept {
  try {
    body();
    return FTC_OK;
  } catch (const Error& e) {
    return fail(static_cast<ftc_status>(static_cast<int>(e.kind()) + 1), e.what());
  } catch (const std::bad_alloc&) {
    return fail(FTC_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(FTC_INTERNAL_ERROR, e.what());
  } catch (...) {
    return fail(FTC_INTERNAL_ERROR, "unknown failure");
  }
}

ftc_status null_argument() {
  return fail(FTC_INVALID_ARGUMENT, "required argument is NULL");
}

const std::string& event_id(const ftc_tree* tree, std::size_t index) {
  if (index >= tree->tree.size())
    throw Error(ErrorKind::UnknownEvent,
                "event index " + std::to_string(index) + " is out of range");
  return tree->tree.events()[index].id;
}

ftcrit::Forcing to_forcing(ftc_forcing f) {
  return f == FTC_FORCING_SWAPPED ? ftcrit::Forcing::Swapped
                                  : ftcrit::Forcing::Standard;
}

ftcrit::Measure to_measure(ftc_measure m) {
  switch (m) {
    case FTC_MEASURE_BIRNBAUM: return ftcrit::Measure::Birnbaum;
    case FTC_MEASURE_FUSSELL_VESELY: return ftcrit::Measure::FussellVesely;
    case FTC_MEASURE_RRW: return ftcrit::Measure::RiskReductionWorth;
    case FTC_MEASURE_RAW: return ftcrit::Measure::RiskAchievementWorth;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown measure");
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* ftc_status_name(ftc_status status) {
  switch (status) {
    case FTC_OK: return "Ok";
    case FTC_BUFFER_TOO_SMALL: return "BufferTooSmall";
    case FTC_INTERNAL_ERROR: return "InternalError";
    default: break;
  }
  int kind = static_cast<int>(status) - 1;
  if (kind >= 0 && kind <= static_cast<int>(ErrorKind::Io))
    return ftcrit::to_string(static_cast<ErrorKind>(kind)).data();
  return "Unknown";
}

const char* ftc_last_error_kind(void) { return last_kind.c_str(); }
const char* ftc_last_error_message(void) { return last_message.c_str(); }
const char* ftc_version(void) { return "1.0.0"; }
void ftc_string_free(char* s) { std::free(s); }

ftc_limits ftc_default_limits(void) {
  ftcrit::Limits d;
  return {d.max_events, d.max_pie_cuts, d.max_expansion};
}

ftc_status ftc_tree_parse(const char* source, size_t length, ftc_tree** out) {
  if (!out || (!source && length)) return null_argument();
  return guarded([&] {
    ftcrit::FaultTree tree =
        ftcrit::parse_ftdl(std::string_view(source ? source : "", length));
    *out = new ftc_tree{std::move(tree), {}};
  });
}

ftc_status ftc_tree_load(const char* path, ftc_tree** out) {
  if (!path || !out) return null_argument();
  return guarded([&] { *out = new ftc_tree{ftcrit::load_ftdl(path), {}}; });
}

ftc_status ftc_tree_level_crossing(ftc_tree** out) {
  if (!out) return null_argument();
  return guarded([&] { *out = new ftc_tree{ftcrit::level_crossing(), {}}; });
}

const char* ftc_level_crossing_source(void) {
  return ftcrit::level_crossing_ftdl().data();
}

void ftc_tree_free(ftc_tree* tree) { delete tree; }

ftc_status ftc_tree_set_limits(ftc_tree* tree, const ftc_limits* limits) {
  if (!tree || !limits) return null_argument();
  if (limits->max_events > ftcrit::kMaxEnumerableEvents)
    return fail(FTC_INVALID_ARGUMENT, "max_events cannot exceed 63");
  tree->limits = {limits->max_events, limits->max_pie_cuts, limits->max_expansion};
  return FTC_OK;
}

size_t ftc_tree_event_count(const ftc_tree* tree) {
  return tree ? tree->tree.size() : 0;
}

const char* ftc_tree_event_id(const ftc_tree* tree, size_t index) {
  if (!tree || index >= tree->tree.size()) return nullptr;
  return tree->tree.events()[index].id.c_str();
}

const char* ftc_tree_event_label(const ftc_tree* tree, size_t index) {
  if (!tree || index >= tree->tree.size()) return nullptr;
  return tree->tree.events()[index].label.c_str();
}

double ftc_tree_event_rate(const ftc_tree* tree, size_t index) {
  if (!tree || index >= tree->tree.size()) return 0.0;
  return tree->tree.events()[index].rate;
}

ftc_status ftc_tree_event_index(const ftc_tree* tree, const char* id, size_t* out) {
  if (!tree || !id || !out) return null_argument();
  return guarded([&] { *out = tree->tree.require_index(id); });
}

int ftc_tree_has_repeated_events(const ftc_tree* tree) {
  return tree && tree->tree.repeated_events() ? 1 : 0;
}

int ftc_tree_is_not_free(const ftc_tree* tree) {
  return tree && tree->tree.not_free() ? 1 : 0;
}

ftc_status ftc_tree_serialize(const ftc_tree* tree, char** out) {
  if (!tree || !out) return null_argument();
  return guarded([&] { *out = copy_string(ftcrit::serialize_ftdl(tree->tree)); });
}

ftc_status ftc_phi(const ftc_tree* tree, uint64_t state, int* out) {
  if (!tree || !out) return null_argument();
  return guarded([&] {
    ftcrit::require_enumerable(tree->tree.size(),
                               ftcrit::Limits{ftcrit::kMaxEnumerableEvents});
    *out = ftcrit::phi(tree->tree, state) ? 1 : 0;
  });
}

ftc_status ftc_minimal_cut_sets(const ftc_tree* tree, ftc_cutsets** out) {
  if (!tree || !out) return null_argument();
  return guarded([&] {
    ftcrit::CutSetForm form = ftcrit::minimal_cut_sets(tree->tree, tree->limits);
    auto* cuts = new ftc_cutsets;
    for (const ftcrit::EventSet& c : form.cuts) cuts->members.push_back(c.members());
    *out = cuts;
  });
}

void ftc_cutsets_free(ftc_cutsets* cuts) { delete cuts; }

size_t ftc_cutsets_count(const ftc_cutsets* cuts) {
  return cuts ? cuts->members.size() : 0;
}

size_t ftc_cutset_size(const ftc_cutsets* cuts, size_t cut) {
  if (!cuts || cut >= cuts->members.size()) return 0;
  return cuts->members[cut].size();
}

size_t ftc_cutset_member(const ftc_cutsets* cuts, size_t cut, size_t member) {
  if (!cuts || cut >= cuts->members.size() ||
      member >= cuts->members[cut].size())
    return static_cast<size_t>(-1);
  return cuts->members[cut][member];
}

ftc_status ftc_exp_cdf(double rate, double t, double* out) {
  if (!out) return null_argument();
  return guarded([&] { *out = ftcrit::exp_cdf(rate, ftcrit::TimePoint(t)); });
}

ftc_status ftc_unreliability(const ftc_tree* tree, double t, double* out) {
  if (!tree || !out) return null_argument();
  return guarded([&] {
    *out = ftcrit::system_unreliability(tree->tree, ftcrit::TimePoint(t),
                                        tree->limits);
  });
}

ftc_status ftc_unreliability_curve(const ftc_tree* tree, double t_max,
                                   size_t count, double* times, double* values) {
  if (!tree || !times || !values) return null_argument();
  if (count < 2) return fail(FTC_INVALID_ARGUMENT, "a curve needs at least 2 points");
  return guarded([&] {
    ftcrit::TimePoint end(t_max);
    ftcrit::ExactEvaluator eval(tree->tree, tree->limits);
    std::vector<double> ts(count), fs(count);
    for (std::size_t k = 0; k < count; ++k) {
      double t = k + 1 == count
                     ? end.hours()
                     : end.hours() * static_cast<double>(k) /
                           static_cast<double>(count - 1);
      std::vector<double> probs;
      for (const ftcrit::BasicEvent& e : tree->tree.events())
        probs.push_back(ftcrit::exp_cdf(e.rate, ftcrit::TimePoint(t)));
      ts[k] = t;
      fs[k] = eval(probs);
    }
    std::copy(ts.begin(), ts.end(), times);
    std::copy(fs.begin(), fs.end(), values);
  });
}

ftc_status ftc_check_coherence(const ftc_tree* tree, ftc_coherence* out) {
  if (!tree || !out) return null_argument();
  return guarded([&] {
    ftcrit::CoherenceReport r = ftcrit::check_coherence(tree->tree, tree->limits);
    ftc_coherence c{};
    c.boundary_zero = r.boundary_zero;
    c.boundary_one = r.boundary_one;
    c.monotone = r.monotone;
    if (r.witness) {
      c.witness_state = r.witness->state;
      c.witness_event = tree->tree.require_index(r.witness->event);
    }
    for (const std::string& id : r.irrelevant)
      c.irrelevant |= uint64_t{1} << tree->tree.require_index(id);
    c.is_coherent = r.is_coherent;
    *out = c;
  });
}

ftc_status ftc_parse_measure(const char* name, ftc_measure* out) {
  if (!name || !out) return null_argument();
  return guarded([&] {
    switch (ftcrit::parse_measure(name)) {
      case ftcrit::Measure::Birnbaum: *out = FTC_MEASURE_BIRNBAUM; break;
      case ftcrit::Measure::FussellVesely: *out = FTC_MEASURE_FUSSELL_VESELY; break;
      case ftcrit::Measure::RiskReductionWorth: *out = FTC_MEASURE_RRW; break;
      case ftcrit::Measure::RiskAchievementWorth: *out = FTC_MEASURE_RAW; break;
    }
  });
}

ftc_status ftc_importance(const ftc_tree* tree, double t, ftc_measure rank_by,
                          ftc_forcing forcing, ftc_importance_row* rows,
                          size_t* order, size_t count) {
  if (!tree || !rows) return null_argument();
  if (count != tree->tree.size())
    return fail(FTC_BUFFER_TOO_SMALL, "row buffer must hold one row per event");
  return guarded([&] {
    ftcrit::ImportanceReport report = ftcrit::importance_report(
        tree->tree, ftcrit::TimePoint(t), to_measure(rank_by), to_forcing(forcing),
        tree->limits);
    for (std::size_t k = 0; k < count; ++k) {
      const ftcrit::ComponentImportance& c = report.components[k];
      rows[k] = {c.birnbaum, c.fussell_vesely, c.rrw, c.raw, report.rank_of(c.event)};
    }
    if (order) {
      for (std::size_t r = 0; r < count; ++r)
        order[r] = tree->tree.require_index(report.ranking[r]);
    }
  });
}

ftc_status ftc_birnbaum(const ftc_tree* tree, double t, size_t event, double* out) {
  if (!tree || !out) return null_argument();
  return guarded([&] {
    *out = ftcrit::birnbaum(tree->tree, ftcrit::TimePoint(t), event_id(tree, event),
                            tree->limits);
  });
}

ftc_status ftc_permutation_equivalent(const ftc_tree* tree, size_t i, size_t j,
                                      int* out) {
  if (!tree || !out) return null_argument();
  return guarded([&] {
    *out = ftcrit::permutation_equivalent(tree->tree, event_id(tree, i),
                                          event_id(tree, j), tree->limits);
  });
}

ftc_status ftc_relative_compare(const ftc_tree* tree, double t, size_t i, size_t j,
                                ftc_comparison* out) {
  if (!tree || !out) return null_argument();
  return guarded([&] {
    ftcrit::RelativeComparison r =
        ftcrit::relative_compare(tree->tree, ftcrit::TimePoint(t), event_id(tree, i),
                                 event_id(tree, j), tree->limits);
    ftc_comparison c{};
    c.permutation_equivalent = r.permutation_equivalent;
    c.mixed_partial_nonnegative =
        r.mixed_partial_sign == ftcrit::MixedPartialSign::NonNegativeEverywhere;
    c.min_mixed_partial = r.min_mixed_partial;
    c.prob_ordering = r.prob_ordering == ftcrit::ProbOrdering::ILeJ ? FTC_PROB_I_LE_J
                      : r.prob_ordering == ftcrit::ProbOrdering::JLeI
                          ? FTC_PROB_J_LE_I
                          : FTC_PROB_EQUAL;
    c.verdict = r.verdict == ftcrit::Verdict::ILeJ   ? FTC_VERDICT_I_LE_J
                : r.verdict == ftcrit::Verdict::JLeI ? FTC_VERDICT_J_LE_I
                                                     : FTC_VERDICT_INAPPLICABLE;
    c.verdict_holds = r.verdict_holds;
    c.prob_i = r.prob_i;
    c.prob_j = r.prob_j;
    c.birnbaum_i = r.birnbaum_i;
    c.birnbaum_j = r.birnbaum_j;
    *out = c;
  });
}

ftc_status ftc_simulate(const ftc_tree* tree, double t, uint64_t samples,
                        uint64_t seed, ftc_estimate* out) {
  if (!tree || !out) return null_argument();
  return guarded([&] {
    ftcrit::McEstimate e =
        ftcrit::estimate_unreliability(tree->tree, ftcrit::McConfig{samples, seed, t});
    *out = {e.mean, e.std_error, e.samples};
  });
}

ftc_status ftc_simulate_criticality(const ftc_tree* tree, double t,
                                    uint64_t samples, uint64_t seed, size_t event,
                                    ftc_estimate* out) {
  if (!tree || !out) return null_argument();
  return guarded([&] {
    ftcrit::McEstimate e = ftcrit::estimate_criticality(
        tree->tree, ftcrit::McConfig{samples, seed, t}, event_id(tree, event));
    *out = {e.mean, e.std_error, e.samples};
  });
}

}  // extern "C"
