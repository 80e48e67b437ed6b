/*
 * Copyright 2026 The ftcrit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to the ftcrit fault-tree library.
 *
 * Every fallible call returns an ftc_status. On failure the calling
 * thread's last error (ftc_last_error_kind / ftc_last_error_message) is
 * set; it stays valid until the next failing call on that thread. Output
 * parameters are left untouched on failure.
 *
 * Handles are opaque and immutable once created, so one tree may be
 * shared by several threads. Strings returned through `char**` are owned
 * by the caller and released with ftc_string_free.
 *
 * Event indices follow declaration order in the FTDL source. Packed state
 * words use bit k for event k (1 = failed).
 */

#ifndef FTCRIT_FTCRIT_H_
#define FTCRIT_FTCRIT_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define FTC_API __declspec(dllexport)
#else
#  define FTC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ftc_status {
  FTC_OK = 0,
  FTC_DUPLICATE_EVENT_ID,
  FTC_DANGLING_REFERENCE,
  FTC_UNUSED_EVENT,
  FTC_EMPTY_TREE,
  FTC_INVALID_RATE,
  FTC_TOO_MANY_EVENTS,
  FTC_MISSING_STATE,
  FTC_MISSING_PROBABILITY,
  FTC_UNKNOWN_EVENT,
  FTC_PROBABILITY_OUT_OF_RANGE,
  FTC_NOT_FREE_VIOLATION,
  FTC_EXPANSION_TOO_LARGE,
  FTC_NEGATIVE_RATE,
  FTC_NEGATIVE_TIME,
  FTC_TOO_MANY_CUTS,
  FTC_NUMERICAL_INSTABILITY,
  FTC_SAME_INDEX,
  FTC_SYSTEM_NEVER_FAILS,
  FTC_NO_FAILURE_SAMPLES,
  FTC_INVALID_ARGUMENT,
  FTC_PARSE_ERROR,
  FTC_IO_ERROR,
  FTC_BUFFER_TOO_SMALL,
  FTC_INTERNAL_ERROR
} ftc_status;

/* Name of a status, e.g. "TooManyEvents". Never NULL. */
FTC_API const char* ftc_status_name(ftc_status status);

/* Last failure on this thread: kind name and human-readable detail. Parse
 * errors carry "line:column: Lexical|Syntax|Semantic: message". */
FTC_API const char* ftc_last_error_kind(void);
FTC_API const char* ftc_last_error_message(void);

FTC_API const char* ftc_version(void);
FTC_API void ftc_string_free(char* s);

/* ---- trees ------------------------------------------------------------ */

typedef struct ftc_tree ftc_tree;

typedef struct ftc_limits {
  size_t max_events;    /* exhaustive enumeration cap (<= 63) */
  size_t max_pie_cuts;  /* inclusion-exclusion cut cap */
  size_t max_expansion; /* cut-set expansion row cap */
} ftc_limits;

FTC_API ftc_limits ftc_default_limits(void);

FTC_API ftc_status ftc_tree_parse(const char* source, size_t length,
                                  ftc_tree** out);
FTC_API ftc_status ftc_tree_load(const char* path, ftc_tree** out);
/* The bundled 16-event level-crossing signaling model. */
FTC_API ftc_status ftc_tree_level_crossing(ftc_tree** out);
FTC_API const char* ftc_level_crossing_source(void);
FTC_API void ftc_tree_free(ftc_tree* tree);

/* Limits used by every analysis on this handle. Not thread-safe against
 * concurrent analyses on the same handle. */
FTC_API ftc_status ftc_tree_set_limits(ftc_tree* tree, const ftc_limits* limits);

FTC_API size_t ftc_tree_event_count(const ftc_tree* tree);
/* Borrowed strings valid for the handle's lifetime; NULL if out of range. */
FTC_API const char* ftc_tree_event_id(const ftc_tree* tree, size_t index);
FTC_API const char* ftc_tree_event_label(const ftc_tree* tree, size_t index);
FTC_API double ftc_tree_event_rate(const ftc_tree* tree, size_t index);
FTC_API ftc_status ftc_tree_event_index(const ftc_tree* tree, const char* id,
                                        size_t* out);
FTC_API int ftc_tree_has_repeated_events(const ftc_tree* tree);
FTC_API int ftc_tree_is_not_free(const ftc_tree* tree);
FTC_API ftc_status ftc_tree_serialize(const ftc_tree* tree, char** out);

/* ---- structure function ------------------------------------------------ */

FTC_API ftc_status ftc_phi(const ftc_tree* tree, uint64_t state, int* out);

/* ---- minimal cut sets --------------------------------------------------- */

typedef struct ftc_cutsets ftc_cutsets;

FTC_API ftc_status ftc_minimal_cut_sets(const ftc_tree* tree, ftc_cutsets** out);
FTC_API void ftc_cutsets_free(ftc_cutsets* cuts);
FTC_API size_t ftc_cutsets_count(const ftc_cutsets* cuts);
FTC_API size_t ftc_cutset_size(const ftc_cutsets* cuts, size_t cut);
/* Event index of the member-th member (ascending index order). */
FTC_API size_t ftc_cutset_member(const ftc_cutsets* cuts, size_t cut,
                                 size_t member);

/* ---- probability -------------------------------------------------------- */

FTC_API ftc_status ftc_exp_cdf(double rate, double t, double* out);
FTC_API ftc_status ftc_unreliability(const ftc_tree* tree, double t, double* out);
/* Unreliability at `count` evenly spaced times 0, t_max/(count-1), ...,
 * t_max. `count` >= 2. */
FTC_API ftc_status ftc_unreliability_curve(const ftc_tree* tree, double t_max,
                                           size_t count, double* times,
                                           double* values);

/* ---- coherence ---------------------------------------------------------- */

typedef struct ftc_coherence {
  int boundary_zero;
  int boundary_one;
  int monotone;
  /* When !monotone: a state where failing `witness_event` repairs the
   * system. */
  uint64_t witness_state;
  size_t witness_event;
  /* Bit k set when event k is irrelevant. */
  uint64_t irrelevant;
  int is_coherent;
} ftc_coherence;

FTC_API ftc_status ftc_check_coherence(const ftc_tree* tree, ftc_coherence* out);

/* ---- importance --------------------------------------------------------- */

typedef enum ftc_measure {
  FTC_MEASURE_BIRNBAUM = 0,
  FTC_MEASURE_FUSSELL_VESELY,
  FTC_MEASURE_RRW,
  FTC_MEASURE_RAW
} ftc_measure;

typedef enum ftc_forcing {
  FTC_FORCING_STANDARD = 0,
  /* Swapped forced states inside Fussell-Vesely, RRW and RAW. */
  FTC_FORCING_SWAPPED
} ftc_forcing;

FTC_API ftc_status ftc_parse_measure(const char* name, ftc_measure* out);

typedef struct ftc_importance_row {
  double birnbaum;
  double fussell_vesely;
  double rrw; /* +inf possible */
  double raw;
  size_t rank; /* 1-based position by the report's measure */
} ftc_importance_row;

/* Fills `rows[k]` for event k, k < count; `count` must equal the event
 * count. `order` (may be NULL) receives event indices in rank order. */
FTC_API ftc_status ftc_importance(const ftc_tree* tree, double t,
                                  ftc_measure rank_by, ftc_forcing forcing,
                                  ftc_importance_row* rows, size_t* order,
                                  size_t count);

FTC_API ftc_status ftc_birnbaum(const ftc_tree* tree, double t, size_t event,
                                double* out);
FTC_API ftc_status ftc_permutation_equivalent(const ftc_tree* tree, size_t i,
                                              size_t j, int* out);

typedef enum ftc_verdict {
  FTC_VERDICT_I_LE_J = 0,
  FTC_VERDICT_J_LE_I,
  FTC_VERDICT_INAPPLICABLE
} ftc_verdict;

typedef enum ftc_prob_ordering {
  FTC_PROB_I_LE_J = 0,
  FTC_PROB_J_LE_I,
  FTC_PROB_EQUAL
} ftc_prob_ordering;

typedef struct ftc_comparison {
  int permutation_equivalent;
  int mixed_partial_nonnegative;
  double min_mixed_partial;
  ftc_prob_ordering prob_ordering;
  ftc_verdict verdict;
  int verdict_holds;
  double prob_i;
  double prob_j;
  double birnbaum_i;
  double birnbaum_j;
} ftc_comparison;

FTC_API ftc_status ftc_relative_compare(const ftc_tree* tree, double t, size_t i,
                                        size_t j, ftc_comparison* out);

/* ---- Monte Carlo -------------------------------------------------------- */

typedef struct ftc_estimate {
  double mean;
  double std_error;
  uint64_t samples;
} ftc_estimate;

FTC_API ftc_status ftc_simulate(const ftc_tree* tree, double t, uint64_t samples,
                                uint64_t seed, ftc_estimate* out);
FTC_API ftc_status ftc_simulate_criticality(const ftc_tree* tree, double t,
                                            uint64_t samples, uint64_t seed,
                                            size_t event, ftc_estimate* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* FTCRIT_FTCRIT_H_ */
