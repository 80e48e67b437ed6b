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

// Exercises the shared library through its C header only.

#include <doctest.h>

#include <cmath>
#include <cstring>
#include <limits>
#include <string>
#include <thread>
#include <vector>

#include "ftcrit/ftcrit.h"

namespace {

ftc_tree* parse(const std::string& src) {
  ftc_tree* t = nullptr;
  REQUIRE(ftc_tree_parse(src.data(), src.size(), &t) == FTC_OK);
  return t;
}

const char* kVote =
    "event a rate 0.005 \"A\"\nevent b rate 0.004 \"B\"\nevent c rate 0.006 \"C\"\n"
    "top OR(AND(a, b), AND(a, c), AND(b, c))\n";

}  // namespace

TEST_CASE("status names and version") {
  CHECK(std::string(ftc_status_name(FTC_OK)) == "Ok");
  CHECK(std::string(ftc_status_name(FTC_TOO_MANY_EVENTS)) == "TooManyEvents");
  CHECK(std::string(ftc_status_name(FTC_PARSE_ERROR)) == "ParseError");
  CHECK(std::string(ftc_status_name(FTC_IO_ERROR)) == "IoError");
  CHECK(std::string(ftc_status_name(FTC_BUFFER_TOO_SMALL)) == "BufferTooSmall");
  CHECK(std::string(ftc_status_name(static_cast<ftc_status>(999))) == "Unknown");
  CHECK(std::strlen(ftc_version()) > 0);
}

TEST_CASE("parse errors carry their location") {
  const char* src = "event x1 rate -1 \"bad\"\ntop OR(x1)";
  ftc_tree* t = nullptr;
  CHECK(ftc_tree_parse(src, std::strlen(src), &t) == FTC_PARSE_ERROR);
  CHECK(t == nullptr);
  CHECK(std::string(ftc_last_error_kind()) == "ParseError");
  CHECK(std::string(ftc_last_error_message()).rfind("1:15: Semantic:", 0) == 0);
}

TEST_CASE("null arguments are rejected") {
  CHECK(ftc_tree_parse("x", 1, nullptr) == FTC_INVALID_ARGUMENT);
  double v = 0;
  CHECK(ftc_unreliability(nullptr, 1.0, &v) == FTC_INVALID_ARGUMENT);
  CHECK(ftc_tree_event_count(nullptr) == 0);
  CHECK(ftc_tree_event_id(nullptr, 0) == nullptr);
}

TEST_CASE("tree accessors") {
  ftc_tree* t = parse(kVote);
  CHECK(ftc_tree_event_count(t) == 3);
  CHECK(std::string(ftc_tree_event_id(t, 1)) == "b");
  CHECK(std::string(ftc_tree_event_label(t, 2)) == "C");
  CHECK(ftc_tree_event_rate(t, 0) == 5e-3);
  CHECK(ftc_tree_event_id(t, 3) == nullptr);
  size_t k = 0;
  CHECK(ftc_tree_event_index(t, "c", &k) == FTC_OK);
  CHECK(k == 2);
  CHECK(ftc_tree_event_index(t, "zz", &k) == FTC_UNKNOWN_EVENT);
  CHECK(ftc_tree_has_repeated_events(t) == 1);
  CHECK(ftc_tree_is_not_free(t) == 1);
  char* text = nullptr;
  REQUIRE(ftc_tree_serialize(t, &text) == FTC_OK);
  CHECK(std::string(text) == std::string(kVote));
  ftc_string_free(text);
  ftc_tree_free(t);
}

TEST_CASE("structure function and cut sets") {
  ftc_tree* t = parse(kVote);
  int v = -1;
  CHECK(ftc_phi(t, 0b011, &v) == FTC_OK);
  CHECK(v == 1);
  CHECK(ftc_phi(t, 0b100, &v) == FTC_OK);
  CHECK(v == 0);
  ftc_cutsets* cuts = nullptr;
  REQUIRE(ftc_minimal_cut_sets(t, &cuts) == FTC_OK);
  REQUIRE(ftc_cutsets_count(cuts) == 3);
  CHECK(ftc_cutset_size(cuts, 2) == 2);
  CHECK(ftc_cutset_member(cuts, 2, 0) == 1);
  CHECK(ftc_cutset_member(cuts, 2, 1) == 2);
  CHECK(ftc_cutset_member(cuts, 5, 0) == static_cast<size_t>(-1));
  ftc_cutsets_free(cuts);
  ftc_tree_free(t);
}

TEST_CASE("probabilities") {
  double v = 0;
  CHECK(ftc_exp_cdf(18e-3, 0.0, &v) == FTC_OK);
  CHECK(v == 0.0);
  CHECK(ftc_exp_cdf(-1.0, 1.0, &v) == FTC_NEGATIVE_RATE);
  CHECK(ftc_exp_cdf(1.0, -1.0, &v) == FTC_NEGATIVE_TIME);

  ftc_tree* t = parse(kVote);
  REQUIRE(ftc_unreliability(t, 100.0, &v) == FTC_OK);
  double pa = -std::expm1(-0.5), pb = -std::expm1(-0.4), pc = -std::expm1(-0.6);
  double expect = pa * pb + pa * pc + pb * pc - 2 * pa * pb * pc;
  CHECK(std::abs(v - expect) <= 1e-12);

  std::vector<double> ts(5), fs(5);
  REQUIRE(ftc_unreliability_curve(t, 100.0, 5, ts.data(), fs.data()) == FTC_OK);
  CHECK(ts.front() == 0.0);
  CHECK(ts[2] == 50.0);
  CHECK(ts.back() == 100.0);
  CHECK(fs.front() == 0.0);
  CHECK(fs.back() == v);
  CHECK(ftc_unreliability_curve(t, 100.0, 1, ts.data(), fs.data()) == FTC_INVALID_ARGUMENT);
  ftc_tree_free(t);
}

TEST_CASE("coherence report") {
  const char* src = "event x1 rate 1 \"\"\nevent x2 rate 1 \"\"\nevent x3 rate 1 \"\"\n"
                    "top OR(XOR(x1, x2), AND(x1, x3, NOT(x3)))";
  ftc_tree* t = parse(src);
  ftc_coherence c{};
  REQUIRE(ftc_check_coherence(t, &c) == FTC_OK);
  CHECK(c.boundary_zero == 1);
  CHECK(c.boundary_one == 0);
  CHECK(c.monotone == 0);
  CHECK(c.witness_state == 1);
  CHECK(c.witness_event == 1);
  CHECK(c.irrelevant == 0b100);
  CHECK(c.is_coherent == 0);
  ftc_tree_free(t);
}

TEST_CASE("limits") {
  ftc_tree* t = nullptr;
  REQUIRE(ftc_tree_level_crossing(&t) == FTC_OK);
  ftc_limits lim = ftc_default_limits();
  CHECK(lim.max_events == 24);
  CHECK(lim.max_pie_cuts == 25);
  lim.max_events = 8;
  REQUIRE(ftc_tree_set_limits(t, &lim) == FTC_OK);
  ftc_coherence c{};
  CHECK(ftc_check_coherence(t, &c) == FTC_TOO_MANY_EVENTS);
  CHECK(std::string(ftc_last_error_kind()) == "TooManyEvents");
  lim.max_events = 64;
  CHECK(ftc_tree_set_limits(t, &lim) == FTC_INVALID_ARGUMENT);
  ftc_tree_free(t);
}

TEST_CASE("importance table and ranking") {
  ftc_tree* t = nullptr;
  REQUIRE(ftc_tree_level_crossing(&t) == FTC_OK);
  std::vector<ftc_importance_row> rows(16);
  std::vector<size_t> order(16);
  REQUIRE(ftc_importance(t, 5.0, FTC_MEASURE_BIRNBAUM, FTC_FORCING_STANDARD, rows.data(),
                         order.data(), 16) == FTC_OK);
  CHECK(order[0] == 0);
  CHECK(rows[0].rank == 1);
  for (size_t r = 0; r < 16; ++r) CHECK(rows[order[r]].rank == r + 1);
  double ib = 0;
  REQUIRE(ftc_birnbaum(t, 5.0, 0, &ib) == FTC_OK);
  CHECK(ib == rows[0].birnbaum);
  CHECK(ftc_importance(t, 5.0, FTC_MEASURE_RAW, FTC_FORCING_STANDARD, rows.data(), nullptr, 3) ==
        FTC_BUFFER_TOO_SMALL);
  ftc_measure m{};
  CHECK(ftc_parse_measure("fv", &m) == FTC_OK);
  CHECK(m == FTC_MEASURE_FUSSELL_VESELY);
  CHECK(ftc_parse_measure("nope", &m) == FTC_INVALID_ARGUMENT);

  int eq = -1;
  REQUIRE(ftc_permutation_equivalent(t, 8, 9, &eq) == FTC_OK);
  CHECK(eq == 1);
  REQUIRE(ftc_permutation_equivalent(t, 0, 8, &eq) == FTC_OK);
  CHECK(eq == 0);
  CHECK(ftc_permutation_equivalent(t, 0, 0, &eq) == FTC_SAME_INDEX);
  ftc_tree_free(t);
}

TEST_CASE("infinite worth survives the boundary") {
  const char* src = "event x1 rate 1e-3 \"\"\ntop OR(x1)";
  ftc_tree* t = parse(src);
  ftc_importance_row row{};
  REQUIRE(ftc_importance(t, 10.0, FTC_MEASURE_RRW, FTC_FORCING_STANDARD, &row, nullptr, 1) == FTC_OK);
  CHECK(row.rrw == std::numeric_limits<double>::infinity());
  ftc_tree_free(t);
}

TEST_CASE("relative comparison") {
  ftc_tree* t = nullptr;
  REQUIRE(ftc_tree_level_crossing(&t) == FTC_OK);
  ftc_comparison c{};
  REQUIRE(ftc_relative_compare(t, 5.0, 8, 0, &c) == FTC_OK);
  CHECK(c.permutation_equivalent == 0);
  CHECK(c.verdict == FTC_VERDICT_INAPPLICABLE);
  CHECK(c.prob_ordering == FTC_PROB_I_LE_J);
  CHECK(c.birnbaum_i <= c.birnbaum_j);
  CHECK(ftc_relative_compare(t, 5.0, 99, 0, &c) == FTC_UNKNOWN_EVENT);
  ftc_tree_free(t);
}

TEST_CASE("simulation") {
  ftc_tree* t = parse(kVote);
  ftc_estimate a{}, b{};
  REQUIRE(ftc_simulate(t, 100.0, 50000, 9, &a) == FTC_OK);
  REQUIRE(ftc_simulate(t, 100.0, 50000, 9, &b) == FTC_OK);
  CHECK(a.mean == b.mean);
  CHECK(a.samples == 50000);
  CHECK(ftc_simulate(t, 100.0, 0, 9, &a) == FTC_INVALID_ARGUMENT);
  REQUIRE(ftc_simulate_criticality(t, 100.0, 50000, 9, 0, &a) == FTC_OK);
  CHECK(a.mean > 0.0);
  CHECK(a.mean <= 1.0);
  ftc_tree_free(t);
}

TEST_CASE("last error is per thread") {
  double v = 0;
  CHECK(ftc_exp_cdf(-1.0, 1.0, &v) == FTC_NEGATIVE_RATE);
  std::string other;
  std::thread th([&] {
    ftc_exp_cdf(1.0, -1.0, &v);
    other = ftc_last_error_kind();
  });
  th.join();
  CHECK(other == "NegativeTime");
  CHECK(std::string(ftc_last_error_kind()) == "NegativeRate");
}

TEST_CASE("bundled source matches the handle") {
  ftc_tree* t = nullptr;
  REQUIRE(ftc_tree_level_crossing(&t) == FTC_OK);
  char* text = nullptr;
  REQUIRE(ftc_tree_serialize(t, &text) == FTC_OK);
  CHECK(std::string(text) == ftc_level_crossing_source());
  ftc_string_free(text);
  ftc_tree_free(t);
  CHECK(ftc_tree_load("/nonexistent.ftdl", &t) == FTC_IO_ERROR);
}
