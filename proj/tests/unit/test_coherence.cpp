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

#include <doctest.h>

#include <random>

#include "ftcrit/casestudy.hpp"
#include "ftcrit/coherence.hpp"
#include "ftcrit/error.hpp"
#include "ftcrit/parser.hpp"
#include "ftcrit/prob.hpp"
#include "oracle.hpp"

using namespace ftcrit;

TEST_SUITE("coherence") {

TEST_CASE("case study is coherent") {
  CoherenceReport r = check_coherence(level_crossing());
  CHECK(r.boundary_zero);
  CHECK(r.boundary_one);
  CHECK(r.monotone);
  CHECK_FALSE(r.witness.has_value());
  CHECK(r.irrelevant.empty());
  CHECK(r.is_coherent);
}

TEST_CASE("negation flips both boundaries") {
  FaultTree t = parse_ftdl("event x1 rate 1 \"\"\ntop NOT(x1)");
  CHECK(check_boundaries(t) == std::pair{false, false});
}

TEST_CASE("constant-zero tree misses the upper boundary") {
  FaultTree t = parse_ftdl("top OR()");
  auto [zero, one] = check_boundaries(t);
  CHECK(zero);
  CHECK_FALSE(one);
  CHECK_FALSE(check_coherence(t).is_coherent);
}

TEST_CASE("xor is not monotone, with the lowest witness") {
  FaultTree t = parse_ftdl("event x1 rate 1 \"\"\nevent x2 rate 1 \"\"\ntop XOR(x1, x2)");
  MonotoneResult m = check_monotone(t);
  CHECK_FALSE(m.monotone);
  REQUIRE(m.witness.has_value());
  CHECK(m.witness->state == 1);
  CHECK(m.witness->event == "x2");
  CHECK(m.witness->states.get("x1") == State::Failed);
  CHECK(m.witness->states.get("x2") == State::Working);
  CHECK(phi(t, m.witness->state));
  CHECK_FALSE(phi(t, m.witness->state | 2));
}

TEST_CASE("conjunction is monotone") {
  CHECK(check_monotone(parse_ftdl("event x1 rate 1 \"\"\nevent x2 rate 1 \"\"\ntop AND(x1, x2)")).monotone);
}

TEST_CASE("relevance") {
  CHECK(check_relevance(parse_ftdl("event x1 rate 1 \"\"\ntop OR(x1)")).empty());
  CHECK(check_relevance(parse_ftdl("event x1 rate 1 \"\"\nevent x2 rate 1 \"\"\n"
                                   "top AND(OR(x1, x1), x2)"))
            .empty());
  FaultTree absorbed = parse_ftdl("event a rate 1 \"\"\nevent b rate 1 \"\"\ntop OR(a, AND(a, b))");
  CHECK(check_relevance(absorbed) == std::vector<std::string>{"b"});
  CoherenceReport r = check_coherence(absorbed);
  CHECK(r.monotone);
  CHECK_FALSE(r.is_coherent);
}

TEST_CASE("enumeration cap") {
  try {
    check_coherence(level_crossing(), Limits{12});
    FAIL("cap ignored");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TooManyEvents);
  }
}

TEST_CASE("report fields are consistent on random trees") {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 300; ++k) {
    testing::RandomTreeOptions opts;
    opts.allow_not = k % 2 == 0;
    opts.max_events = 8;
    FaultTree t = testing::random_tree(rng, opts);
    CoherenceReport r = check_coherence(t);
    CHECK(r.is_coherent ==
          (r.boundary_zero && r.boundary_one && r.monotone && r.irrelevant.empty()));
    CHECK(r.monotone == !r.witness.has_value());
    if (t.not_free()) CHECK(r.monotone);
    // Independent monotonicity check through the reference evaluator.
    bool mono = true;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << t.size()) && mono; ++s)
      for (std::size_t e = 0; e < t.size(); ++e)
        if (!((s >> e) & 1U) && testing::ref_phi(t, testing::ref_state(t, s)) &&
            !testing::ref_phi(t, testing::ref_state(t, s | (std::uint64_t{1} << e))))
          mono = false;
    CHECK(r.monotone == mono);
  }
}

TEST_CASE("monotone trees have unreliability nondecreasing in each probability") {
  for (const std::string& path : testing::corpus_files()) {
    FaultTree t = load_ftdl(path);
    if (!check_monotone(t).monotone) continue;
    CAPTURE(path);
    ProbAssignment p;
    for (const BasicEvent& e : t.events()) p[e.id] = 0.3;
    for (const BasicEvent& e : t.events()) {
      ProbAssignment q = p;
      double prev = -1.0;
      for (int g = 0; g <= 10; ++g) {
        q[e.id] = g / 10.0;
        double f = unreliability(t, q);
        CHECK(f >= prev - 1e-15);
        prev = f;
      }
    }
  }
}

}  // TEST_SUITE
