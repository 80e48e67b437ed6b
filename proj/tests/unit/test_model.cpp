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

#include <limits>

#include "ftcrit/error.hpp"
#include "ftcrit/model.hpp"

using namespace ftcrit;

namespace {

std::vector<BasicEvent> events(std::initializer_list<const char*> ids) {
  std::vector<BasicEvent> out;
  for (const char* id : ids) out.push_back({id, "", 1e-3});
  return out;
}

ErrorKind kind_of(std::vector<BasicEvent> ev, Gate top) {
  try {
    build_tree(std::move(ev), std::move(top));
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_SUITE("model") {

TEST_CASE("two events under an Or build a tree without repeats") {
  FaultTree t = build_tree(events({"x1", "x2"}), Gate::Or({Gate::Atomic("x1"), Gate::Atomic("x2")}));
  CHECK(t.size() == 2);
  CHECK_FALSE(t.repeated_events());
  CHECK(t.not_free());
}

TEST_CASE("a repeated leaf is detected") {
  FaultTree t = build_tree(events({"x1"}), Gate::Or({Gate::Atomic("x1"), Gate::Atomic("x1")}));
  CHECK(t.repeated_events());
}

TEST_CASE("validation failures name the offending event") {
  try {
    build_tree(events({"x1", "x2"}), Gate::Or({Gate::Atomic("x1")}));
    FAIL("unused event accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnusedEvent);
    CHECK(e.subject() == "x2");
  }
  CHECK(kind_of(events({"x1", "x1"}), Gate::Atomic("x1")) == ErrorKind::DuplicateEventId);
  CHECK(kind_of(events({"x1"}), Gate::And({Gate::Atomic("x1"), Gate::Atomic("y")})) ==
        ErrorKind::DanglingReference);
  CHECK(kind_of(events({"x1"}), Gate::Or({})) == ErrorKind::EmptyTree);
  CHECK(kind_of({{"x1", "", -1.0}}, Gate::Atomic("x1")) == ErrorKind::NegativeRate);
  CHECK(kind_of({{"x1", "", std::numeric_limits<double>::infinity()}}, Gate::Atomic("x1")) ==
        ErrorKind::InvalidRate);
}

TEST_CASE("a constant tree without events is valid") {
  FaultTree t = build_tree({}, Gate::Or({}));
  CHECK(t.size() == 0);
}

TEST_CASE("derived gates desugar into And, Or and Not") {
  Gate a = Gate::Atomic("a"), b = Gate::Atomic("b");
  Gate x = Gate::Xor(a, b);
  CHECK(x == Gate::Or({Gate::And({Gate::Not(a), b}), Gate::And({a, Gate::Not(b)})}));
  CHECK(x.sugar() == Sugar::Xor);
  CHECK(Gate::Nor({a, b}) == Gate::Not(Gate::Or({a, b})));
  CHECK(Gate::Nand({a}, {b}) == Gate::And({Gate::Not(a), b}));
  CHECK(Gate::Nand({a}, {b}).sugar_negated() == 1);
  CHECK_FALSE(x.not_free());
  CHECK(Gate::And({a, b}).not_free());
}

TEST_CASE("all_states enumerates 2^n vectors in packed order") {
  FaultTree none = build_tree({}, Gate::And({}));
  StateRange r0 = all_states(none);
  CHECK(r0.size() == 1);
  CHECK((*r0.begin()).size() == 0);

  FaultTree two = build_tree(events({"x1", "x2"}), Gate::And({Gate::Atomic("x1"), Gate::Atomic("x2")}));
  std::vector<StateVector> seen(all_states(two).begin(), all_states(two).end());
  REQUIRE(seen.size() == 4);
  CHECK(seen[1].get("x1") == State::Failed);
  CHECK(seen[1].get("x2") == State::Working);
  CHECK(seen[2].get("x2") == State::Failed);
  for (StateBits k = 0; k < 4; ++k) CHECK(to_bits(two, seen[k]) == k);
}

TEST_CASE("all_states respects the enumeration cap") {
  std::vector<BasicEvent> ev;
  std::vector<Gate> leaves;
  for (int k = 0; k < 16; ++k) {
    ev.push_back({"x" + std::to_string(k), "", 0.0});
    leaves.push_back(Gate::Atomic("x" + std::to_string(k)));
  }
  FaultTree t = build_tree(ev, Gate::Or(leaves));
  CHECK(all_states(t).size() == 65536);
  CHECK_THROWS_AS(all_states(t, Limits{10}), Error);
  try {
    all_states(t, Limits{10});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TooManyEvents);
  }
}

TEST_CASE("to_bits rejects a partial vector") {
  FaultTree t = build_tree(events({"x1", "x2"}), Gate::Or({Gate::Atomic("x1"), Gate::Atomic("x2")}));
  StateVector partial;
  partial.set("x1", State::Failed);
  try {
    to_bits(t, partial);
    FAIL("partial vector accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MissingState);
  }
}

TEST_CASE("index lookup") {
  FaultTree t = build_tree(events({"x1", "x2"}), Gate::Or({Gate::Atomic("x2"), Gate::Atomic("x1")}));
  CHECK(t.index_of("x2") == 1u);
  CHECK_FALSE(t.index_of("zz").has_value());
  CHECK_THROWS_AS(t.require_index("zz"), Error);
}

}  // TEST_SUITE
