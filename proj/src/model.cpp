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

#include "ftcrit/model.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "ftcrit/error.hpp"

namespace ftcrit {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DuplicateEventId: return "DuplicateEventId";
    case ErrorKind::DanglingReference: return "DanglingReference";
    case ErrorKind::UnusedEvent: return "UnusedEvent";
    case ErrorKind::EmptyTree: return "EmptyTree";
    case ErrorKind::InvalidRate: return "InvalidRate";
    case ErrorKind::TooManyEvents: return "TooManyEvents";
    case ErrorKind::MissingState: return "MissingState";
    case ErrorKind::MissingProbability: return "MissingProbability";
    case ErrorKind::UnknownEvent: return "UnknownEvent";
    case ErrorKind::ProbabilityOutOfRange: return "ProbabilityOutOfRange";
    case ErrorKind::NotFreeViolation: return "NotFreeViolation";
    case ErrorKind::ExpansionTooLarge: return "ExpansionTooLarge";
    case ErrorKind::NegativeRate: return "NegativeRate";
    case ErrorKind::NegativeTime: return "NegativeTime";
    case ErrorKind::TooManyCuts: return "TooManyCuts";
    case ErrorKind::NumericalInstability: return "NumericalInstability";
    case ErrorKind::SameIndex: return "SameIndex";
    case ErrorKind::SystemNeverFails: return "SystemNeverFails";
    case ErrorKind::NoFailureSamples: return "NoFailureSamples";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::Io: return "IoError";
  }
  return "Unknown";
}

Gate Gate::Atomic(std::string event) {
  return Gate(GateKind::Atomic, {}, std::move(event));
}

Gate Gate::And(std::vector<Gate> children) {
  return Gate(GateKind::And, std::move(children), {});
}

Gate Gate::Or(std::vector<Gate> children) {
  return Gate(GateKind::Or, std::move(children), {});
}

Gate Gate::Not(Gate child) {
  std::vector<Gate> children;
  children.push_back(std::move(child));
  return Gate(GateKind::Not, std::move(children), {});
}

Gate Gate::Nand(std::vector<Gate> negated, std::vector<Gate> plain) {
  std::vector<Gate> children;
  children.reserve(negated.size() + plain.size());
  for (Gate& g : negated) children.push_back(Not(std::move(g)));
  std::size_t count = children.size();
  for (Gate& g : plain) children.push_back(std::move(g));
  Gate gate = And(std::move(children));
  gate.sugar_ = Sugar::Nand;
  gate.sugar_negated_ = count;
  return gate;
}

Gate Gate::Nor(std::vector<Gate> children) {
  Gate gate = Not(Or(std::move(children)));
  gate.sugar_ = Sugar::Nor;
  return gate;
}

Gate Gate::Xor(Gate a, Gate b) {
  Gate left = And({Not(a), b});
  Gate right = And({std::move(a), Not(std::move(b))});
  Gate gate = Or({std::move(left), std::move(right)});
  gate.sugar_ = Sugar::Xor;
  return gate;
}

bool Gate::not_free() const {
  if (kind_ == GateKind::Not) return false;
  return std::all_of(children_.begin(), children_.end(),
                     [](const Gate& c) { return c.not_free(); });
}

bool operator==(const Gate& a, const Gate& b) {
  return a.kind_ == b.kind_ && a.event_ == b.event_ &&
         a.children_ == b.children_;
}

namespace detail {

Circuit::Circuit(const Gate& top,
                 const std::unordered_map<std::string, std::size_t>& index)
    : leaf_counts_(index.size(), 0) {
  root_ = add(top, index);
}

std::uint32_t Circuit::add(
    const Gate& gate,
    const std::unordered_map<std::string, std::size_t>& index) {
  std::vector<std::uint32_t> kids;
  kids.reserve(gate.children().size());
  for (const Gate& child : gate.children()) kids.push_back(add(child, index));

  Node node{gate.kind(), 0, static_cast<std::uint32_t>(children_.size()),
            static_cast<std::uint32_t>(kids.size())};
  if (gate.kind() == GateKind::Atomic) {
    std::size_t k = index.at(gate.event());
    node.event = static_cast<std::uint32_t>(k);
    ++leaf_counts_[k];
  }
  children_.insert(children_.end(), kids.begin(), kids.end());
  nodes_.push_back(node);
  return static_cast<std::uint32_t>(nodes_.size() - 1);
}

double Circuit::probability(const std::vector<double>& probs) const {
  return node_probability(root_, probs);
}

double Circuit::node_probability(std::uint32_t n,
                                 const std::vector<double>& probs) const {
  const Node& node = nodes_[n];
  switch (node.kind) {
    case GateKind::Atomic:
      return probs[node.event];
    case GateKind::Not:
      return 1.0 - node_probability(children_[node.first], probs);
    case GateKind::And: {
      double product = 1.0;
      for (std::uint32_t c = 0; c < node.count; ++c)
        product *= node_probability(children_[node.first + c], probs);
      return product;
    }
    case GateKind::Or: {
      double survive = 1.0;
      for (std::uint32_t c = 0; c < node.count; ++c)
        survive *= 1.0 - node_probability(children_[node.first + c], probs);
      return 1.0 - survive;
    }
  }
  return 0.0;
}

}  // namespace detail

namespace {

void collect_references(const Gate& gate, std::vector<std::string>* out) {
  if (gate.kind() == GateKind::Atomic) {
    out->push_back(gate.event());
    return;
  }
  for (const Gate& child : gate.children()) collect_references(child, out);
}

}  // namespace

FaultTree::FaultTree(std::vector<BasicEvent> events, Gate top)
    : events_(std::move(events)), top_(std::move(top)) {
  for (std::size_t k = 0; k < events_.size(); ++k) index_[events_[k].id] = k;
  circuit_ = detail::Circuit(top_, index_);
  repeated_ = std::any_of(circuit_.leaf_counts().begin(),
                          circuit_.leaf_counts().end(),
                          [](std::size_t n) { return n >= 2; });
  not_free_ = top_.not_free();
}

std::optional<std::size_t> FaultTree::index_of(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t FaultTree::require_index(std::string_view id) const {
  if (auto k = index_of(id)) return *k;
  throw Error(ErrorKind::UnknownEvent,
              "unknown event '" + std::string(id) + "'", std::string(id));
}

FaultTree build_tree(std::vector<BasicEvent> events, Gate top) {
  std::set<std::string, std::less<>> declared;
  for (const BasicEvent& e : events) {
    if (e.id.empty())
      throw Error(ErrorKind::InvalidArgument, "event id must be non-empty");
    if (!declared.insert(e.id).second)
      throw Error(ErrorKind::DuplicateEventId,
                  "duplicate event id '" + e.id + "'", e.id);
    if (std::isnan(e.rate) || e.rate < 0.0)
      throw Error(ErrorKind::NegativeRate,
                  "event '" + e.id + "' has a negative failure rate", e.id);
    if (!std::isfinite(e.rate))
      throw Error(ErrorKind::InvalidRate,
                  "event '" + e.id + "' has a non-finite failure rate", e.id);
  }

  std::vector<std::string> refs;
  collect_references(top, &refs);
  std::set<std::string, std::less<>> used;
  for (const std::string& id : refs) {
    if (!declared.contains(id))
      throw Error(ErrorKind::DanglingReference,
                  "gate references undeclared event '" + id + "'", id);
    used.insert(id);
  }
  if (used.empty() && !events.empty())
    throw Error(ErrorKind::EmptyTree, "top gate references no events",
                events.front().id);
  for (const BasicEvent& e : events) {
    if (!used.contains(e.id))
      throw Error(ErrorKind::UnusedEvent,
                  "event '" + e.id + "' is declared but never used", e.id);
  }
  return FaultTree(std::move(events), std::move(top));
}

std::optional<State> StateVector::get(std::string_view id) const {
  auto it = states_.find(id);
  if (it == states_.end()) return std::nullopt;
  return it->second;
}

StateVector to_state_vector(const FaultTree& tree, StateBits bits) {
  StateVector::Map states;
  for (std::size_t k = 0; k < tree.size(); ++k)
    states.emplace(tree.events()[k].id,
                   ((bits >> k) & 1U) ? State::Failed : State::Working);
  return StateVector(std::move(states));
}

StateBits to_bits(const FaultTree& tree, const StateVector& state) {
  require_enumerable(tree.size(), Limits{kMaxEnumerableEvents});
  StateBits bits = 0;
  for (std::size_t k = 0; k < tree.size(); ++k) {
    const std::string& id = tree.events()[k].id;
    auto s = state.get(id);
    if (!s)
      throw Error(ErrorKind::MissingState,
                  "state vector has no entry for event '" + id + "'", id);
    if (*s == State::Failed) bits |= StateBits{1} << k;
  }
  return bits;
}

void require_enumerable(std::size_t count, const Limits& limits) {
  std::size_t cap = std::min(limits.max_events, kMaxEnumerableEvents);
  if (count > cap)
    throw Error(ErrorKind::TooManyEvents,
                std::to_string(count) + " events exceed the enumeration cap of " +
                    std::to_string(cap));
}

StateRange all_states(const FaultTree& tree, const Limits& limits) {
  require_enumerable(tree.size(), limits);
  return StateRange(tree, StateBits{1} << tree.size());
}

}  // namespace ftcrit
