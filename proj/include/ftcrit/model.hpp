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

/// @file model.hpp
/// Basic events, gates, validated fault trees and component state vectors.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iterator>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ftcrit {

/// Enumeration and expansion bounds shared by the analyses.
struct Limits {
  /// Largest event count any exhaustive 2^n enumeration accepts.
  std::size_t max_events = 24;
  /// Largest cut-set count inclusion-exclusion accepts.
  std::size_t max_pie_cuts = 25;
  /// Largest number of intermediate rows cut-set expansion may create.
  std::size_t max_expansion = 1'000'000;
};

/// States are packed as bits: bit k set means event k (declaration order)
/// has failed. Enumeration never exceeds 63 events, so one word suffices.
using StateBits = std::uint64_t;
inline constexpr std::size_t kMaxEnumerableEvents = 63;

enum class State : std::uint8_t { Working = 0, Failed = 1 };

struct BasicEvent {
  std::string id;
  std::string label;
  double rate = 0.0;  ///< Failure rate, per hour.

  friend bool operator==(const BasicEvent&, const BasicEvent&) = default;
};

enum class GateKind : std::uint8_t { And, Or, Not, Atomic };

/// Which derived constructor a node was desugared from. Serialization uses
/// it for a comment; it takes no part in semantics or equality.
enum class Sugar : std::uint8_t { None, Nand, Nor, Xor };

/// A node of the structure-function AST. Derived gates desugar at
/// construction into And/Or/Not.
class Gate {
 public:
  static Gate Atomic(std::string event);
  static Gate And(std::vector<Gate> children);
  static Gate Or(std::vector<Gate> children);
  static Gate Not(Gate child);
  /// And(map Not negated ++ plain).
  static Gate Nand(std::vector<Gate> negated, std::vector<Gate> plain);
  /// Not(Or(children)).
  static Gate Nor(std::vector<Gate> children);
  /// Or[And[Not a, b], And[a, Not b]].
  static Gate Xor(Gate a, Gate b);

  GateKind kind() const noexcept { return kind_; }
  const std::vector<Gate>& children() const noexcept { return children_; }
  /// Event id of an Atomic node; empty otherwise.
  const std::string& event() const noexcept { return event_; }
  Sugar sugar() const noexcept { return sugar_; }
  /// For a Nand-derived node, how many leading children are negations.
  std::size_t sugar_negated() const noexcept { return sugar_negated_; }

  /// True if no Not node occurs in this subtree.
  bool not_free() const;

  /// Structural equality; desugaring annotations are ignored.
  friend bool operator==(const Gate& a, const Gate& b);

 private:
  Gate(GateKind kind, std::vector<Gate> children, std::string event)
      : kind_(kind), children_(std::move(children)), event_(std::move(event)) {}

  GateKind kind_;
  std::vector<Gate> children_;
  std::string event_;
  Sugar sugar_ = Sugar::None;
  std::size_t sugar_negated_ = 0;
};

namespace detail {

/// Flattened, index-resolved form of a gate tree used for fast evaluation.
class Circuit {
 public:
  struct Node {
    GateKind kind;
    std::uint32_t event;  // Atomic only
    std::uint32_t first;  // offset into child list
    std::uint32_t count;
  };

  Circuit() = default;
  Circuit(const Gate& top,
          const std::unordered_map<std::string, std::size_t>& index);

  /// `failed(k)` reports whether event k is failed.
  template <class Failed>
  bool evaluate(const Failed& failed) const {
    return eval(root_, failed);
  }

  bool evaluate_bits(StateBits bits) const {
    return eval(root_, [bits](std::size_t k) { return (bits >> k) & 1U; });
  }

  /// Bottom-up probability under independence: And = product,
  /// Or = complement of product of complements, Not = complement.
  double probability(const std::vector<double>& probs) const;

  /// Occurrences of each event among the Atomic leaves.
  const std::vector<std::size_t>& leaf_counts() const noexcept {
    return leaf_counts_;
  }

 private:
  template <class Failed>
  bool eval(std::uint32_t n, const Failed& failed) const {
    const Node& node = nodes_[n];
    switch (node.kind) {
      case GateKind::Atomic:
        return failed(node.event);
      case GateKind::Not:
        return !eval(children_[node.first], failed);
      case GateKind::And:
        for (std::uint32_t c = 0; c < node.count; ++c)
          if (!eval(children_[node.first + c], failed)) return false;
        return true;
      case GateKind::Or:
        for (std::uint32_t c = 0; c < node.count; ++c)
          if (eval(children_[node.first + c], failed)) return true;
        return false;
    }
    return false;
  }

  double node_probability(std::uint32_t n,
                          const std::vector<double>& probs) const;

  std::uint32_t add(const Gate& gate,
                    const std::unordered_map<std::string, std::size_t>& index);

  std::vector<Node> nodes_;
  std::vector<std::uint32_t> children_;
  std::vector<std::size_t> leaf_counts_;
  std::uint32_t root_ = 0;
};

}  // namespace detail

/// A validated fault tree. Immutable after construction.
class FaultTree {
 public:
  const std::vector<BasicEvent>& events() const noexcept { return events_; }
  const Gate& top() const noexcept { return top_; }
  std::size_t size() const noexcept { return events_.size(); }

  /// True iff some event id appears in two or more Atomic leaves.
  bool repeated_events() const noexcept { return repeated_; }
  bool not_free() const noexcept { return not_free_; }

  std::optional<std::size_t> index_of(std::string_view id) const;
  /// Throws UnknownEvent.
  std::size_t require_index(std::string_view id) const;

  const detail::Circuit& circuit() const noexcept { return circuit_; }

  friend bool operator==(const FaultTree& a, const FaultTree& b) {
    return a.events_ == b.events_ && a.top_ == b.top_;
  }

 private:
  friend FaultTree build_tree(std::vector<BasicEvent> events, Gate top);

  FaultTree(std::vector<BasicEvent> events, Gate top);

  std::vector<BasicEvent> events_;
  Gate top_;
  std::unordered_map<std::string, std::size_t> index_;
  detail::Circuit circuit_;
  bool repeated_ = false;
  bool not_free_ = true;
};

/// Validates and assembles a tree. Throws Error with kind DuplicateEventId,
/// DanglingReference, UnusedEvent, EmptyTree, NegativeRate or InvalidRate;
/// `Error::subject()` names the offending event.
FaultTree build_tree(std::vector<BasicEvent> events, Gate top);

/// Total assignment of event ids to component states.
class StateVector {
 public:
  using Map = std::map<std::string, State, std::less<>>;

  StateVector() = default;
  explicit StateVector(Map states) : states_(std::move(states)) {}

  void set(std::string id, State state) { states_[std::move(id)] = state; }
  std::optional<State> get(std::string_view id) const;
  const Map& states() const noexcept { return states_; }
  std::size_t size() const noexcept { return states_.size(); }

  friend bool operator==(const StateVector&, const StateVector&) = default;

 private:
  Map states_;
};

/// Converts between packed bits and named states. `to_bits` throws
/// MissingState when the vector is not total over the tree's events.
StateVector to_state_vector(const FaultTree& tree, StateBits bits);
StateBits to_bits(const FaultTree& tree, const StateVector& state);

/// Forward range over all 2^n state vectors of a tree, in increasing
/// packed-bit order.
class StateRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = StateVector;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = StateVector;

    iterator() = default;
    iterator(const FaultTree* tree, StateBits at) : tree_(tree), at_(at) {}

    StateVector operator*() const { return to_state_vector(*tree_, at_); }
    iterator& operator++() {
      ++at_;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++at_;
      return old;
    }
    friend bool operator==(const iterator& a, const iterator& b) {
      return a.at_ == b.at_;
    }

   private:
    const FaultTree* tree_ = nullptr;
    StateBits at_ = 0;
  };

  StateRange(const FaultTree& tree, StateBits count)
      : tree_(&tree), count_(count) {}

  iterator begin() const { return {tree_, 0}; }
  iterator end() const { return {tree_, count_}; }
  StateBits size() const noexcept { return count_; }

 private:
  const FaultTree* tree_;
  StateBits count_;
};

/// All state vectors of `tree`. Throws TooManyEvents past `limits`.
StateRange all_states(const FaultTree& tree, const Limits& limits = {});

/// Throws TooManyEvents if `count` events cannot be enumerated.
void require_enumerable(std::size_t count, const Limits& limits);

}  // namespace ftcrit
