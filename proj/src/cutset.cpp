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

#include "ftcrit/cutset.hpp"

#include <algorithm>
#include <bit>

#include "ftcrit/error.hpp"

namespace ftcrit {

std::size_t EventSet::count() const noexcept {
  std::size_t n = 0;
  for (Word w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool EventSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(),
                     [](Word w) { return w == 0; });
}

bool EventSet::is_subset_of(const EventSet& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

EventSet& EventSet::operator|=(const EventSet& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

std::vector<std::size_t> EventSet::members() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    Word w = words_[i];
    while (w) {
      out.push_back(i * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

bool EventSet::satisfied_by(StateBits state) const noexcept {
  if (words_.empty()) return true;
  for (std::size_t i = 1; i < words_.size(); ++i)
    if (words_[i]) return false;
  return (words_[0] & ~state) == 0;
}

bool canonical_less(const EventSet& a, const EventSet& b) {
  std::size_t na = a.count();
  std::size_t nb = b.count();
  if (na != nb) return na < nb;
  std::vector<std::size_t> ma = a.members();
  std::vector<std::size_t> mb = b.members();
  return ma < mb;
}

namespace {

struct Row {
  EventSet cut;
  std::vector<const Gate*> pending;
};

}  // namespace

CutSetForm to_cutsets(const FaultTree& tree, const Limits& limits) {
  if (!tree.not_free())
    throw Error(ErrorKind::NotFreeViolation,
                "cut-set expansion requires a tree without NOT gates");

  CutSetForm form;
  for (const BasicEvent& e : tree.events()) form.event_ids.push_back(e.id);

  std::vector<Row> work;
  work.push_back(Row{EventSet(tree.size()), {&tree.top()}});
  std::size_t created = 1;

  while (!work.empty()) {
    Row row = std::move(work.back());
    work.pop_back();
    bool dropped = false;
    while (!row.pending.empty() && !dropped) {
      const Gate* gate = row.pending.back();
      row.pending.pop_back();
      switch (gate->kind()) {
        case GateKind::Atomic:
          row.cut.insert(tree.require_index(gate->event()));
          break;
        case GateKind::And:
          for (const Gate& child : gate->children()) row.pending.push_back(&child);
          break;
        case GateKind::Or: {
          const auto& children = gate->children();
          if (children.empty()) {
            dropped = true;  // impossible event
            break;
          }
          for (std::size_t c = 1; c < children.size(); ++c) {
            Row split = row;
            split.pending.push_back(&children[c]);
            work.push_back(std::move(split));
          }
          created += children.size() - 1;
          if (created > limits.max_expansion)
            throw Error(ErrorKind::ExpansionTooLarge,
                        "cut-set expansion exceeded " +
                            std::to_string(limits.max_expansion) + " rows");
          row.pending.push_back(&children.front());
          break;
        }
        case GateKind::Not:
          throw Error(ErrorKind::NotFreeViolation,
                      "cut-set expansion requires a tree without NOT gates");
      }
    }
    if (!dropped) form.cuts.push_back(std::move(row.cut));
  }
  std::stable_sort(form.cuts.begin(), form.cuts.end(), canonical_less);
  return form;
}

CutSetForm minimize(CutSetForm form) {
  std::vector<EventSet>& cuts = form.cuts;
  std::stable_sort(cuts.begin(), cuts.end(), canonical_less);
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  // In canonical order a cut can only be absorbed by an earlier one.
  std::vector<EventSet> kept;
  for (EventSet& cut : cuts) {
    bool absorbed = std::any_of(kept.begin(), kept.end(), [&](const EventSet& k) {
      return k.is_subset_of(cut);
    });
    if (!absorbed) kept.push_back(std::move(cut));
  }
  cuts = std::move(kept);
  return form;
}

CutSetForm minimal_cut_sets(const FaultTree& tree, const Limits& limits) {
  return minimize(to_cutsets(tree, limits));
}

bool evaluate(const CutSetForm& form, StateBits state) {
  return std::any_of(form.cuts.begin(), form.cuts.end(),
                     [state](const EventSet& c) { return c.satisfied_by(state); });
}

std::vector<std::string> cut_ids(const CutSetForm& form, std::size_t cut) {
  std::vector<std::string> out;
  for (std::size_t k : form.cuts.at(cut).members())
    out.push_back(form.event_ids.at(k));
  return out;
}

}  // namespace ftcrit
