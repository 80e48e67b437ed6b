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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ftcrit/casestudy.hpp"
#include "ftcrit/coherence.hpp"
#include "ftcrit/cutset.hpp"
#include "ftcrit/error.hpp"
#include "ftcrit/importance.hpp"
#include "ftcrit/montecarlo.hpp"
#include "ftcrit/parser.hpp"
#include "ftcrit/prob.hpp"
#include "ftcrit/structure.hpp"
#include "oracle.hpp"

using namespace ftcrit;

namespace {

constexpr double kPublishedF5 = 0.0003494028541;

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// 1. Exact unreliability equals exhaustive enumeration on random trees.
Outcome oracle_equivalence() {
  auto start = Clock::now();
  std::mt19937_64 rng(1);
  testing::RandomTreeOptions opts;
  opts.max_events = 12;
  opts.min_rate = 1e-6;
  opts.max_rate = 1e-1;
  double worst = 0.0;
  int trees = 0;
  for (; trees < 500; ++trees) {
    FaultTree t = testing::random_tree(rng, opts);
    for (double time : {0.0, 1.0, 10.0, 100.0}) {
      TimePoint tp(time);
      double exact = system_unreliability(t, tp);
      double oracle = oracle_probability(t, failure_probabilities(t, tp));
      worst = std::max(worst, std::abs(exact - oracle));
    }
  }
  double secs = seconds_since(start);
  return {worst <= 1e-12 && secs <= 60.0,
          fmt("%d trees x 4 times, max |diff| = %.3g, %.2f s", trees, worst, secs)};
}

// 2. Closed-form gate probabilities against outcome enumeration.
Outcome gate_formulas() {
  double worst = 0.0;
  std::size_t checks = 0;
  auto enumerate = [](const std::vector<double>& p, const std::function<bool(unsigned)>& gate) {
    double sum = 0.0;
    for (unsigned s = 0; s < (1U << p.size()); ++s) {
      if (!gate(s)) continue;
      double w = 1.0;
      for (std::size_t k = 0; k < p.size(); ++k) w *= (s >> k) & 1U ? p[k] : 1.0 - p[k];
      sum += w;
    }
    return sum;
  };
  for (std::size_t n : {2U, 3U}) {
    std::size_t points = n == 2 ? 121 : 1331;
    unsigned all = (1U << n) - 1;
    for (std::size_t g = 0; g < points; ++g) {
      std::vector<double> p(n);
      std::size_t r = g;
      for (double& v : p) {
        v = static_cast<double>(r % 11) / 10.0;
        r /= 11;
      }
      auto note = [&](double closed, double enumerated) {
        worst = std::max(worst, std::abs(closed - enumerated));
        ++checks;
      };
      note(and_prob(p), enumerate(p, [&](unsigned s) { return s == all; }));
      note(or_prob(p), enumerate(p, [&](unsigned s) { return s != 0; }));
      note(nor_prob(p), enumerate(p, [&](unsigned s) { return s == 0; }));
      for (std::size_t split = 0; split <= n; ++split) {
        std::vector<double> neg(p.begin(), p.begin() + split), pos(p.begin() + split, p.end());
        unsigned neg_mask = (1U << split) - 1;
        note(nand_prob(neg, pos), enumerate(p, [&](unsigned s) {
               return (s & neg_mask) == 0 && (s | neg_mask) == all;
             }));
      }
      if (n == 2)
        note(xor_prob(p[0], p[1]), enumerate(p, [](unsigned s) { return s == 1 || s == 2; }));
    }
  }
  return {worst <= 1e-15, fmt("%zu comparisons on the 0.1 grid, max |diff| = %.3g", checks, worst)};
}

// 3. The case study satisfies both boundary conditions and is monotone.
Outcome case_study_coherence() {
  auto start = Clock::now();
  FaultTree t = level_crossing();
  CoherenceReport r = check_coherence(t);
  double secs = seconds_since(start);
  return {r.boundary_zero && r.boundary_one && r.monotone && secs <= 30.0,
          fmt("boundary_zero=%d boundary_one=%d monotone=%d over 65536 states x 16 flips, %.2f s",
              r.boundary_zero, r.boundary_one, r.monotone, secs)};
}

// 4. XOR is caught as non-monotone with a checkable witness.
Outcome non_coherence_detection() {
  FaultTree t = parse_ftdl("event x1 rate 1 \"\"\nevent x2 rate 1 \"\"\ntop XOR(x1, x2)");
  MonotoneResult m = check_monotone(t);
  if (m.monotone || !m.witness) return {false, "XOR reported monotone"};
  StateBits flip = StateBits{1} << t.require_index(m.witness->event);
  bool valid = !(m.witness->state & flip) && phi(t, m.witness->state) &&
               !phi(t, m.witness->state | flip);
  std::string failed;
  for (const auto& [id, s] : m.witness->states.states())
    if (s == State::Failed) failed += (failed.empty() ? "" : ",") + id;
  return {valid, fmt("witness failed={%s}, flipping %s drops phi 1 -> 0", failed.c_str(),
                     m.witness->event.c_str())};
}

// 5. Minimal cut sets of the case study.
Outcome case_study_mcs() {
  FaultTree t = level_crossing();
  CutSetForm f = minimize(to_cutsets(t));
  std::size_t singles = 0, quads = 0;
  for (const EventSet& c : f.cuts) {
    singles += c.count() == 1;
    quads += c.count() == 4;
  }
  bool equivalent = true;
  for (StateBits s = 0; s < (StateBits{1} << 16); ++s)
    if (evaluate(f, s) != phi(t, s)) {
      equivalent = false;
      break;
    }
  return {f.cuts.size() == 24 && singles == 8 && quads == 16 && equivalent,
          fmt("%zu cuts (%zu singletons, %zu quadruples), phi-equivalent over 65536 states: %s",
              f.cuts.size(), singles, quads, equivalent ? "yes" : "no")};
}

// 6. Three evaluation paths on the case study, plus boundary behaviour.
Outcome case_study_pipeline() {
  FaultTree t = level_crossing();
  CutSetForm cuts = minimal_cut_sets(t);
  double worst = 0.0;
  double f0 = 0.0, f5 = 0.0, f2000 = 0.0;
  for (double time : {0.0, 5.0, 100.0, 2000.0}) {
    TimePoint tp(time);
    ProbAssignment p = failure_probabilities(t, tp);
    double closed = bottom_up_probability(t, p);
    double pie = pie_probability(cuts, p);
    double oracle = oracle_probability(t, p);
    worst = std::max({worst, std::abs(closed - pie), std::abs(closed - oracle),
                      std::abs(pie - oracle)});
    double f = system_unreliability(t, tp);
    if (time == 0.0) f0 = f;
    if (time == 5.0) f5 = f;
    if (time == 2000.0) f2000 = f;
  }
  return {worst <= 1e-12 && f0 == 0.0 && f2000 >= 0.999999,
          fmt("max path |diff| = %.3g, F(0) = %.17g, F(2000) = %.17g; F(5) = %.17g vs published "
              "%.10g (ratio %.4g, not reproducible from the stated rates)",
              worst, f0, f2000, f5, kPublishedF5, f5 / kPublishedF5)};
}

// 7. Birnbaum importance is the partial derivative of unreliability.
Outcome birnbaum_derivative() {
  double worst = 0.0;
  std::size_t checks = 0;
  const TimePoint t(100);
  for (const std::string& path : testing::corpus_files()) {
    FaultTree tree = load_ftdl(path);
    ProbAssignment p = failure_probabilities(tree, t);
    for (const BasicEvent& e : tree.events()) {
      ProbAssignment up = p, down = p;
      up[e.id] = std::min(1.0, p[e.id] + 1e-6);
      down[e.id] = std::max(0.0, p[e.id] - 1e-6);
      double fd = (unreliability(tree, up) - unreliability(tree, down)) / (up[e.id] - down[e.id]);
      double ib = birnbaum(tree, t, e.id);
      worst = std::max(worst, std::abs(ib - fd) / std::max(1.0, std::abs(ib)));
      ++checks;
    }
  }
  return {checks > 0 && worst <= 1e-4,
          fmt("%zu components over the corpus, max relative error = %.3g", checks, worst)};
}

// 8. Relative importance ordering on the case study, and soundness of the
// comparison verdict on random And trees.
Outcome relative_ordering() {
  FaultTree t = level_crossing();
  int violations = 0;
  for (int k = 1; k <= 50; ++k) {
    TimePoint tp(2000.0 * k / 50.0);
    if (birnbaum(t, tp, "x9") > birnbaum(t, tp, "x1")) ++violations;
  }
  std::mt19937_64 rng(8);
  int applicable = 0, contradictions = 0;
  for (int k = 0; k < 1000; ++k) {
    std::size_t n = 3 + static_cast<std::size_t>(k % 4);
    FaultTree tree = testing::random_and_tree(rng, n);
    std::size_t i = rng() % n, j = (i + 1 + rng() % (n - 1)) % n;
    const std::string& a = tree.events()[i].id;
    const std::string& b = tree.events()[j].id;
    TimePoint tp(std::uniform_real_distribution<double>(1.0, 1000.0)(rng));
    RelativeComparison c = relative_compare(tree, tp, a, b);
    if (c.verdict == Verdict::TheoremInapplicable) continue;
    ++applicable;
    double ia = birnbaum(tree, tp, a), ib = birnbaum(tree, tp, b);
    bool holds = c.verdict == Verdict::JLeI ? ib <= ia + 1e-12 : ia <= ib + 1e-12;
    if (!holds || !c.verdict_holds) ++contradictions;
  }
  return {violations == 0 && contradictions == 0 && applicable > 0,
          fmt("I_B(x9) <= I_B(x1) at %d/50 time points; %d/1000 And-tree comparisons "
              "applicable, %d contradictions",
              50 - violations, applicable, contradictions)};
}

// 9. Permutation equivalence on the case study.
Outcome permutation_equivalence() {
  FaultTree t = level_crossing();
  bool same = permutation_equivalent(t, "x9", "x10");
  bool diff = permutation_equivalent(t, "x1", "x9");
  return {same && !diff, fmt("(x9, x10) -> %s, (x1, x9) -> %s", same ? "true" : "false",
                             diff ? "true" : "false")};
}

// 10. Monte Carlo estimates against exact values.
Outcome monte_carlo() {
  double worst = 0.0;
  int cases = 0;
  bool ok = true;
  auto check = [&](const FaultTree& t, double time, std::uint64_t seed) {
    McEstimate e = estimate_unreliability(t, {100'000, seed, time});
    double exact = system_unreliability(t, TimePoint(time));
    double z = e.std_error > 0 ? std::abs(e.mean - exact) / e.std_error
                               : (e.mean == exact ? 0.0 : INFINITY);
    worst = std::max(worst, z);
    ok = ok && z <= 4.0;
    ++cases;
  };
  std::uint64_t seed = 1000;
  for (const std::string& path : testing::corpus_files()) check(load_ftdl(path), 100.0, seed++);
  check(level_crossing(), 5.0, seed++);
  return {ok, fmt("%d trees at n = 1e5, worst deviation = %.2f standard errors", cases, worst)};
}

// 11. Round trip over the corpus and mutation fuzzing of the parser.
Outcome parser_round_trip() {
  std::vector<std::string> sources;
  int round_trips = 0;
  bool ok = true;
  for (const std::string& path : testing::corpus_files()) {
    std::string src = testing::read_file(path);
    sources.push_back(src);
    FaultTree t = parse_ftdl(src);
    std::string once = serialize_ftdl(t);
    FaultTree back = parse_ftdl(once);
    std::string twice = serialize_ftdl(back);
    ok = ok && back == t && serialize_ftdl(parse_ftdl(twice)) == twice;
    ++round_trips;
  }
  sources.emplace_back(level_crossing_ftdl());

  static const char* kFragments[] = {"(", ")", ",", ";", "\"", "#", "\n", " ", "AND", "OR(",
                                     "NOT(", "XOR(", "NAND(", "NOR(", "event", "top", "rate",
                                     "-", "1e", "1e999", "\\", "\r", "\t", "x1", "\x01", "\xff"};
  std::mt19937_64 rng(11);
  int rejected = 0, accepted = 0, bad = 0;
  for (int k = 0; k < 10000; ++k) {
    std::string s = sources[rng() % sources.size()];
    int edits = 1 + static_cast<int>(rng() % 4);
    for (int e = 0; e < edits && !s.empty(); ++e) {
      std::size_t at = rng() % s.size();
      switch (rng() % 5) {
        case 0: s.erase(at, 1 + rng() % 8); break;
        case 1: s.insert(at, kFragments[rng() % std::size(kFragments)]); break;
        case 2: s[at] = static_cast<char>(rng() % 256); break;
        case 3: s.resize(at); break;
        default: {
          std::size_t len = std::min<std::size_t>(s.size() - at, 1 + rng() % 40);
          s.insert(rng() % s.size(), s.substr(at, len));
        }
      }
    }
    std::size_t line_count = 1 + static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
    try {
      FaultTree t = parse_ftdl(s);
      ++accepted;
      if (!(parse_ftdl(serialize_ftdl(t)) == t)) ++bad;
    } catch (const ParseError& e) {
      ++rejected;
      if (e.line() < 1 || e.line() > line_count + 1 || e.column() < 1) ++bad;
    } catch (...) {
      ++bad;
    }
  }
  return {ok && bad == 0,
          fmt("%d corpus round trips; 10000 mutated inputs: %d located rejections, %d accepted "
              "and round-tripped, %d unlocated or unexpected failures",
              round_trips, rejected, accepted, bad)};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"oracle equivalence on random trees", oracle_equivalence},
      {"gate formulas vs enumeration", gate_formulas},
      {"case study coherence", case_study_coherence},
      {"non-coherence detection", non_coherence_detection},
      {"case study minimal cut sets", case_study_mcs},
      {"case study evaluation paths", case_study_pipeline},
      {"Birnbaum derivative check", birnbaum_derivative},
      {"relative importance ordering", relative_ordering},
      {"permutation equivalence", permutation_equivalence},
      {"Monte Carlo consistency", monte_carlo},
      {"parser round trip and fuzzing", parser_round_trip},
  };
  int failures = 0;
  int index = 1;
  for (const Criterion& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("unexpected exception: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("%s [%d] %s: %s\n", o.pass ? "PASS" : "FAIL", index++, c.name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%d criteria passed\n", index - 1 - failures, index - 1);
  return failures == 0 ? 0 : 1;
}
