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

// ftcrit command-line front end. Talks to the library only through the C
// interface in ftcrit.h.
//
// Exit codes: 0 success, 1 analysis error (or a tree that is not coherent
// for `coherence`), 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cerrno>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ftcrit/ftcrit.h"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitAnalysis = 1;
constexpr int kExitUsage = 2;

// Published evaluation of the case-study top event at t = 5 h.
constexpr double kPublishedF5 = 0.0003494028541;

struct AnalysisError {
  std::string kind;
  std::string detail;
};

struct UsageError {
  std::string message;
};

void check(ftc_status status) {
  if (status != FTC_OK)
    throw AnalysisError{ftc_last_error_kind(), ftc_last_error_message()};
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// JSON has no infinity; keep the same text the CSV uses.
json jnum(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  return v;
}

const char* yes_no(int v) { return v ? "true" : "false"; }

struct TreeDeleter {
  void operator()(ftc_tree* t) const { ftc_tree_free(t); }
};
using Tree = std::unique_ptr<ftc_tree, TreeDeleter>;

struct CutsDeleter {
  void operator()(ftc_cutsets* c) const { ftc_cutsets_free(c); }
};

std::optional<std::size_t> max_events_override() {
  const char* env = std::getenv("FTCRIT_MAX_EVENTS");
  if (!env || !*env) return std::nullopt;
  char* end = nullptr;
  errno = 0;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (errno || *end || v == 0 || v > 63)
    throw UsageError{"FTCRIT_MAX_EVENTS must be an integer in [1, 63]"};
  return static_cast<std::size_t>(v);
}

void apply_limits(ftc_tree* tree) {
  if (auto cap = max_events_override()) {
    ftc_limits limits = ftc_default_limits();
    limits.max_events = *cap;
    check(ftc_tree_set_limits(tree, &limits));
  }
}

Tree load(const std::string& path) {
  ftc_tree* raw = nullptr;
  check(ftc_tree_load(path.c_str(), &raw));
  Tree tree(raw);
  apply_limits(tree.get());
  return tree;
}

Tree bundled() {
  ftc_tree* raw = nullptr;
  check(ftc_tree_level_crossing(&raw));
  Tree tree(raw);
  apply_limits(tree.get());
  return tree;
}

std::size_t index_of(const ftc_tree* tree, const std::string& id) {
  std::size_t k = 0;
  check(ftc_tree_event_index(tree, id.c_str(), &k));
  return k;
}

std::string id_of(const ftc_tree* tree, std::size_t k) {
  return ftc_tree_event_id(tree, k);
}

// ---- commands -------------------------------------------------------------
// Each writes its whole output to `out` and returns the exit code.

int cmd_validate(const ftc_tree* tree, bool as_json, std::ostream& out) {
  std::size_t n = ftc_tree_event_count(tree);
  if (as_json) {
    out << json{{"valid", true}, {"events", n}}.dump() << '\n';
  } else {
    out << "valid: true\nevents: " << n << '\n';
  }
  return 0;
}

int cmd_mcs(const ftc_tree* tree, bool as_json, std::ostream& out) {
  ftc_cutsets* raw = nullptr;
  check(ftc_minimal_cut_sets(tree, &raw));
  std::unique_ptr<ftc_cutsets, CutsDeleter> cuts(raw);
  json all = json::array();
  for (std::size_t c = 0; c < ftc_cutsets_count(cuts.get()); ++c) {
    json ids = json::array();
    std::string line;
    for (std::size_t m = 0; m < ftc_cutset_size(cuts.get(), c); ++m) {
      std::string id = id_of(tree, ftc_cutset_member(cuts.get(), c, m));
      if (m) line += ',';
      line += id;
      ids.push_back(id);
    }
    if (as_json) all.push_back(ids);
    else out << line << '\n';
  }
  if (as_json) out << json{{"cut_sets", all}}.dump() << '\n';
  return 0;
}

int cmd_prob(const ftc_tree* tree, double t, bool as_json, std::ostream& out) {
  double f = 0.0;
  check(ftc_unreliability(tree, t, &f));
  if (as_json) out << json{{"t", t}, {"unreliability", f}}.dump() << '\n';
  else out << num(f) << '\n';
  return 0;
}

int cmd_curve(const ftc_tree* tree, double t_max, std::size_t points, bool as_json,
              std::ostream& out) {
  std::vector<double> ts(points), fs(points);
  check(ftc_unreliability_curve(tree, t_max, points, ts.data(), fs.data()));
  if (as_json) {
    json rows = json::array();
    for (std::size_t k = 0; k < points; ++k)
      rows.push_back({{"t", ts[k]}, {"unreliability", fs[k]}});
    out << json{{"curve", rows}}.dump() << '\n';
    return 0;
  }
  out << "t,unreliability\n";
  for (std::size_t k = 0; k < points; ++k) out << num(ts[k]) << ',' << num(fs[k]) << '\n';
  return 0;
}

int cmd_coherence(const ftc_tree* tree, bool as_json, std::ostream& out) {
  ftc_coherence r{};
  check(ftc_check_coherence(tree, &r));
  std::vector<std::string> irrelevant;
  for (std::size_t k = 0; k < ftc_tree_event_count(tree); ++k)
    if ((r.irrelevant >> k) & 1U) irrelevant.push_back(id_of(tree, k));

  std::string state, event;
  if (!r.monotone) {
    for (std::size_t k = 0; k < ftc_tree_event_count(tree); ++k) {
      if ((r.witness_state >> k) & 1U) {
        if (!state.empty()) state += ',';
        state += id_of(tree, k);
      }
    }
    event = id_of(tree, r.witness_event);
  }

  if (as_json) {
    json j{{"boundary_zero", bool(r.boundary_zero)},
           {"boundary_one", bool(r.boundary_one)},
           {"monotone", bool(r.monotone)}};
    if (!r.monotone) {
      j["witness"] = {{"failed", state}, {"event", event}};
    } else {
      j["witness"] = nullptr;
    }
    j["irrelevant"] = irrelevant;
    j["is_coherent"] = bool(r.is_coherent);
    out << j.dump() << '\n';
  } else {
    std::string irr;
    for (const std::string& id : irrelevant) irr += (irr.empty() ? "" : ",") + id;
    out << "boundary_zero: " << yes_no(r.boundary_zero) << '\n'
        << "boundary_one: " << yes_no(r.boundary_one) << '\n'
        << "monotone: " << yes_no(r.monotone) << '\n'
        << "witness_failed: " << (r.monotone ? "-" : state.empty() ? "{}" : state)
        << '\n'
        << "witness_event: " << (r.monotone ? "-" : event) << '\n'
        << "irrelevant: " << (irr.empty() ? "-" : irr) << '\n'
        << "is_coherent: " << yes_no(r.is_coherent) << '\n';
  }
  return r.is_coherent ? 0 : kExitAnalysis;
}

ftc_measure measure_of(const std::string& name) {
  ftc_measure m = FTC_MEASURE_BIRNBAUM;
  if (ftc_parse_measure(name.c_str(), &m) != FTC_OK)
    throw UsageError{"unknown measure '" + name + "' (birnbaum, fv, rrw, raw)"};
  return m;
}

int cmd_importance(const ftc_tree* tree, double t, ftc_measure measure,
                   ftc_forcing forcing, bool sorted, bool as_json,
                   std::ostream& out) {
  std::size_t n = ftc_tree_event_count(tree);
  std::vector<ftc_importance_row> rows(n);
  std::vector<std::size_t> order(n);
  check(ftc_importance(tree, t, measure, forcing, rows.data(), order.data(), n));
  if (!sorted)
    for (std::size_t k = 0; k < n; ++k) order[k] = k;

  if (as_json) {
    json list = json::array();
    for (std::size_t k : order) {
      const ftc_importance_row& r = rows[k];
      list.push_back({{"event", id_of(tree, k)},
                      {"birnbaum", jnum(r.birnbaum)},
                      {"fussell_vesely", jnum(r.fussell_vesely)},
                      {"rrw", jnum(r.rrw)},
                      {"raw", jnum(r.raw)},
                      {"rank", r.rank}});
    }
    out << json{{"t", t}, {"components", list}}.dump() << '\n';
    return 0;
  }
  out << "event,birnbaum,fussell_vesely,rrw,raw,rank\n";
  for (std::size_t k : order) {
    const ftc_importance_row& r = rows[k];
    out << id_of(tree, k) << ',' << num(r.birnbaum) << ',' << num(r.fussell_vesely)
        << ',' << num(r.rrw) << ',' << num(r.raw) << ',' << r.rank << '\n';
  }
  return 0;
}

const char* verdict_name(ftc_verdict v) {
  switch (v) {
    case FTC_VERDICT_I_LE_J: return "birnbaum_i_le_j";
    case FTC_VERDICT_J_LE_I: return "birnbaum_j_le_i";
    case FTC_VERDICT_INAPPLICABLE: break;
  }
  return "theorem_inapplicable";
}

const char* ordering_name(ftc_prob_ordering o) {
  switch (o) {
    case FTC_PROB_I_LE_J: return "i_le_j";
    case FTC_PROB_J_LE_I: return "j_le_i";
    case FTC_PROB_EQUAL: break;
  }
  return "equal";
}

int cmd_compare(const ftc_tree* tree, double t, const std::string& i,
                const std::string& j, bool as_json, std::ostream& out) {
  ftc_comparison c{};
  check(ftc_relative_compare(tree, t, index_of(tree, i), index_of(tree, j), &c));
  const char* direct = c.birnbaum_i <= c.birnbaum_j ? "birnbaum_i_le_j" : "birnbaum_j_le_i";
  const char* sign = c.mixed_partial_nonnegative ? "nonnegative_everywhere" : "indeterminate";
  bool applicable = c.verdict != FTC_VERDICT_INAPPLICABLE;
  if (as_json) {
    json j_out{{"i", i},
               {"j", j},
               {"t", t},
               {"permutation_equivalent", bool(c.permutation_equivalent)},
               {"mixed_partial_sign", sign},
               {"min_mixed_partial", c.min_mixed_partial},
               {"prob_ordering", ordering_name(c.prob_ordering)},
               {"verdict", verdict_name(c.verdict)},
               {"verdict_holds", applicable ? json(bool(c.verdict_holds)) : json(nullptr)},
               {"prob_i", c.prob_i},
               {"prob_j", c.prob_j},
               {"birnbaum_i", c.birnbaum_i},
               {"birnbaum_j", c.birnbaum_j},
               {"direct_ordering", direct}};
    out << j_out.dump() << '\n';
    return 0;
  }
  out << "i: " << i << '\n'
      << "j: " << j << '\n'
      << "t: " << num(t) << '\n'
      << "permutation_equivalent: " << yes_no(c.permutation_equivalent) << '\n'
      << "mixed_partial_sign: " << sign << '\n'
      << "min_mixed_partial: " << num(c.min_mixed_partial) << '\n'
      << "prob_ordering: " << ordering_name(c.prob_ordering) << '\n'
      << "verdict: " << verdict_name(c.verdict) << '\n'
      << "verdict_holds: " << (applicable ? yes_no(c.verdict_holds) : "-") << '\n'
      << "prob_i: " << num(c.prob_i) << '\n'
      << "prob_j: " << num(c.prob_j) << '\n'
      << "birnbaum_i: " << num(c.birnbaum_i) << '\n'
      << "birnbaum_j: " << num(c.birnbaum_j) << '\n'
      << "direct_ordering: " << direct << '\n';
  return 0;
}

int cmd_simulate(const ftc_tree* tree, double t, std::uint64_t samples,
                 std::uint64_t seed, const std::string& component, bool as_json,
                 std::ostream& out) {
  ftc_estimate e{};
  if (component.empty())
    check(ftc_simulate(tree, t, samples, seed, &e));
  else
    check(ftc_simulate_criticality(tree, t, samples, seed, index_of(tree, component), &e));
  if (as_json) {
    out << json{{"mean", e.mean}, {"std_error", e.std_error}, {"samples", e.samples}}.dump()
        << '\n';
    return 0;
  }
  out << "mean,std_error,samples\n"
      << num(e.mean) << ',' << num(e.std_error) << ',' << e.samples << '\n';
  return 0;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  f << text;
  f.close();
  if (!f) throw AnalysisError{"IoError", "cannot write " + path.string()};
}

template <class Fn>
std::string capture(Fn&& fn) {
  std::ostringstream s;
  fn(s);
  return s.str();
}

int cmd_casestudy(const std::string& outdir, bool as_json, std::ostream& out) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(outdir, ec);
  if (ec) throw AnalysisError{"IoError", "cannot create " + outdir + ": " + ec.message()};
  fs::path dir(outdir);

  Tree tree = bundled();
  const ftc_tree* t = tree.get();
  char* text = nullptr;
  check(ftc_tree_serialize(t, &text));
  std::string source(text);
  ftc_string_free(text);
  write_file(dir / "level_crossing.ftdl", source);

  constexpr double kT = 5.0;
  write_file(dir / "mcs.txt", capture([&](std::ostream& s) { cmd_mcs(t, false, s); }));
  write_file(dir / "coherence.txt",
             capture([&](std::ostream& s) { cmd_coherence(t, false, s); }));
  write_file(dir / "curve.csv",
             capture([&](std::ostream& s) { cmd_curve(t, 2000.0, 200, false, s); }));
  write_file(dir / "importance.csv", capture([&](std::ostream& s) {
               cmd_importance(t, kT, FTC_MEASURE_BIRNBAUM, FTC_FORCING_STANDARD, false,
                              false, s);
             }));
  const std::pair<ftc_measure, const char*> measures[] = {
      {FTC_MEASURE_BIRNBAUM, "rank_birnbaum.csv"},
      {FTC_MEASURE_FUSSELL_VESELY, "rank_fv.csv"},
      {FTC_MEASURE_RRW, "rank_rrw.csv"},
      {FTC_MEASURE_RAW, "rank_raw.csv"}};
  for (const auto& [m, name] : measures)
    write_file(dir / name, capture([&](std::ostream& s) {
                 cmd_importance(t, kT, m, FTC_FORCING_STANDARD, true, false, s);
               }));
  write_file(dir / "compare_x9_x1.txt",
             capture([&](std::ostream& s) { cmd_compare(t, kT, "x9", "x1", false, s); }));
  write_file(dir / "compare_x9_x10.txt",
             capture([&](std::ostream& s) { cmd_compare(t, kT, "x9", "x10", false, s); }));
  write_file(dir / "simulate.csv", capture([&](std::ostream& s) {
               cmd_simulate(t, kT, 100000, 1, "", false, s);
             }));

  double f5 = 0.0;
  check(ftc_unreliability(t, kT, &f5));
  std::string note =
      "F(5) computed: " + num(f5) + "\n" +
      "F(5) published: " + num(kPublishedF5) + "\n" +
      "ratio computed/published: " + num(f5 / kPublishedF5) + "\n" +
      "The published value is not reproduced by the stated model and rates.\n"
      "The computed value agrees with exhaustive state enumeration; the\n"
      "event x1 alone (rate 0.018 per hour) has failure probability\n"
      "1 - exp(-0.09) = " + num(-std::expm1(-0.018 * kT)) +
      " at t = 5, which already exceeds the published system value.\n";
  write_file(dir / "f5_discrepancy.txt", note);
  write_file(dir / "prob_t5.txt", num(f5) + "\n");

  if (as_json) {
    out << json{{"outdir", outdir}, {"f5", f5}, {"f5_published", kPublishedF5}}.dump()
        << '\n';
  } else {
    out << "wrote case study to " << outdir << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact fault-tree analysis"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Wrap output in a JSON object");

  std::string file;
  double t = 0.0;
  double t_max = 0.0;
  std::size_t points = 0;
  std::string measure = "birnbaum";
  bool paper_literal = false;
  std::string id_i, id_j, component, outdir;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 0;

  auto* validate = app.add_subcommand("validate", "Parse and validate a model");
  auto* mcs = app.add_subcommand("mcs", "List minimal cut sets");
  auto* prob = app.add_subcommand("prob", "System unreliability at time t");
  auto* curve = app.add_subcommand("curve", "Unreliability over [0, t-max] as CSV");
  auto* coherence = app.add_subcommand("coherence", "Check coherence conditions");
  auto* importance = app.add_subcommand("importance", "Importance measures as CSV");
  auto* rank = app.add_subcommand("rank", "Components ordered by a measure");
  auto* compare = app.add_subcommand("compare", "Relative Birnbaum comparison");
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo estimate");
  auto* casestudy = app.add_subcommand("casestudy", "Write the bundled case study");

  for (auto* sub : {validate, mcs, prob, curve, coherence, importance, rank, compare, simulate})
    sub->add_option("FILE", file, "FTDL model")->required();
  for (auto* sub : {prob, importance, rank, compare, simulate})
    sub->add_option("--t", t, "Mission time in hours")->required();
  curve->add_option("--t-max", t_max, "Last time point")->required();
  curve->add_option("--points", points, "Number of grid points (>= 2)")->required();
  importance->add_option("--measure", measure, "Ranking measure");
  importance->add_flag("--paper-literal", paper_literal,
                       "Swap the forced states in FV, RRW and RAW");
  rank->add_option("--measure", measure, "Ranking measure")->required();
  compare->add_option("--i", id_i, "First event")->required();
  compare->add_option("--j", id_j, "Second event")->required();
  simulate->add_option("--samples", samples, "Sample count")->required();
  simulate->add_option("--seed", seed, "Random seed")->required();
  simulate->add_option("--component", component, "Estimate criticality of this event");
  casestudy->add_option("OUTDIR", outdir, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  std::ostringstream out;
  int code = 0;
  try {
    if (*casestudy) {
      code = cmd_casestudy(outdir, as_json, out);
    } else {
      Tree tree = load(file);
      const ftc_tree* tr = tree.get();
      if (*validate) code = cmd_validate(tr, as_json, out);
      else if (*mcs) code = cmd_mcs(tr, as_json, out);
      else if (*prob) code = cmd_prob(tr, t, as_json, out);
      else if (*curve) code = cmd_curve(tr, t_max, points, as_json, out);
      else if (*coherence) code = cmd_coherence(tr, as_json, out);
      else if (*importance)
        code = cmd_importance(tr, t, measure_of(measure),
                              paper_literal ? FTC_FORCING_SWAPPED : FTC_FORCING_STANDARD,
                              false, as_json, out);
      else if (*rank)
        code = cmd_importance(tr, t, measure_of(measure), FTC_FORCING_STANDARD, true,
                              as_json, out);
      else if (*compare) code = cmd_compare(tr, t, id_i, id_j, as_json, out);
      else if (*simulate) code = cmd_simulate(tr, t, samples, seed, component, as_json, out);
    }
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.message << '\n';
    return kExitUsage;
  } catch (const AnalysisError& e) {
    std::string detail = e.detail;
    for (char& c : detail)
      if (c == '\n' || c == '\r') c = ' ';
    std::cerr << "error: " << e.kind << ": " << detail << '\n';
    return kExitAnalysis;
  }
  std::cout << out.str() << std::flush;
  return code;
}
