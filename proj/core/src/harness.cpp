// Copyright 2026 The teag-lab Authors
// SPDX-License-Identifier: Apache-2.0

#include "teag/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "teag/constructions.hpp"
#include "teag/error.hpp"
#include "teag/interchange.hpp"
#include "teag/mpnn.hpp"
#include "teag/oracles.hpp"
#include "teag/random_graphs.hpp"
#include "teag/refinement.hpp"
#include "teag/separation.hpp"

namespace teag::harness {

namespace {

using nlohmann::json;
using separation::SeparationPair;

const char* verdict(bool pass) { return pass ? "PASS" : "FAIL"; }

std::string join(const std::vector<std::size_t>& values, char sep = ',') {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

std::string format_double(double x, const char* fmt = "%.2e") {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, x);
  return buf;
}

// Pads every column of `rows` to its widest cell.
std::string table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    out << line << '\n';
  }
  return out.str();
}

SeparationPair necessity_pair(Row row) {
  switch (row) {
    case Row::dup1:
      return separation::gen_k21_pair();
    case Row::dup1_multi:
      return separation::gen_parallel_pair();
    case Row::dupr:
      return separation::gen_k2r_pair(2);
    case Row::cycle:
      return separation::gen_cycle_pair(3);
  }
  throw Error("unknown row");
}

const PortAssignment* ports_or_null(const std::optional<PortAssignment>& p) {
  return p ? &*p : nullptr;
}

std::string row_of_pair(const std::string& pair) {
  if (pair == "k21") return "dup1";
  if (pair == "parallel") return "dup1-multi";
  if (pair == "k22" || pair.rfind("k2r", 0) == 0) return "dupr";
  if (pair.rfind("cycle", 0) == 0) return "cycle";
  return "";
}

json adaptations_json(const AdaptationSet& a) {
  return {{"reverse_mp", a.reverse_mp},
          {"in_ports", a.in_ports},
          {"out_ports", a.out_ports},
          {"ego_ids", a.ego_ids},
          {"label", to_string(a)}};
}

}  // namespace

std::string_view to_string(Row row) {
  switch (row) {
    case Row::dup1:
      return "dup1";
    case Row::dup1_multi:
      return "dup1-multi";
    case Row::dupr:
      return "dupr";
    case Row::cycle:
      return "cycle";
  }
  return "?";
}

Row row_from_string(std::string_view text) {
  for (Row r : kAllRows) {
    if (to_string(r) == text) return r;
  }
  throw Error("unknown row '" + std::string(text) + "' (expected dup1, dup1-multi, dupr or cycle)");
}

void parallel_for(std::size_t count, std::size_t jobs,
                  const std::function<void(std::size_t)>& body) {
  jobs = std::max<std::size_t>(1, std::min(jobs, count));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

std::uint64_t master_seed(std::uint64_t fallback) {
  const char* env = std::getenv("TEAG_LAB_SEED");
  if (env == nullptr || *env == '\0') return fallback;
  try {
    std::size_t used = 0;
    const unsigned long long value = std::stoull(env, &used, 0);
    if (env[used] != '\0') throw std::invalid_argument("trailing characters");
    return value;
  } catch (const std::exception&) {
    throw Error(std::string("TEAG_LAB_SEED is not an unsigned integer: ") + env);
  }
}

// ---------------------------------------------------------------------------
// Necessity

AdaptationSet necessity_adaptations(Row row) {
  AdaptationSet a;
  switch (row) {
    case Row::dup1:
      break;
    case Row::dup1_multi:
      a.reverse_mp = true;
      break;
    case Row::dupr:
    case Row::cycle:
      a.reverse_mp = true;
      a.in_ports = true;
      a.out_ports = true;
      break;
  }
  return a;
}

std::vector<std::size_t> default_depths(Row row) {
  switch (row) {
    case Row::dup1:
    case Row::dup1_multi:
      return {2, 4};
    case Row::dupr:
      return {2, 4, 6};
    case Row::cycle:
      return {3, 6};
  }
  return {};
}

NecessityReport run_necessity(Row row, const NecessityOptions& options) {
  if (options.hidden_dim == 0) throw Error("hidden dimension must be at least 1");
  if (!(options.tolerance >= 0.0)) throw Error("tolerance must be non-negative");
  NecessityReport report;
  report.row = row;
  report.adaptations = necessity_adaptations(row);
  report.depths = options.depths.empty() ? default_depths(row) : options.depths;
  for (std::size_t d : report.depths) {
    if (d == 0) throw Error("depths must be at least 1");
  }
  report.seeds = options.seeds;
  report.hidden_dim = options.hidden_dim;
  report.master_seed = options.master_seed;
  report.tolerance = options.tolerance;

  const SeparationPair pair = necessity_pair(row);
  report.pair = pair.id;
  const FeatureSpace space = FeatureSpace::covering({&pair.g1, &pair.g2});
  const PortAssignment* p1 = report.adaptations.uses_ports() ? ports_or_null(pair.ports1) : nullptr;
  const PortAssignment* p2 = report.adaptations.uses_ports() ? ports_or_null(pair.ports2) : nullptr;

  const std::size_t n_depths = report.depths.size();
  report.trials.resize(options.seeds * n_depths);
  parallel_for(report.trials.size(), options.jobs, [&](std::size_t t) {
    NecessityTrial& trial = report.trials[t];
    trial.index = t / n_depths;
    trial.seed = options.master_seed + trial.index;
    trial.depth = report.depths[t % n_depths];
    EngineConfig config;
    config.hidden_dim = options.hidden_dim;
    config.depth = trial.depth;
    config.adaptations = report.adaptations;
    config.seed = trial.seed;
    const ModelWeights weights = init_weights(config, space);
    const ForwardResult h1 = forward(pair.g1, p1, config, weights);
    const ForwardResult h2 = forward(pair.g2, p2, config, weights);
    for (std::size_t k = 0; k <= trial.depth; ++k) {
      trial.layer_distances.push_back(
          embedding_distance(h1.at(k, pair.target1), h2.at(k, pair.target2)));
    }
    trial.distance = trial.layer_distances.back();
  });

  for (const NecessityTrial& t : report.trials) {
    report.max_distance = std::max(report.max_distance, t.distance);
  }
  report.pass = report.max_distance <= report.tolerance;
  return report;
}

// ---------------------------------------------------------------------------
// Sufficiency

SufficiencyReport run_sufficiency(Row row, std::optional<std::size_t> parameter) {
  SufficiencyReport report;
  report.row = row;
  report.parameter = parameter;
  auto bit = [](bool b) { return b ? 1 : 0; };
  switch (row) {
    case Row::dup1: {
      if (parameter) throw Error("dup1 takes no parameter");
      const SeparationPair pair = separation::gen_k21_pair();
      report.construction = "dup1_simple";
      report.pair = pair.id;
      report.y1 = bit(construct::dup1_simple(pair.view1()).at(pair.target1));
      report.y2 = bit(construct::dup1_simple(pair.view2()).at(pair.target2));
      break;
    }
    case Row::dup1_multi: {
      if (parameter) throw Error("dup1-multi takes no parameter");
      const SeparationPair pair = separation::gen_parallel_pair();
      report.construction = "dup1_multigraph";
      report.pair = pair.id;
      report.y1 = bit(construct::dup1_multigraph(pair.view1(), *pair.ports1).at(pair.target1));
      report.y2 = bit(construct::dup1_multigraph(pair.view2(), *pair.ports2).at(pair.target2));
      break;
    }
    case Row::dupr: {
      if (!parameter || *parameter < 2) throw Error("dupr needs r >= 2");
      const SeparationPair pair = separation::gen_k2r_pair(*parameter);
      report.construction = "dupr_ego";
      report.pair = pair.id;
      report.y1 = bit(construct::dupr_ego(pair.view1(), pair.target1, *parameter).output);
      report.y2 = bit(construct::dupr_ego(pair.view2(), pair.target2, *parameter).output);
      break;
    }
    case Row::cycle: {
      if (!parameter || *parameter < 3) throw Error("cycle needs a length >= 3");
      const SeparationPair pair = separation::gen_cycle_pair(*parameter);
      report.construction = "cyc_ego";
      report.pair = pair.id;
      report.y1 = bit(construct::cyc_ego(pair.g1, pair.target1, *parameter).output);
      report.y2 = bit(construct::cyc_ego(pair.g2, pair.target2, *parameter).output);
      break;
    }
  }
  report.pass = report.y1 == report.expected1 && report.y2 == report.expected2;
  return report;
}

std::vector<SufficiencyReport> run_sufficiency_table() {
  std::vector<SufficiencyReport> rows;
  rows.push_back(run_sufficiency(Row::dup1));
  rows.push_back(run_sufficiency(Row::dup1_multi));
  for (std::size_t r : {2, 3, 4}) rows.push_back(run_sufficiency(Row::dupr, r));
  for (std::size_t l : {3, 5, 7}) rows.push_back(run_sufficiency(Row::cycle, l));
  return rows;
}

// ---------------------------------------------------------------------------
// Certificates

CertificateReport run_certificates(std::size_t depth_bound) {
  if (depth_bound == 0) throw Error("depth bound must be at least 1");
  CertificateReport report;
  report.depth_bound = depth_bound;

  AdaptationSet forward_only;
  AdaptationSet reverse;
  reverse.reverse_mp = true;
  AdaptationSet reverse_in = reverse;
  reverse_in.in_ports = true;
  AdaptationSet reverse_ports = reverse_in;
  reverse_ports.out_ports = true;
  AdaptationSet reverse_ego = reverse;
  reverse_ego.ego_ids = true;
  AdaptationSet all = reverse_ports;
  all.ego_ids = true;
  AdaptationSet ego_forward;
  ego_forward.ego_ids = true;

  auto add = [&](const std::string& id, const SeparationPair& pair, const AdaptationSet& config,
                 std::size_t depth, bool expect_same, bool all_layers) {
    CertificateResult c;
    c.id = id;
    c.pair = pair.id;
    c.adaptations = config;
    c.depth = depth;
    c.expect_indistinguishable = expect_same;
    c.all_layers = all_layers;
    c.same_color = indistinguishable_by_layer(pair.g1, pair.target1, pair.g2, pair.target2,
                                              ports_or_null(pair.ports1),
                                              ports_or_null(pair.ports2), config, depth);
    if (all_layers) {
      c.pass = std::all_of(c.same_color.begin(), c.same_color.end(),
                           [&](bool same) { return same == expect_same; });
    } else {
      c.pass = c.same_color.back() == expect_same;
    }
    report.results.push_back(std::move(c));
  };

  const SeparationPair k21 = separation::gen_k21_pair();
  const SeparationPair parallel = separation::gen_parallel_pair();
  const SeparationPair k22 = separation::gen_k22_example();
  std::vector<SeparationPair> k2r;
  for (std::size_t r : {2, 3, 4}) k2r.push_back(separation::gen_k2r_pair(r));
  std::vector<SeparationPair> cycles;
  for (std::size_t l : {3, 5, 7}) cycles.push_back(separation::gen_cycle_pair(l));

  // Indistinguishable at every depth up to the bound.
  add("insufficient", k21, forward_only, depth_bound, true, true);
  add("insufficient", parallel, reverse, depth_bound, true, true);
  add("insufficient", k22, reverse_ports, depth_bound, true, true);
  for (const auto& p : k2r) add("insufficient", p, reverse_ports, depth_bound, true, true);
  for (const auto& p : cycles) add("insufficient", p, reverse_ports, depth_bound, true, true);

  // One layer short of the optimal depth.
  add("depth_minimality", k21, reverse, 1, true, true);
  add("depth_minimality", parallel, reverse_in, 1, true, true);
  for (const auto& p : k2r) add("depth_minimality", p, reverse_ego, 3, true, true);
  for (const auto& p : k2r) add("depth_minimality", p, all, 3, true, true);
  for (const auto& p : cycles) {
    add("depth_minimality", p, ego_forward, p.predicate.parameter - 1, true, true);
    add("depth_minimality", p, all, p.predicate.parameter - 1, true, true);
  }

  // Sufficient adaptations at the optimal depth.
  add("sufficient", k21, reverse, 2, false, false);
  add("sufficient", parallel, reverse_in, 2, false, false);
  add("sufficient", k22, reverse_ego, 4, false, false);
  for (const auto& p : k2r) add("sufficient", p, reverse_ego, 4, false, false);
  for (const auto& p : cycles) {
    add("sufficient", p, ego_forward, p.predicate.parameter, false, false);
  }

  report.pass = std::all_of(report.results.begin(), report.results.end(),
                            [](const CertificateResult& c) { return c.pass; });
  return report;
}

// ---------------------------------------------------------------------------
// Fuzzing

void check_fuzz_bounds(const FuzzOptions& o) {
  auto refuse = [](const std::string& what) { throw Error("fuzz bounds refused: " + what); };
  if (o.max_entities < 1 || o.max_entities > 8) refuse("entities must be in [1, 8]");
  if (o.max_attributes < 1 || o.max_attributes > 10) refuse("attributes must be in [1, 10]");
  if (o.max_entity_types < 1 || o.max_entity_types > 3) refuse("entity types must be in [1, 3]");
  if (o.max_edge_types < 1 || o.max_edge_types > 3) refuse("edge types must be in [1, 3]");
  if (o.max_parallel < 1 || o.max_parallel > 2) refuse("parallel edges must be in [1, 2]");
  if (o.max_digraph_nodes < 1 || o.max_digraph_nodes > 8) refuse("digraph nodes must be in [1, 8]");
  if (o.max_cycle_length < 3 || o.max_cycle_length > 8) refuse("cycle length must be in [3, 8]");
  if (o.multigraphs > 0 && o.port_assignments < 1) refuse("need at least one port assignment");
}

const FuzzCheck& FuzzReport::check(std::string_view name) const {
  for (const FuzzCheck& c : checks) {
    if (c.name == name) return c;
  }
  throw Error("no fuzz check named '" + std::string(name) + "'");
}

namespace {

constexpr const char* kFuzzChecks[] = {
    "dup1_simple",         "dupr_ego",         "ego_overlap",      "soft_overlap_identity",
    "dup1_multigraph",     "dupr_ego_multigraph", "cyc_ego_walk", "cyc_ego_functional",
};

struct Tally {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::size_t positives = 0;
};

struct CaseOutcome {
  std::map<std::string, Tally> tallies;
  std::vector<Counterexample> counterexamples;
};

class CaseRecorder {
 public:
  CaseRecorder(CaseOutcome& out, const TypedMultigraph& g) : out_(out), graph_(g) {}

  void set_ports(const PortAssignment* ports) { ports_ = ports; }

  void expect(const char* check, bool ok, const json& inputs, bool positive = false) {
    Tally& t = out_.tallies[check];
    ++t.cases;
    if (positive) ++t.positives;
    if (ok) return;
    ++t.failures;
    out_.counterexamples.push_back(
        Counterexample{check, inputs.dump(), dump_graph_document(graph_, ports_)});
  }

 private:
  CaseOutcome& out_;
  const TypedMultigraph& graph_;
  const PortAssignment* ports_ = nullptr;
};

constexpr std::size_t kMaxR = 4;

void fuzz_simple(const FuzzOptions& o, std::size_t index, CaseOutcome& out) {
  random::Engine rng = random::case_engine(o.seed, index);
  random::TeagBounds bounds;
  bounds.max_entities = o.max_entities;
  bounds.max_attributes = o.max_attributes;
  bounds.max_entity_types = o.max_entity_types;
  bounds.max_edge_types = o.max_edge_types;
  bounds.max_parallel = 1;
  const TypedMultigraph g = random::random_teag(rng, bounds);
  const EntityAttributeView view(g);
  CaseRecorder rec(out, g);

  const construct::Dup1Result dup1 = construct::dup1_simple(view);
  const oracle::SimilarityTable identity;
  for (NodeId u : view.entities()) {
    const bool dup1_truth = oracle::dup_r(view, u, 1);
    rec.expect("dup1_simple", dup1.at(u) == dup1_truth, {{"entity", u}}, dup1_truth);
    for (std::size_t r = 1; r <= kMaxR; ++r) {
      const construct::EgoLayerState state = construct::dupr_ego(view, u, r);
      const bool truth = oracle::dup_r(view, u, r);
      rec.expect("dupr_ego", state.output == truth, {{"ego", u}, {"r", r}}, truth);
      if (r != 1) continue;
      for (NodeId v : view.entities()) {
        const std::size_t ov = oracle::overlap(view, u, v);
        rec.expect("ego_overlap", state.ov[v] == ov, {{"ego", u}, {"v", v}}, ov > 0);
        rec.expect("soft_overlap_identity",
                   oracle::soft_overlap(view, u, v, identity) == static_cast<double>(ov),
                   {{"u", u}, {"v", v}}, ov > 0);
      }
    }
  }
}

void fuzz_multigraph(const FuzzOptions& o, std::size_t index, CaseOutcome& out) {
  random::Engine rng = random::case_engine(o.seed ^ 0x6d756c7469ULL, index);
  random::TeagBounds bounds;
  bounds.max_entities = o.max_entities;
  bounds.max_attributes = o.max_attributes;
  bounds.max_entity_types = o.max_entity_types;
  bounds.max_edge_types = o.max_edge_types;
  bounds.max_parallel = o.max_parallel;
  const TypedMultigraph g = random::random_teag(rng, bounds);
  const EntityAttributeView view(g);
  CaseRecorder rec(out, g);

  for (std::size_t k = 0; k < o.port_assignments; ++k) {
    const PortAssignment ports = random::random_valid_ports(g, rng);
    rec.set_ports(&ports);
    const construct::Dup1Result dup1 = construct::dup1_multigraph(view, ports);
    for (NodeId u : view.entities()) {
      const bool dup1_truth = oracle::dup_r(view, u, 1);
      rec.expect("dup1_multigraph", dup1.at(u) == dup1_truth,
                 {{"entity", u}, {"assignment", k}}, dup1_truth);
      for (std::size_t r = 1; r <= kMaxR; ++r) {
        const bool y = construct::dupr_ego_multigraph(view, ports, u, r).output;
        const bool truth = oracle::dup_r(view, u, r);
        rec.expect("dupr_ego_multigraph", y == truth,
                   {{"ego", u}, {"r", r}, {"assignment", k}}, truth);
      }
    }
  }
}

void fuzz_digraph(const FuzzOptions& o, std::size_t index, CaseOutcome& out) {
  random::Engine rng = random::case_engine(o.seed ^ 0x6469677261ULL, index);
  {
    const TypedMultigraph g = random::random_digraph(rng, o.max_digraph_nodes);
    CaseRecorder rec(out, g);
    for (NodeId v = 0; v < g.node_count(); ++v) {
      for (std::size_t l = 3; l <= o.max_cycle_length; ++l) {
        const bool truth = oracle::closed_walk(g, v, l);
        rec.expect("cyc_ego_walk", construct::cyc_ego(g, v, l).output == truth,
                   {{"ego", v}, {"length", l}}, truth);
      }
    }
  }
  {
    const TypedMultigraph g = random::random_functional_graph(rng, o.max_digraph_nodes);
    CaseRecorder rec(out, g);
    for (NodeId v = 0; v < g.node_count(); ++v) {
      const std::size_t l = random::cycle_length_through(g, v);
      if (l < 3 || l > o.max_cycle_length) continue;
      const bool y = construct::cyc_ego(g, v, l).output;
      const bool truth = oracle::cyc(g, v, l);
      rec.expect("cyc_ego_functional", y && y == truth, {{"ego", v}, {"length", l}}, truth);
    }
  }
}

}  // namespace

FuzzReport run_fuzz(const FuzzOptions& options) {
  check_fuzz_bounds(options);
  FuzzReport report;
  report.options = options;

  const std::size_t n_simple = options.simple_graphs;
  const std::size_t n_multi = options.multigraphs;
  const std::size_t total = n_simple + n_multi + options.digraphs;
  std::vector<CaseOutcome> outcomes(total);
  parallel_for(total, options.jobs, [&](std::size_t i) {
    if (i < n_simple) {
      fuzz_simple(options, i, outcomes[i]);
    } else if (i < n_simple + n_multi) {
      fuzz_multigraph(options, i - n_simple, outcomes[i]);
    } else {
      fuzz_digraph(options, i - n_simple - n_multi, outcomes[i]);
    }
  });

  for (const char* name : kFuzzChecks) report.checks.push_back(FuzzCheck{name, 0, 0});
  for (const CaseOutcome& o : outcomes) {
    for (FuzzCheck& c : report.checks) {
      const auto it = o.tallies.find(c.name);
      if (it == o.tallies.end()) continue;
      c.cases += it->second.cases;
      c.failures += it->second.failures;
      c.positives += it->second.positives;
    }
    report.counterexamples.insert(report.counterexamples.end(), o.counterexamples.begin(),
                                  o.counterexamples.end());
  }
  report.pass = report.counterexamples.empty();
  return report;
}

// ---------------------------------------------------------------------------
// Serialization

namespace {

json necessity_json(const NecessityReport& r) {
  json trials = json::array();
  for (const NecessityTrial& t : r.trials) {
    trials.push_back({{"index", t.index},
                      {"seed", t.seed},
                      {"depth", t.depth},
                      {"distance", t.distance},
                      {"layer_distances", t.layer_distances}});
  }
  return {{"row", to_string(r.row)},
          {"pair", r.pair},
          {"adaptations", adaptations_json(r.adaptations)},
          {"depths", r.depths},
          {"seeds", r.seeds},
          {"hidden_dim", r.hidden_dim},
          {"master_seed", r.master_seed},
          {"tolerance", r.tolerance},
          {"compared_layer", "final"},
          {"max_distance", r.max_distance},
          {"trials", trials},
          {"verdict", verdict(r.pass)}};
}

json sufficiency_json(const SufficiencyReport& r) {
  json row = {{"row", to_string(r.row)},
              {"construction", r.construction},
              {"pair", r.pair},
              {"y_g1", r.y1},
              {"y_g2", r.y2},
              {"expected", {r.expected1, r.expected2}},
              {"verdict", verdict(r.pass)}};
  if (r.parameter) {
    row["parameter_name"] = r.row == Row::dupr ? "r" : "length";
    row["parameter"] = *r.parameter;
  } else {
    row["parameter"] = nullptr;
  }
  return row;
}

template <class T>
bool all_pass(const std::vector<T>& rows) {
  return std::all_of(rows.begin(), rows.end(), [](const T& r) { return r.pass; });
}

std::string architecture_label(const AdaptationSet& a) { return to_string(a); }

}  // namespace

std::string to_json(const std::vector<NecessityReport>& reports) {
  json rows = json::array();
  for (const auto& r : reports) rows.push_back(necessity_json(r));
  json doc = {{"kind", "necessity"}, {"rows", rows}, {"verdict", verdict(all_pass(reports))}};
  return doc.dump(2) + "\n";
}

std::string to_json(const std::vector<SufficiencyReport>& reports) {
  json rows = json::array();
  for (const auto& r : reports) rows.push_back(sufficiency_json(r));
  json doc = {{"kind", "sufficiency"}, {"rows", rows}, {"verdict", verdict(all_pass(reports))}};
  return doc.dump(2) + "\n";
}

std::string to_json(const CertificateReport& report) {
  json results = json::array();
  for (const CertificateResult& c : report.results) {
    results.push_back({{"id", c.id},
                       {"pair", c.pair},
                       {"row", row_of_pair(c.pair)},
                       {"adaptations", adaptations_json(c.adaptations)},
                       {"depth", c.depth},
                       {"expect", c.expect_indistinguishable ? "indistinguishable" : "distinguishable"},
                       {"checked_layers", c.all_layers ? "all" : "final"},
                       {"same_color", c.same_color},
                       {"verdict", verdict(c.pass)}});
  }
  json doc = {{"kind", "certificates"},
              {"depth_bound", report.depth_bound},
              {"bounded", true},
              {"results", results},
              {"verdict", verdict(report.pass)}};
  return doc.dump(2) + "\n";
}

std::string to_json(const FuzzReport& report) {
  const FuzzOptions& o = report.options;
  json checks = json::array();
  for (const FuzzCheck& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"cases", c.cases},
                      {"failures", c.failures},
                      {"positives", c.positives}});
  }
  json counter = json::array();
  for (const Counterexample& c : report.counterexamples) {
    counter.push_back(
        {{"check", c.check}, {"inputs", json::parse(c.inputs)}, {"graph", json::parse(c.graph)}});
  }
  json doc = {{"kind", "fuzz"},
              {"options",
               {{"seed", o.seed},
                {"simple_graphs", o.simple_graphs},
                {"multigraphs", o.multigraphs},
                {"port_assignments", o.port_assignments},
                {"digraphs", o.digraphs},
                {"max_entities", o.max_entities},
                {"max_attributes", o.max_attributes},
                {"max_entity_types", o.max_entity_types},
                {"max_edge_types", o.max_edge_types},
                {"max_parallel", o.max_parallel},
                {"max_digraph_nodes", o.max_digraph_nodes},
                {"max_cycle_length", o.max_cycle_length}}},
              {"checks", checks},
              {"counterexamples", counter},
              {"verdict", verdict(report.pass)}};
  return doc.dump(2) + "\n";
}

std::string to_text(const std::vector<NecessityReport>& reports) {
  std::vector<std::vector<std::string>> rows{
      {"row", "pair", "architecture", "depths", "seeds", "max L2 distance", "tolerance", "verdict"}};
  for (const auto& r : reports) {
    rows.push_back({std::string(to_string(r.row)), r.pair, architecture_label(r.adaptations),
                    join(r.depths), std::to_string(r.seeds), format_double(r.max_distance),
                    format_double(r.tolerance, "%.0e"), verdict(r.pass)});
  }
  return "Necessity (insufficient architectures, final-layer distance at the target)\n" +
         table(rows);
}

std::string to_text(const std::vector<SufficiencyReport>& reports) {
  std::vector<std::vector<std::string>> rows{
      {"row", "construction", "pair", "param", "y(G1)", "y(G2)", "expected", "verdict"}};
  for (const auto& r : reports) {
    std::string param = "-";
    if (r.parameter) param = (r.row == Row::dupr ? "r=" : "l=") + std::to_string(*r.parameter);
    rows.push_back({std::string(to_string(r.row)), r.construction, r.pair, param,
                    std::to_string(r.y1), std::to_string(r.y2),
                    "(" + std::to_string(r.expected1) + "," + std::to_string(r.expected2) + ")",
                    verdict(r.pass)});
  }
  return "Sufficiency (exact constructions)\n" + table(rows);
}

std::string to_text(const CertificateReport& report) {
  std::vector<std::vector<std::string>> rows{
      {"certificate", "pair", "adaptations", "depth", "expect", "layers", "verdict"}};
  for (const CertificateResult& c : report.results) {
    rows.push_back({c.id, c.pair, to_string(c.adaptations), std::to_string(c.depth),
                    c.expect_indistinguishable ? "same color" : "different color",
                    c.all_layers ? "0.." + std::to_string(c.depth) : std::to_string(c.depth),
                    verdict(c.pass)});
  }
  return "Refinement certificates (bounded at depth " + std::to_string(report.depth_bound) +
         "; the unbounded claim rests on the induction proofs)\n" + table(rows);
}

std::string to_text(const FuzzReport& report) {
  std::vector<std::vector<std::string>> rows{
      {"check", "cases", "positives", "failures", "verdict"}};
  for (const FuzzCheck& c : report.checks) {
    rows.push_back({c.name, std::to_string(c.cases), std::to_string(c.positives),
                    std::to_string(c.failures), verdict(c.failures == 0)});
  }
  std::string out = "Oracle-equivalence fuzzing (seed " + std::to_string(report.options.seed) +
                    ")\n" + table(rows);
  for (const Counterexample& c : report.counterexamples) {
    out += "counterexample [" + c.check + "] inputs " + c.inputs + "\n" + c.graph;
  }
  return out;
}

std::string render_report_tables(const std::vector<std::string>& documents, bool& all_pass_out) {
  std::vector<json> necessity;
  std::vector<json> sufficiency;
  std::vector<json> certificates;
  std::vector<json> fuzz;
  bool ok = true;
  for (const std::string& text : documents) {
    json doc;
    try {
      doc = json::parse(text);
    } catch (const json::parse_error& e) {
      throw Error(std::string("malformed report: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("kind") || !doc.contains("verdict")) {
      throw Error("report documents need 'kind' and 'verdict'");
    }
    ok = ok && doc["verdict"] == "PASS";
    const std::string kind = doc["kind"];
    if (kind == "necessity") {
      for (const auto& r : doc["rows"]) necessity.push_back(r);
    } else if (kind == "sufficiency") {
      for (const auto& r : doc["rows"]) sufficiency.push_back(r);
    } else if (kind == "certificates") {
      for (const auto& r : doc["results"]) certificates.push_back(r);
    } else if (kind == "fuzz") {
      fuzz.push_back(doc);
    } else {
      throw Error("unknown report kind '" + kind + "'");
    }
  }

  // Status of one matrix row from whatever evidence was merged.
  auto status = [&](const std::string& row) -> std::string {
    std::size_t seen = 0;
    bool pass = true;
    auto take = [&](const json& r) {
      ++seen;
      pass = pass && r["verdict"] == "PASS";
    };
    for (const auto& r : necessity) {
      if (r["row"] == row) take(r);
    }
    for (const auto& r : sufficiency) {
      if (r["row"] == row) take(r);
    }
    for (const auto& r : certificates) {
      if (r["row"] == row) take(r);
    }
    if (row == "dupr-multi") {
      for (const auto& f : fuzz) {
        for (const auto& c : f["checks"]) {
          if (c["name"] == "dupr_ego_multigraph" || c["name"] == "dup1_multigraph") {
            ++seen;
            pass = pass && c["failures"] == 0;
          }
        }
      }
    }
    if (seen == 0) return "-";
    return std::string(verdict(pass)) + " (" + std::to_string(seen) + ")";
  };

  std::ostringstream out;
  out << "Minimal architecture matrix\n"
      << table({{"task", "graph class", "minimal sufficient", "unnecessary", "depth", "evidence"},
                {"K21 detection", "simple TEAG", "reverse", "ports, ego", "2", status("dup1")},
                {"K21 detection", "multigraph TEAG", "reverse+in_ports", "out_ports, ego", "2",
                 status("dup1-multi")},
                {"K2r detection", "simple TEAG", "reverse+ego", "ports", "4", status("dupr")},
                {"K2r detection", "multigraph TEAG", "reverse+in_ports+ego", "out_ports", "4",
                 status("dupr-multi")},
                {"l-cycle detection", "typed directed", "ego", "reverse, ports", "l",
                 status("cycle")}});

  if (!necessity.empty()) {
    std::vector<std::vector<std::string>> rows{
        {"row", "architecture (insufficient)", "depths", "seeds", "max L2 distance", "verdict"}};
    for (const auto& r : necessity) {
      std::vector<std::size_t> depths = r["depths"].get<std::vector<std::size_t>>();
      rows.push_back({r["row"].get<std::string>(), r["adaptations"]["label"].get<std::string>(),
                      join(depths), std::to_string(r["seeds"].get<std::size_t>()),
                      format_double(r["max_distance"].get<double>()),
                      r["verdict"].get<std::string>()});
    }
    out << "\nNecessity\n" << table(rows);
  }
  if (!sufficiency.empty()) {
    std::vector<std::vector<std::string>> rows{
        {"row", "construction", "param", "y(G1)", "y(G2)", "verdict"}};
    for (const auto& r : sufficiency) {
      std::string param = "-";
      if (!r["parameter"].is_null()) {
        param = r["parameter_name"].get<std::string>() + "=" +
                std::to_string(r["parameter"].get<std::size_t>());
      }
      rows.push_back({r["row"].get<std::string>(), r["construction"].get<std::string>(), param,
                      std::to_string(r["y_g1"].get<int>()), std::to_string(r["y_g2"].get<int>()),
                      r["verdict"].get<std::string>()});
    }
    out << "\nSufficiency\n" << table(rows);
  }
  out << "\nOverall: " << verdict(ok) << "\n";
  all_pass_out = ok;
  return out.str();
}

}  // namespace teag::harness
