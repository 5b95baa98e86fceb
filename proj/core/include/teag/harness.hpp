// Copyright 2026 The teag-lab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "teag/graph.hpp"

namespace teag::harness {

enum class Row { dup1, dup1_multi, dupr, cycle };

std::string_view to_string(Row row);
Row row_from_string(std::string_view text);
inline constexpr Row kAllRows[] = {Row::dup1, Row::dup1_multi, Row::dupr, Row::cycle};

/// Runs body(i) for i in [0, count) on up to `jobs` threads. The first
/// exception thrown by any task is rethrown after all threads join.
void parallel_for(std::size_t count, std::size_t jobs, const std::function<void(std::size_t)>& body);

/// Master seed: TEAG_LAB_SEED when set, otherwise `fallback`.
std::uint64_t master_seed(std::uint64_t fallback = 0);

// ---------------------------------------------------------------------------
// Necessity

/// Insufficient adaptation set of each row.
AdaptationSet necessity_adaptations(Row row);
std::vector<std::size_t> default_depths(Row row);

struct NecessityOptions {
  std::size_t seeds = 100;
  std::size_t hidden_dim = 32;
  std::vector<std::size_t> depths;  // empty: row default
  double tolerance = 0.0;
  std::uint64_t master_seed = 0;
  std::size_t jobs = 1;
};

struct NecessityTrial {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  std::size_t depth = 0;
  double distance = 0.0;                // final layer
  std::vector<double> layer_distances;  // layers 0..depth
};

struct NecessityReport {
  Row row = Row::dup1;
  std::string pair;
  AdaptationSet adaptations;
  std::vector<std::size_t> depths;
  std::size_t seeds = 0;
  std::size_t hidden_dim = 0;
  std::uint64_t master_seed = 0;
  double tolerance = 0.0;
  std::vector<NecessityTrial> trials;  // ordered by (seed index, depth)
  double max_distance = 0.0;
  bool pass = false;
};

NecessityReport run_necessity(Row row, const NecessityOptions& options);

// ---------------------------------------------------------------------------
// Sufficiency

struct SufficiencyReport {
  Row row = Row::dup1;
  std::string construction;
  std::string pair;
  std::optional<std::size_t> parameter;  // r or cycle length
  int y1 = -1;
  int y2 = -1;
  int expected1 = 1;
  int expected2 = 0;
  bool pass = false;
};

/// dup1 and dup1-multi take no parameter; dupr needs r >= 2 and cycle a length >= 3.
SufficiencyReport run_sufficiency(Row row, std::optional<std::size_t> parameter = {});

/// The eight parameterized rows: dup1, dup1-multi, dupr r = 2..4, cycle l = 3, 5, 7.
std::vector<SufficiencyReport> run_sufficiency_table();

// ---------------------------------------------------------------------------
// Refinement certificates

struct CertificateResult {
  std::string id;
  std::string pair;
  AdaptationSet adaptations;
  std::size_t depth = 0;
  bool expect_indistinguishable = true;
  // Indistinguishable certificates check every layer 0..depth; the others
  // check the last layer only.
  bool all_layers = false;
  std::vector<bool> same_color;  // per layer 0..depth
  bool pass = false;
};

struct CertificateReport {
  std::size_t depth_bound = 16;
  std::vector<CertificateResult> results;
  bool pass = false;
};

CertificateReport run_certificates(std::size_t depth_bound = 16);

// ---------------------------------------------------------------------------
// Fuzzing

struct FuzzOptions {
  std::uint64_t seed = 0;
  std::size_t simple_graphs = 500;
  std::size_t multigraphs = 200;
  std::size_t port_assignments = 3;
  std::size_t digraphs = 300;
  std::size_t max_entities = 8;
  std::size_t max_attributes = 10;
  std::size_t max_entity_types = 3;
  std::size_t max_edge_types = 3;
  std::size_t max_parallel = 2;
  std::size_t max_digraph_nodes = 8;
  std::size_t max_cycle_length = 8;
  std::size_t jobs = 1;
};

/// Throws when the bounds exceed oracle tractability (more than 8 entities,
/// 10 attributes, 3 entity or edge types, or a cycle length / digraph size
/// above 8), or when fewer than one port assignment per multigraph is asked.
void check_fuzz_bounds(const FuzzOptions& options);

struct Counterexample {
  std::string check;
  std::string inputs;  // JSON object text
  std::string graph;   // interchange document text
};

struct FuzzCheck {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::size_t positives = 0;  // cases whose oracle label is 1
};

struct FuzzReport {
  FuzzOptions options;
  std::vector<FuzzCheck> checks;
  std::vector<Counterexample> counterexamples;
  bool pass = false;

  // Throws on an unknown name.
  const FuzzCheck& check(std::string_view name) const;
};

FuzzReport run_fuzz(const FuzzOptions& options);

// ---------------------------------------------------------------------------
// Serialization. JSON output is deterministic: sorted keys, no timestamps.

std::string to_json(const std::vector<NecessityReport>& reports);
std::string to_json(const std::vector<SufficiencyReport>& reports);
std::string to_json(const CertificateReport& report);
std::string to_json(const FuzzReport& report);

std::string to_text(const std::vector<NecessityReport>& reports);
std::string to_text(const std::vector<SufficiencyReport>& reports);
std::string to_text(const CertificateReport& report);
std::string to_text(const FuzzReport& report);

/// Renders report documents produced by the to_json overloads as text tables:
/// the minimal-architecture matrix, necessity and sufficiency. Returns the
/// rendering and sets `all_pass` to the conjunction of the merged verdicts.
std::string render_report_tables(const std::vector<std::string>& documents, bool& all_pass);

}  // namespace teag::harness
