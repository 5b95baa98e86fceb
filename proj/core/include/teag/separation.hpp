// Copyright 2026 The teag-lab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "teag/graph.hpp"

namespace teag::separation {

enum class PredicateKind { dup, cyc };

struct Predicate {
  PredicateKind kind = PredicateKind::dup;
  std::size_t parameter = 1;  // r for dup, cycle length for cyc
};

std::string to_string(const Predicate& predicate);

/// Two graphs whose target nodes carry opposite predicate labels although
/// their degree-type profiles agree. Bipartitions are set for entity-attribute
/// pairs and empty for plain digraphs.
struct SeparationPair {
  std::string id;
  TypedMultigraph g1;
  TypedMultigraph g2;
  std::optional<Bipartition> parts1;
  std::optional<Bipartition> parts2;
  std::optional<PortAssignment> ports1;
  std::optional<PortAssignment> ports2;
  NodeId target1 = 0;
  NodeId target2 = 0;
  Predicate predicate;
  int label1 = 1;
  int label2 = 0;

  // Throw for pairs without a bipartition.
  EntityAttributeView view1() const;
  EntityAttributeView view2() const;
};

/// K_{2,1} versus a single edge, simple. Canonical ports attached.
SeparationPair gen_k21_pair();

/// K_{2,2} versus two parallel-edge bundles. Canonical ports attached.
SeparationPair gen_parallel_pair();

/// Two K_{2,2} blocks versus the split configuration, with the fixed
/// adversarial port tables.
SeparationPair gen_k22_example();

struct IndexPartition {
  std::vector<std::size_t> s1;
  std::vector<std::size_t> s2;
};

/// Two K_{2,r} copies versus the split configuration driven by `partition`
/// (default {1} | {2..r}). p_out = j on every tau_j edge; class-1 entities
/// take p_in = 1 and class-2 entities p_in = 2.
SeparationPair gen_k2r_pair(std::size_t r, const std::optional<IndexPartition>& partition = {});

/// Two disjoint directed l-cycles versus one 2l-cycle. Canonical ports.
SeparationPair gen_cycle_pair(std::size_t length);

/// Two Person entities sharing an email node, plus a phone and an address.
/// Nodes in order: u, v, smith@x.com, 555-1234, 42 Main St.
TypedMultigraph running_example();

/// Directed cycle c_1 -> ... -> c_length -> c_1 over one node and edge type.
TypedMultigraph directed_cycle(std::size_t length);

/// Manifest: {pair, predicate, parameter, targets, expected_labels, files}.
std::string manifest_json(const SeparationPair& pair);

/// Writes g1.json, g2.json and manifest.json into `directory`.
void emit_pair(const SeparationPair& pair, const std::filesystem::path& directory);

/// Every pair in the acceptance grid: k21, parallel, k22, k2r for r in {2,3,4},
/// cycle for l in {3,5,7}.
std::vector<SeparationPair> acceptance_grid();

}  // namespace teag::separation
