// Copyright 2026 The teag-lab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "teag/graph.hpp"

namespace teag::random {

using Engine = std::mt19937_64;

/// Engine for case `index` of a run seeded with `seed`; independent of the
/// order in which cases are visited.
Engine case_engine(std::uint64_t seed, std::uint64_t index);

struct TeagBounds {
  std::size_t max_entities = 8;
  std::size_t max_attributes = 10;
  std::size_t max_entity_types = 3;
  std::size_t max_attribute_types = 3;
  std::size_t max_edge_types = 3;
  std::size_t max_parallel = 1;  // 1 gives simple graphs
};

/// Random entity-attribute graph within `bounds`. Node kinds carry the
/// bipartition. Edge density is drawn per graph so that both sparse and
/// duplicate-rich instances occur.
TypedMultigraph random_teag(Engine& rng, const TeagBounds& bounds);

/// Valid ports from uniformly shuffled predecessor and successor orders.
PortAssignment random_valid_ports(const TypedMultigraph& graph, Engine& rng);

/// Random digraph with one node type and up to two edge types; self-loops and
/// parallel edges may occur.
TypedMultigraph random_digraph(Engine& rng, std::size_t max_nodes);

/// Random permutation graph: every node has in- and out-degree 1.
TypedMultigraph random_functional_graph(Engine& rng, std::size_t max_nodes);

/// Length of the cycle through v in a functional graph.
std::size_t cycle_length_through(const TypedMultigraph& functional, NodeId v);

}  // namespace teag::random
