// Copyright 2026 The teag-lab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "teag/graph.hpp"

namespace teag::construct {

// Exact, staged evaluations of the fixed-weight sufficiency constructions.
// Every stage reads only the per-node state produced by the stage before it.

/// One entry of an attribute's incoming-message multiset. For the multigraph
/// variant `count` is the number of distinct incoming ports carrying the
/// signature; otherwise it is the raw multiplicity.
struct SignatureCount {
  NodeTypeId entity_type;
  EdgeTypeId edge_type;
  std::size_t count = 0;
};

/// Sorted by (entity_type, edge_type).
using AttributeSummary = std::vector<SignatureCount>;

struct Dup1Result {
  std::vector<AttributeSummary> summaries;  // indexed by node id; empty off attributes
  std::vector<std::optional<bool>> output;  // set on entities only

  // Throws unless u is an entity of the evaluated graph.
  bool at(NodeId u) const;
};

/// Two passes: attributes collect (entity type, edge type) multiplicities,
/// then each entity reads the count for its own signature at every attribute
/// it points to and fires on a count of 2 or more. Refuses non-simple input.
Dup1Result dup1_simple(const EntityAttributeView& view);

/// As dup1_simple with counts replaced by the number of distinct p_in values.
/// Requires a valid port assignment.
Dup1Result dup1_multigraph(const EntityAttributeView& view, const PortAssignment& ports);

struct EgoLayerState {
  NodeId ego = 0;
  std::size_t r = 0;
  std::vector<std::vector<EdgeTypeId>> ego_types;  // layer 1, per attribute, sorted
  std::vector<std::size_t> ov;                     // layer 2, per entity
  std::vector<std::size_t> max_ov;                 // layer 3, per attribute
  bool output = false;                             // layer 4, at the ego
};

/// Four alternating passes computing Dup_r at the ego. Refuses non-simple
/// input; use dupr_ego_multigraph there. r = 1 is accepted.
EgoLayerState dupr_ego(const EntityAttributeView& view, NodeId ego, std::size_t r);

/// Multigraph variant. Attributes count parallel copies per (p_in, edge type)
/// at layer 1; each entity adds 1/count per qualifying edge at layer 2, so
/// every parallel bundle contributes exactly 1. Requires valid ports.
EgoLayerState dupr_ego_multigraph(const EntityAttributeView& view, const PortAssignment& ports,
                                  NodeId ego, std::size_t r);

struct WalkTrace {
  NodeId ego = 0;
  std::size_t length = 0;
  std::vector<std::vector<bool>> flags;  // flags[k][v], k = 0..length
  bool output = false;
};

/// Forward-only propagation of the ego flag for `length` layers. The output
/// is flags[length][ego]: a closed walk of that length, not a simple cycle.
WalkTrace cyc_ego(const TypedMultigraph& graph, NodeId ego, std::size_t length);

std::string to_json(const TypedMultigraph& graph, const Dup1Result& result);
std::string to_json(const TypedMultigraph& graph, const EgoLayerState& state);
std::string to_json(const TypedMultigraph& graph, const WalkTrace& trace);

}  // namespace teag::construct
