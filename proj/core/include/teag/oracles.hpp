// Copyright 2026 The teag-lab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>

#include "teag/graph.hpp"

// Brute-force ground truth. Nothing here shares code with the constructions.
namespace teag::oracle {

/// |N_typed(u) ∩ N_typed(v)|.
std::size_t overlap(const EntityAttributeView& view, NodeId u, NodeId v);

/// 1 iff some other entity of u's type overlaps u in at least r typed pairs.
bool dup_r(const EntityAttributeView& view, NodeId u, std::size_t r);

/// 1 iff v lies on a directed simple cycle with exactly `length` distinct
/// vertices. Edge types along the cycle are unrestricted. length >= 3.
bool cyc(const TypedMultigraph& graph, NodeId v, std::size_t length);

/// 1 iff a directed walk of exactly `length` steps leads from v back to v.
bool closed_walk(const TypedMultigraph& graph, NodeId v, std::size_t length);

/// Symmetric attribute similarity in [0, 1]. Unlisted pairs are 0, the
/// diagonal is fixed at 1.
class SimilarityTable {
 public:
  SimilarityTable() = default;

  // Throws if value is outside [0, 1] or if a == b and value != 1.
  void set(NodeId a, NodeId b, double value);
  double get(NodeId a, NodeId b) const;
  std::size_t size() const { return table_.size(); }

  // JSON array of {a, b, sim}.
  static SimilarityTable parse(const std::string& text);

 private:
  std::map<std::pair<NodeId, NodeId>, double> table_;
};

/// Sum over (a, tau) in N_typed(u) of the best same-edge-type similarity in
/// N_typed(v); an empty max contributes 0. No same-node-type requirement.
double soft_overlap(const EntityAttributeView& view, NodeId u, NodeId v,
                    const SimilarityTable& sims);

}  // namespace teag::oracle
