// Copyright 2026 The teag-lab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "teag/graph.hpp"

namespace teag {

using Color = std::uint32_t;

/// Colors per layer: layers[k][v] for k = 0..depth.
struct ColorAssignment {
  std::vector<std::vector<Color>> layers;

  std::size_t depth() const { return layers.empty() ? 0 : layers.size() - 1; }
  Color at(std::size_t layer, NodeId v) const { return layers.at(layer).at(v); }
  std::size_t partition_size(std::size_t layer) const;
};

/// 1-WL color refinement with the adaptation-dependent message signature.
///
/// A node's layer-0 color is its node-type name plus, under ego IDs, the ego
/// bit. At layer k its color compresses (own color, sorted incoming messages,
/// sorted outgoing messages), where a message is (neighbour color, edge-type
/// name, p_in, p_out); port slots are 0 when the flag is off and the outgoing
/// multiset is empty unless reverse_mp is set.
///
/// The label dictionary lives in the refiner, so colors from several refine()
/// calls on one refiner are comparable across graphs.
class ColorRefiner {
 public:
  explicit ColorRefiner(AdaptationSet config) : config_(config) {}

  ColorAssignment refine(const TypedMultigraph& graph, const PortAssignment* ports,
                         std::size_t depth, std::optional<NodeId> ego = std::nullopt);

  const AdaptationSet& config() const { return config_; }
  std::size_t dictionary_size() const { return labels_.size(); }

 private:
  Color compress(std::vector<std::int64_t> signature);
  std::int64_t name_key(const std::string& name);

  AdaptationSet config_;
  std::map<std::vector<std::int64_t>, Color> labels_;
  std::map<std::string, std::int64_t> names_;
};

/// One-shot refinement with a private dictionary.
ColorAssignment refine(const TypedMultigraph& graph, const PortAssignment* ports,
                       const AdaptationSet& config, std::size_t depth,
                       std::optional<NodeId> ego = std::nullopt);

/// True iff u1 in g1 and u2 in g2 get the same color at `depth` under a shared
/// dictionary. Under ego IDs the ego sits on the query node of each graph.
bool indistinguishable(const TypedMultigraph& g1, NodeId u1, const TypedMultigraph& g2,
                       NodeId u2, const PortAssignment* ports1, const PortAssignment* ports2,
                       const AdaptationSet& config, std::size_t depth);

/// Per-layer verdicts from one joint run: entry k is true iff the two query
/// nodes share a color at layer k.
std::vector<bool> indistinguishable_by_layer(const TypedMultigraph& g1, NodeId u1,
                                             const TypedMultigraph& g2, NodeId u2,
                                             const PortAssignment* ports1,
                                             const PortAssignment* ports2,
                                             const AdaptationSet& config, std::size_t depth);

}  // namespace teag
