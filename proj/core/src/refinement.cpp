// Copyright 2026 The teag-lab Authors
// SPDX-License-Identifier: Apache-2.0

#include "teag/refinement.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "teag/error.hpp"

namespace teag {

namespace {

using Message = std::array<std::int64_t, 4>;

constexpr std::int64_t kLayerZeroTag = -1;
constexpr std::int64_t kRefineTag = -2;
constexpr std::int64_t kSeparator = -3;

}  // namespace

std::size_t ColorAssignment::partition_size(std::size_t layer) const {
  const auto& colors = layers.at(layer);
  return std::set<Color>(colors.begin(), colors.end()).size();
}

std::int64_t ColorRefiner::name_key(const std::string& name) {
  return names_.try_emplace(name, static_cast<std::int64_t>(names_.size())).first->second;
}

Color ColorRefiner::compress(std::vector<std::int64_t> signature) {
  return labels_.try_emplace(std::move(signature), static_cast<Color>(labels_.size()))
      .first->second;
}

ColorAssignment ColorRefiner::refine(const TypedMultigraph& graph, const PortAssignment* ports,
                                     std::size_t depth, std::optional<NodeId> ego) {
  if (config_.uses_ports() && ports == nullptr) {
    throw Error("port flags are set but no port assignment was given");
  }
  if (ports != nullptr && ports->size() != graph.edge_count()) {
    throw Error("port assignment does not match the graph's edge count");
  }
  if (config_.ego_ids != ego.has_value()) {
    throw Error(config_.ego_ids ? "ego IDs are enabled but no ego node was given"
                                : "an ego node was given but ego IDs are disabled");
  }
  if (ego) graph.check_node(*ego);

  const std::size_t n = graph.node_count();
  std::vector<std::int64_t> edge_keys;
  for (const std::string& name : graph.edge_type_catalog()) edge_keys.push_back(name_key("e:" + name));

  ColorAssignment out;
  out.layers.reserve(depth + 1);
  std::vector<Color> current(n);
  for (NodeId v = 0; v < n; ++v) {
    const std::int64_t ego_bit = (ego && *ego == v) ? 1 : 0;
    current[v] =
        compress({kLayerZeroTag, name_key("n:" + graph.node_type_info(v).name), ego_bit});
  }
  out.layers.push_back(current);

  auto message = [&](const Edge& e, NodeId neighbour, const std::vector<Color>& colors) {
    std::int64_t p_in = 0;
    std::int64_t p_out = 0;
    if (config_.in_ports) p_in = ports->at(e.id).p_in;
    if (config_.out_ports) p_out = ports->at(e.id).p_out;
    return Message{colors[neighbour], edge_keys[e.type.value], p_in, p_out};
  };

  for (std::size_t layer = 1; layer <= depth; ++layer) {
    std::vector<Color> next(n);
    for (NodeId v = 0; v < n; ++v) {
      std::vector<Message> incoming;
      for (EdgeId e : graph.in_edges(v)) {
        incoming.push_back(message(graph.edge(e), graph.edge(e).src, current));
      }
      std::vector<Message> outgoing;
      if (config_.reverse_mp) {
        for (EdgeId e : graph.out_edges(v)) {
          outgoing.push_back(message(graph.edge(e), graph.edge(e).dst, current));
        }
      }
      std::sort(incoming.begin(), incoming.end());
      std::sort(outgoing.begin(), outgoing.end());

      std::vector<std::int64_t> sig{kRefineTag, current[v],
                                    static_cast<std::int64_t>(incoming.size())};
      for (const Message& m : incoming) sig.insert(sig.end(), m.begin(), m.end());
      sig.push_back(kSeparator);
      sig.push_back(static_cast<std::int64_t>(outgoing.size()));
      for (const Message& m : outgoing) sig.insert(sig.end(), m.begin(), m.end());
      next[v] = compress(std::move(sig));
    }
    current = std::move(next);
    out.layers.push_back(current);
  }
  return out;
}

ColorAssignment refine(const TypedMultigraph& graph, const PortAssignment* ports,
                       const AdaptationSet& config, std::size_t depth, std::optional<NodeId> ego) {
  ColorRefiner refiner(config);
  return refiner.refine(graph, ports, depth, ego);
}

std::vector<bool> indistinguishable_by_layer(const TypedMultigraph& g1, NodeId u1,
                                             const TypedMultigraph& g2, NodeId u2,
                                             const PortAssignment* ports1,
                                             const PortAssignment* ports2,
                                             const AdaptationSet& config, std::size_t depth) {
  g1.check_node(u1);
  g2.check_node(u2);
  ColorRefiner refiner(config);
  const auto ego1 = config.ego_ids ? std::optional<NodeId>(u1) : std::nullopt;
  const auto ego2 = config.ego_ids ? std::optional<NodeId>(u2) : std::nullopt;
  const ColorAssignment c1 = refiner.refine(g1, ports1, depth, ego1);
  const ColorAssignment c2 = refiner.refine(g2, ports2, depth, ego2);
  std::vector<bool> same;
  for (std::size_t k = 0; k <= depth; ++k) same.push_back(c1.at(k, u1) == c2.at(k, u2));
  return same;
}

bool indistinguishable(const TypedMultigraph& g1, NodeId u1, const TypedMultigraph& g2,
                       NodeId u2, const PortAssignment* ports1, const PortAssignment* ports2,
                       const AdaptationSet& config, std::size_t depth) {
  return indistinguishable_by_layer(g1, u1, g2, u2, ports1, ports2, config, depth).back();
}

}  // namespace teag
