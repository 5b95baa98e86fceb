// Copyright 2026 The teag-lab Authors
// SPDX-License-Identifier: Apache-2.0

#include "teag/constructions.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "json.hpp"
#include "teag/error.hpp"

namespace teag::construct {

namespace {

using nlohmann::json;

void require_teag(const EntityAttributeView& view) {
  const EntityAttributeReport report = validate_entity_attribute(view);
  if (!report.valid()) throw Error("input is not a valid typed entity-attribute graph");
}

void require_simple(const EntityAttributeView& view, const char* alternative) {
  if (!is_simple(view.graph())) {
    throw Error(std::string("input has parallel edges of one type; use ") + alternative);
  }
}

void require_valid_ports(const TypedMultigraph& graph, const PortAssignment& ports) {
  if (!validate_ports(graph, ports).valid()) throw Error("port assignment is not valid");
}

// Exact non-negative rational with 64-bit parts.
struct Fraction {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  Fraction& operator+=(Fraction o) {
    const std::uint64_t l = std::lcm(den, o.den);
    num = num * (l / den) + o.num * (l / o.den);
    den = l;
    const std::uint64_t g = std::gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    return *this;
  }
};

using SignatureKey = std::pair<NodeTypeId, EdgeTypeId>;

// Pass 1 (entity -> attribute) for both K_{2,1} constructions. `distinct`
// counts distinct p_in values per signature instead of raw messages.
std::vector<AttributeSummary> summarize(const EntityAttributeView& view,
                                        const PortAssignment* ports) {
  const TypedMultigraph& g = view.graph();
  std::vector<AttributeSummary> summaries(g.node_count());
  for (NodeId a : view.attributes()) {
    std::map<SignatureKey, std::set<std::uint32_t>> in_ports;
    std::map<SignatureKey, std::size_t> multiplicity;
    for (EdgeId e : g.in_edges(a)) {
      const Edge& edge = g.edge(e);
      const SignatureKey key{g.node_type(edge.src), edge.type};
      ++multiplicity[key];
      if (ports) in_ports[key].insert(ports->at(e).p_in);
    }
    for (const auto& [key, count] : multiplicity) {
      const std::size_t c = ports ? in_ports[key].size() : count;
      summaries[a].push_back(SignatureCount{key.first, key.second, c});
    }
  }
  return summaries;
}

// Pass 2 (attribute -> entity): readout at every entity.
Dup1Result read_out(const EntityAttributeView& view, std::vector<AttributeSummary> summaries) {
  const TypedMultigraph& g = view.graph();
  Dup1Result result;
  result.output.assign(g.node_count(), std::nullopt);
  for (NodeId u : view.entities()) {
    bool fired = false;
    for (EdgeId e : g.out_edges(u)) {
      const Edge& edge = g.edge(e);
      for (const SignatureCount& s : summaries[edge.dst]) {
        if (s.entity_type == g.node_type(u) && s.edge_type == edge.type && s.count >= 2) {
          fired = true;
        }
      }
    }
    result.output[u] = fired;
  }
  result.summaries = std::move(summaries);
  return result;
}

// Layer 1: edge types through which the ego reaches each attribute.
std::vector<std::vector<EdgeTypeId>> ego_types(const EntityAttributeView& view, NodeId ego) {
  const TypedMultigraph& g = view.graph();
  std::vector<std::vector<EdgeTypeId>> out(g.node_count());
  for (NodeId a : view.attributes()) {
    std::set<EdgeTypeId> types;
    for (EdgeId e : g.in_edges(a)) {
      if (g.edge(e).src == ego) types.insert(g.edge(e).type);
    }
    out[a].assign(types.begin(), types.end());
  }
  return out;
}

bool contains(const std::vector<EdgeTypeId>& sorted, EdgeTypeId t) {
  return std::binary_search(sorted.begin(), sorted.end(), t);
}

// Layers 3 and 4, shared by both Dup_r variants.
void finish_ego_layers(const EntityAttributeView& view, EgoLayerState& state) {
  const TypedMultigraph& g = view.graph();
  const NodeTypeId sigma_star = g.node_type(state.ego);
  state.max_ov.assign(g.node_count(), 0);
  for (NodeId a : view.attributes()) {
    std::size_t best = 0;
    for (EdgeId e : g.in_edges(a)) {
      const NodeId v = g.edge(e).src;
      if (v == state.ego) {
        // The ego-flagged message carries the ego's type.
        assert(g.node_type(v) == sigma_star);
        continue;
      }
      if (g.node_type(v) == sigma_star) best = std::max(best, state.ov[v]);
    }
    state.max_ov[a] = best;
  }
  std::size_t best = 0;
  for (EdgeId e : g.out_edges(state.ego)) best = std::max(best, state.max_ov[g.edge(e).dst]);
  state.output = best >= state.r;
}

void check_ego_inputs(const EntityAttributeView& view, NodeId ego, std::size_t r) {
  view.graph().check_node(ego);
  view.require_entity(ego);
  if (r == 0) throw Error("r must be at least 1");
}

std::string node_label(const TypedMultigraph& g, NodeId v) {
  return g.node_name(v).empty() ? std::to_string(v) : g.node_name(v);
}

}  // namespace

bool Dup1Result::at(NodeId u) const {
  if (u >= output.size() || !output[u]) {
    throw Error("node " + std::to_string(u) + " is not an entity of the evaluated graph");
  }
  return *output[u];
}

Dup1Result dup1_simple(const EntityAttributeView& view) {
  require_teag(view);
  require_simple(view, "dup1_multigraph");
  return read_out(view, summarize(view, nullptr));
}

Dup1Result dup1_multigraph(const EntityAttributeView& view, const PortAssignment& ports) {
  require_teag(view);
  require_valid_ports(view.graph(), ports);
  return read_out(view, summarize(view, &ports));
}

EgoLayerState dupr_ego(const EntityAttributeView& view, NodeId ego, std::size_t r) {
  check_ego_inputs(view, ego, r);
  require_teag(view);
  require_simple(view, "dupr_ego_multigraph with a port assignment");
  const TypedMultigraph& g = view.graph();

  EgoLayerState state;
  state.ego = ego;
  state.r = r;
  state.ego_types = ego_types(view, ego);

  state.ov.assign(g.node_count(), 0);
  for (NodeId v : view.entities()) {
    for (EdgeId e : g.out_edges(v)) {
      if (contains(state.ego_types[g.edge(e).dst], g.edge(e).type)) ++state.ov[v];
    }
  }
  finish_ego_layers(view, state);
  return state;
}

EgoLayerState dupr_ego_multigraph(const EntityAttributeView& view, const PortAssignment& ports,
                                  NodeId ego, std::size_t r) {
  check_ego_inputs(view, ego, r);
  require_teag(view);
  require_valid_ports(view.graph(), ports);
  const TypedMultigraph& g = view.graph();

  EgoLayerState state;
  state.ego = ego;
  state.r = r;
  state.ego_types = ego_types(view, ego);

  // Layer 1 also records, per attribute, how many parallel copies arrive on
  // each (p_in, edge type).
  std::vector<std::map<std::pair<std::uint32_t, EdgeTypeId>, std::uint64_t>> copies(
      g.node_count());
  for (NodeId a : view.attributes()) {
    for (EdgeId e : g.in_edges(a)) ++copies[a][{ports.at(e).p_in, g.edge(e).type}];
  }

  state.ov.assign(g.node_count(), 0);
  for (NodeId v : view.entities()) {
    Fraction total;
    for (EdgeId e : g.out_edges(v)) {
      const Edge& edge = g.edge(e);
      if (!contains(state.ego_types[edge.dst], edge.type)) continue;
      total += Fraction{1, copies[edge.dst].at({ports.at(e).p_in, edge.type})};
    }
    if (total.den != 1) throw Error("internal: fractional overlap count");
    state.ov[v] = static_cast<std::size_t>(total.num);
  }
  finish_ego_layers(view, state);
  return state;
}

WalkTrace cyc_ego(const TypedMultigraph& graph, NodeId ego, std::size_t length) {
  graph.check_node(ego);
  if (length < 3) throw Error("cycle length must be at least 3");
  WalkTrace trace;
  trace.ego = ego;
  trace.length = length;
  std::vector<bool> flag(graph.node_count(), false);
  flag[ego] = true;
  trace.flags.push_back(flag);
  for (std::size_t k = 1; k <= length; ++k) {
    std::vector<bool> next(graph.node_count(), false);
    for (NodeId v = 0; v < graph.node_count(); ++v) {
      for (EdgeId e : graph.in_edges(v)) {
        if (flag[graph.edge(e).src]) {
          next[v] = true;
          break;
        }
      }
    }
    flag = std::move(next);
    trace.flags.push_back(flag);
  }
  trace.output = flag[ego];
  return trace;
}

std::string to_json(const TypedMultigraph& graph, const Dup1Result& result) {
  json doc;
  doc["construction"] = "dup1";
  json attrs = json::object();
  for (NodeId a = 0; a < result.summaries.size(); ++a) {
    if (result.summaries[a].empty()) continue;
    json entries = json::array();
    for (const SignatureCount& s : result.summaries[a]) {
      entries.push_back({{"entity_type", graph.node_type_catalog()[s.entity_type.value].name},
                         {"edge_type", graph.edge_type_name(s.edge_type)},
                         {"count", s.count}});
    }
    attrs[node_label(graph, a)] = entries;
  }
  doc["summaries"] = attrs;
  json out = json::object();
  for (NodeId u = 0; u < result.output.size(); ++u) {
    if (result.output[u]) out[node_label(graph, u)] = *result.output[u] ? 1 : 0;
  }
  doc["output"] = out;
  return doc.dump(2) + "\n";
}

std::string to_json(const TypedMultigraph& graph, const EgoLayerState& state) {
  json doc;
  doc["construction"] = "dupr_ego";
  doc["ego"] = node_label(graph, state.ego);
  doc["r"] = state.r;
  json types = json::object();
  json max_ov = json::object();
  json ov = json::object();
  for (NodeId v = 0; v < graph.node_count(); ++v) {
    const NodeKind kind = graph.node_type_info(v).kind;
    if (kind == NodeKind::attribute) {
      json names = json::array();
      for (EdgeTypeId t : state.ego_types[v]) names.push_back(graph.edge_type_name(t));
      types[node_label(graph, v)] = names;
      max_ov[node_label(graph, v)] = state.max_ov[v];
    } else if (kind == NodeKind::entity) {
      ov[node_label(graph, v)] = state.ov[v];
    }
  }
  doc["layer1_ego_types"] = types;
  doc["layer2_ov"] = ov;
  doc["layer3_max_ov"] = max_ov;
  doc["output"] = state.output ? 1 : 0;
  return doc.dump(2) + "\n";
}

std::string to_json(const TypedMultigraph& graph, const WalkTrace& trace) {
  json doc;
  doc["construction"] = "cyc_ego";
  doc["ego"] = node_label(graph, trace.ego);
  doc["length"] = trace.length;
  json layers = json::array();
  for (const auto& flags : trace.flags) {
    json active = json::array();
    for (NodeId v = 0; v < flags.size(); ++v) {
      if (flags[v]) active.push_back(node_label(graph, v));
    }
    layers.push_back(active);
  }
  doc["flagged_per_layer"] = layers;
  doc["output"] = trace.output ? 1 : 0;
  return doc.dump(2) + "\n";
}

}  // namespace teag::construct
