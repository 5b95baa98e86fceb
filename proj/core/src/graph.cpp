// Copyright 2026 The teag-lab Authors
// SPDX-License-Identifier: Apache-2.0

#include "teag/graph.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "teag/error.hpp"

namespace teag {

std::string_view to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::entity:
      return "entity";
    case NodeKind::attribute:
      return "attribute";
    case NodeKind::plain:
      return "plain";
  }
  return "plain";
}

NodeKind node_kind_from_string(std::string_view text) {
  if (text == "entity") return NodeKind::entity;
  if (text == "attribute") return NodeKind::attribute;
  if (text == "plain") return NodeKind::plain;
  throw Error("unknown node kind '" + std::string(text) + "'");
}

// ---------------------------------------------------------------------------
// TypedMultigraph

void TypedMultigraph::check_node(NodeId v) const {
  if (v >= node_types_.size()) {
    throw Error("unknown node id " + std::to_string(v));
  }
}

NodeTypeId TypedMultigraph::node_type(NodeId v) const {
  check_node(v);
  return node_types_[v];
}

const NodeType& TypedMultigraph::node_type_info(NodeId v) const {
  return node_catalog_[node_type(v).value];
}

const std::string& TypedMultigraph::node_name(NodeId v) const {
  check_node(v);
  return node_names_[v];
}

std::optional<NodeId> TypedMultigraph::find_node(std::string_view name) const {
  for (NodeId v = 0; v < node_names_.size(); ++v) {
    if (node_names_[v] == name) return v;
  }
  return std::nullopt;
}

const Edge& TypedMultigraph::edge(EdgeId e) const {
  if (e >= edges_.size()) throw Error("unknown edge id " + std::to_string(e));
  return edges_[e];
}

std::span<const EdgeId> TypedMultigraph::out_edges(NodeId v) const {
  check_node(v);
  return std::span<const EdgeId>(out_list_).subspan(out_offsets_[v],
                                                    out_offsets_[v + 1] - out_offsets_[v]);
}

std::span<const EdgeId> TypedMultigraph::in_edges(NodeId v) const {
  check_node(v);
  return std::span<const EdgeId>(in_list_).subspan(in_offsets_[v],
                                                   in_offsets_[v + 1] - in_offsets_[v]);
}

std::vector<NodeId> TypedMultigraph::predecessors(NodeId v) const {
  std::vector<NodeId> out;
  for (EdgeId e : in_edges(v)) out.push_back(edges_[e].src);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<NodeId> TypedMultigraph::successors(NodeId v) const {
  std::vector<NodeId> out;
  for (EdgeId e : out_edges(v)) out.push_back(edges_[e].dst);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

const std::string& TypedMultigraph::edge_type_name(EdgeTypeId t) const {
  if (t.value >= edge_catalog_.size()) {
    throw Error("unknown edge type id " + std::to_string(t.value));
  }
  return edge_catalog_[t.value];
}

std::optional<NodeTypeId> TypedMultigraph::find_node_type(std::string_view name) const {
  for (std::uint32_t i = 0; i < node_catalog_.size(); ++i) {
    if (node_catalog_[i].name == name) return NodeTypeId{i};
  }
  return std::nullopt;
}

std::optional<EdgeTypeId> TypedMultigraph::find_edge_type(std::string_view name) const {
  for (std::uint32_t i = 0; i < edge_catalog_.size(); ++i) {
    if (edge_catalog_[i] == name) return EdgeTypeId{i};
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// GraphBuilder

NodeTypeId GraphBuilder::add_node_type(std::string name, NodeKind kind) {
  if (graph_.find_node_type(name)) throw Error("duplicate node type '" + name + "'");
  graph_.node_catalog_.push_back({std::move(name), kind});
  return NodeTypeId{static_cast<std::uint32_t>(graph_.node_catalog_.size() - 1)};
}

EdgeTypeId GraphBuilder::add_edge_type(std::string name) {
  if (graph_.find_edge_type(name)) throw Error("duplicate edge type '" + name + "'");
  graph_.edge_catalog_.push_back(std::move(name));
  return EdgeTypeId{static_cast<std::uint32_t>(graph_.edge_catalog_.size() - 1)};
}

NodeTypeId GraphBuilder::node_type(std::string_view name, NodeKind kind) {
  if (auto found = graph_.find_node_type(name)) {
    if (graph_.node_catalog_[found->value].kind != kind) {
      throw Error("node type '" + std::string(name) + "' registered with another kind");
    }
    return *found;
  }
  return add_node_type(std::string(name), kind);
}

EdgeTypeId GraphBuilder::edge_type(std::string_view name) {
  if (auto found = graph_.find_edge_type(name)) return *found;
  return add_edge_type(std::string(name));
}

NodeId GraphBuilder::add_node(NodeTypeId type, std::string name) {
  if (type.value >= graph_.node_catalog_.size()) {
    throw Error("node type id " + std::to_string(type.value) + " is not registered");
  }
  graph_.node_types_.push_back(type);
  graph_.node_names_.push_back(std::move(name));
  return static_cast<NodeId>(graph_.node_types_.size() - 1);
}

EdgeId GraphBuilder::add_edge(NodeId src, NodeId dst, EdgeTypeId type) {
  graph_.check_node(src);
  graph_.check_node(dst);
  if (type.value >= graph_.edge_catalog_.size()) {
    throw Error("edge type id " + std::to_string(type.value) + " is not registered");
  }
  const auto id = static_cast<EdgeId>(graph_.edges_.size());
  graph_.edges_.push_back({id, src, dst, type});
  return id;
}

TypedMultigraph GraphBuilder::build() && {
  TypedMultigraph& g = graph_;
  const std::size_t n = g.node_types_.size();
  g.out_offsets_.assign(n + 1, 0);
  g.in_offsets_.assign(n + 1, 0);
  for (const Edge& e : g.edges_) {
    ++g.out_offsets_[e.src + 1];
    ++g.in_offsets_[e.dst + 1];
  }
  for (std::size_t v = 0; v < n; ++v) {
    g.out_offsets_[v + 1] += g.out_offsets_[v];
    g.in_offsets_[v + 1] += g.in_offsets_[v];
  }
  g.out_list_.assign(g.edges_.size(), 0);
  g.in_list_.assign(g.edges_.size(), 0);
  std::vector<std::size_t> out_fill(g.out_offsets_.begin(), g.out_offsets_.end() - 1);
  std::vector<std::size_t> in_fill(g.in_offsets_.begin(), g.in_offsets_.end() - 1);
  for (const Edge& e : g.edges_) {
    g.out_list_[out_fill[e.src]++] = e.id;
    g.in_list_[in_fill[e.dst]++] = e.id;
  }
  return std::move(graph_);
}

// ---------------------------------------------------------------------------
// Entity-attribute view

Bipartition bipartition_from_kinds(const TypedMultigraph& graph) {
  Bipartition parts;
  for (NodeId v = 0; v < graph.node_count(); ++v) {
    switch (graph.node_type_info(v).kind) {
      case NodeKind::entity:
        parts.entities.push_back(v);
        break;
      case NodeKind::attribute:
        parts.attributes.push_back(v);
        break;
      case NodeKind::plain:
        break;
    }
  }
  return parts;
}

EntityAttributeView::EntityAttributeView(const TypedMultigraph& graph, const Bipartition& parts)
    : graph_(&graph), side_(graph.node_count(), Side::none) {
  auto mark = [&](NodeId v, Side s) {
    graph.check_node(v);
    Side& cur = side_[v];
    if (cur == Side::none || cur == s) {
      cur = s;
    } else {
      cur = Side::both;
    }
  };
  for (NodeId v : parts.entities) mark(v, Side::entity);
  for (NodeId v : parts.attributes) mark(v, Side::attribute);
  for (NodeId v = 0; v < side_.size(); ++v) {
    if (side_[v] == Side::entity) entities_.push_back(v);
    if (side_[v] == Side::attribute) attributes_.push_back(v);
  }
}

EntityAttributeView::EntityAttributeView(const TypedMultigraph& graph)
    : EntityAttributeView(graph, bipartition_from_kinds(graph)) {}

EntityAttributeView::Side EntityAttributeView::side(NodeId v) const {
  graph_->check_node(v);
  return side_[v];
}

void EntityAttributeView::require_entity(NodeId v) const {
  if (side(v) != Side::entity) {
    throw Error("node " + std::to_string(v) + " is not an entity");
  }
}

EntityAttributeReport validate_entity_attribute(const EntityAttributeView& view) {
  const TypedMultigraph& g = view.graph();
  EntityAttributeReport report;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    switch (view.side(v)) {
      case EntityAttributeView::Side::none:
        report.unassigned_nodes.push_back(v);
        break;
      case EntityAttributeView::Side::both:
        report.doubly_assigned_nodes.push_back(v);
        break;
      case EntityAttributeView::Side::entity:
        if (g.node_type_info(v).kind != NodeKind::entity) {
          report.entity_type_violations.push_back(v);
        }
        break;
      case EntityAttributeView::Side::attribute:
        if (g.node_type_info(v).kind != NodeKind::attribute) {
          report.attribute_type_violations.push_back(v);
        }
        break;
    }
  }
  std::set<std::tuple<NodeId, NodeId, EdgeTypeId>> seen;
  std::set<std::tuple<NodeId, NodeId, EdgeTypeId>> repeated;
  for (const Edge& e : g.edges()) {
    if (!view.is_entity(e.src) || !view.is_attribute(e.dst)) {
      report.direction_violations.push_back(e.id);
    }
    if (!seen.emplace(e.src, e.dst, e.type).second) repeated.emplace(e.src, e.dst, e.type);
  }
  report.repeated_triples.assign(repeated.begin(), repeated.end());
  return report;
}

bool is_simple(const TypedMultigraph& graph) {
  std::set<std::tuple<NodeId, NodeId, EdgeTypeId>> seen;
  for (const Edge& e : graph.edges()) {
    if (!seen.emplace(e.src, e.dst, e.type).second) return false;
  }
  return true;
}

TypedNeighborhood typed_neighborhood(const EntityAttributeView& view, NodeId u) {
  view.require_entity(u);
  const TypedMultigraph& g = view.graph();
  TypedNeighborhood out;
  for (EdgeId e : g.out_edges(u)) out.emplace_back(g.edge(e).dst, g.edge(e).type);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Ports

void PortAssignment::set(EdgeId e, std::uint32_t p_in, std::uint32_t p_out) {
  if (e >= ports_.size()) ports_.resize(e + 1);
  ports_[e] = EdgePorts{p_in, p_out};
}

const EdgePorts& PortAssignment::at(EdgeId e) const {
  if (!has(e)) throw Error("no port entry for edge " + std::to_string(e));
  return *ports_[e];
}

PortReport validate_ports(const TypedMultigraph& graph, const PortAssignment& ports) {
  PortReport report;
  for (const Edge& e : graph.edges()) {
    const EdgePorts& p = ports.at(e.id);
    if (p.p_in == 0 || p.p_out == 0) report.non_positive_ports.push_back(e.id);
  }

  // (i): all edges of one (src, dst) pair agree with the first such edge.
  std::map<std::pair<NodeId, NodeId>, EdgePorts> pair_ports;
  for (const Edge& e : graph.edges()) {
    auto [it, inserted] = pair_ports.emplace(std::make_pair(e.src, e.dst), ports.at(e.id));
    if (!inserted && it->second != ports.at(e.id)) report.shared_port_violations.push_back(e.id);
  }

  // (ii)/(iii): across distinct (src, dst) pairs at one endpoint, ports must
  // differ. Edges whose pair collides with another pair are reported.
  std::map<std::pair<NodeId, std::uint32_t>, std::set<NodeId>> in_users;
  std::map<std::pair<NodeId, std::uint32_t>, std::set<NodeId>> out_users;
  for (const Edge& e : graph.edges()) {
    const EdgePorts& p = ports.at(e.id);
    in_users[{e.dst, p.p_in}].insert(e.src);
    out_users[{e.src, p.p_out}].insert(e.dst);
  }
  for (const Edge& e : graph.edges()) {
    const EdgePorts& p = ports.at(e.id);
    if (in_users[{e.dst, p.p_in}].size() > 1) report.distinct_in_port_violations.push_back(e.id);
    if (out_users[{e.src, p.p_out}].size() > 1) {
      report.distinct_out_port_violations.push_back(e.id);
    }
  }
  return report;
}

PortAssignment assign_canonical_ports(const TypedMultigraph& graph) {
  PortAssignment ports(graph.edge_count());
  for (const Edge& e : graph.edges()) {
    const auto preds = graph.predecessors(e.dst);
    const auto succs = graph.successors(e.src);
    const auto in_rank = std::lower_bound(preds.begin(), preds.end(), e.src) - preds.begin();
    const auto out_rank = std::lower_bound(succs.begin(), succs.end(), e.dst) - succs.begin();
    ports.set(e.id, static_cast<std::uint32_t>(in_rank + 1),
              static_cast<std::uint32_t>(out_rank + 1));
  }
  return ports;
}

bool is_functional(const TypedMultigraph& graph) {
  for (NodeId v = 0; v < graph.node_count(); ++v) {
    if (graph.in_degree(v) != 1 || graph.out_degree(v) != 1) return false;
  }
  return true;
}

bool AdaptationSet::subset_of(const AdaptationSet& other) const {
  return (!reverse_mp || other.reverse_mp) && (!in_ports || other.in_ports) &&
         (!out_ports || other.out_ports) && (!ego_ids || other.ego_ids);
}

std::string to_string(const AdaptationSet& set) {
  std::string out;
  auto add = [&](bool on, const char* name) {
    if (!on) return;
    if (!out.empty()) out += '+';
    out += name;
  };
  add(set.reverse_mp, "reverse");
  add(set.in_ports, "in_ports");
  add(set.out_ports, "out_ports");
  add(set.ego_ids, "ego");
  return out.empty() ? "forward" : out;
}

DegreeProfile degree_profile(const TypedMultigraph& graph) {
  DegreeProfile profile;
  for (NodeId v = 0; v < graph.node_count(); ++v) {
    profile.emplace_back(graph.node_type_info(v).name, graph.in_degree(v), graph.out_degree(v));
  }
  std::sort(profile.begin(), profile.end());
  return profile;
}

}  // namespace teag
