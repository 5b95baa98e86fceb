// Copyright 2026 The teag-lab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace teag {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

struct NodeTypeId {
  std::uint32_t value = 0;
  auto operator<=>(const NodeTypeId&) const = default;
};

struct EdgeTypeId {
  std::uint32_t value = 0;
  auto operator<=>(const EdgeTypeId&) const = default;
};

enum class NodeKind { entity, attribute, plain };

std::string_view to_string(NodeKind kind);
NodeKind node_kind_from_string(std::string_view text);

struct NodeType {
  std::string name;
  NodeKind kind = NodeKind::plain;
};

struct Edge {
  EdgeId id = 0;
  NodeId src = 0;
  NodeId dst = 0;
  EdgeTypeId type;
};

class GraphBuilder;

/// Typed directed multigraph. Node and edge ids are dense and assigned in
/// insertion order; parallel edges keep distinct ids. Immutable once built.
class TypedMultigraph {
 public:
  TypedMultigraph() = default;

  std::size_t node_count() const { return node_types_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  NodeTypeId node_type(NodeId v) const;
  const NodeType& node_type_info(NodeId v) const;
  const std::string& node_name(NodeId v) const;
  std::optional<NodeId> find_node(std::string_view name) const;

  const Edge& edge(EdgeId e) const;
  std::span<const Edge> edges() const { return edges_; }

  // Incident edge ids, ascending.
  std::span<const EdgeId> out_edges(NodeId v) const;
  std::span<const EdgeId> in_edges(NodeId v) const;

  std::size_t in_degree(NodeId v) const { return in_edges(v).size(); }
  std::size_t out_degree(NodeId v) const { return out_edges(v).size(); }

  // Distinct neighbours, ascending node id.
  std::vector<NodeId> predecessors(NodeId v) const;
  std::vector<NodeId> successors(NodeId v) const;

  std::span<const NodeType> node_type_catalog() const { return node_catalog_; }
  std::span<const std::string> edge_type_catalog() const { return edge_catalog_; }
  const std::string& edge_type_name(EdgeTypeId t) const;
  std::optional<NodeTypeId> find_node_type(std::string_view name) const;
  std::optional<EdgeTypeId> find_edge_type(std::string_view name) const;

  void check_node(NodeId v) const;

 private:
  friend class GraphBuilder;

  std::vector<NodeType> node_catalog_;
  std::vector<std::string> edge_catalog_;
  std::vector<NodeTypeId> node_types_;
  std::vector<std::string> node_names_;
  std::vector<Edge> edges_;
  // CSR adjacency over edge ids.
  std::vector<std::size_t> out_offsets_;
  std::vector<EdgeId> out_list_;
  std::vector<std::size_t> in_offsets_;
  std::vector<EdgeId> in_list_;
};

/// Single-owner construction. Type catalogs are registered here and frozen by
/// build().
class GraphBuilder {
 public:
  NodeTypeId add_node_type(std::string name, NodeKind kind);
  EdgeTypeId add_edge_type(std::string name);

  NodeId add_node(NodeTypeId type, std::string name = {});
  EdgeId add_edge(NodeId src, NodeId dst, EdgeTypeId type);

  // Looks up or registers a type by name.
  NodeTypeId node_type(std::string_view name, NodeKind kind);
  EdgeTypeId edge_type(std::string_view name);

  std::size_t node_count() const { return graph_.node_types_.size(); }

  TypedMultigraph build() &&;

 private:
  TypedMultigraph graph_;
};

/// Entity/attribute membership claimed for a graph.
struct Bipartition {
  std::vector<NodeId> entities;
  std::vector<NodeId> attributes;
};

/// Bipartition derived from the node-type kinds: entity-kind nodes become
/// entities, attribute-kind nodes attributes. Plain nodes are left out.
Bipartition bipartition_from_kinds(const TypedMultigraph& graph);

/// A bipartition certificate over a graph. Non-owning: the graph must outlive
/// the view. Construction never rejects; use validate_entity_attribute().
class EntityAttributeView {
 public:
  enum class Side : std::uint8_t { none, entity, attribute, both };

  EntityAttributeView(const TypedMultigraph& graph, const Bipartition& parts);
  explicit EntityAttributeView(const TypedMultigraph& graph);

  const TypedMultigraph& graph() const { return *graph_; }
  Side side(NodeId v) const;
  bool is_entity(NodeId v) const { return side(v) == Side::entity; }
  bool is_attribute(NodeId v) const { return side(v) == Side::attribute; }
  const std::vector<NodeId>& entities() const { return entities_; }
  const std::vector<NodeId>& attributes() const { return attributes_; }

  // Throws unless v is an entity.
  void require_entity(NodeId v) const;

 private:
  const TypedMultigraph* graph_;
  std::vector<Side> side_;
  std::vector<NodeId> entities_;
  std::vector<NodeId> attributes_;
};

struct EntityAttributeReport {
  std::vector<NodeId> unassigned_nodes;       // in neither set
  std::vector<NodeId> doubly_assigned_nodes;  // in both sets
  std::vector<EdgeId> direction_violations;   // not entity -> attribute
  std::vector<NodeId> entity_type_violations;
  std::vector<NodeId> attribute_type_violations;
  std::vector<std::tuple<NodeId, NodeId, EdgeTypeId>> repeated_triples;

  bool partition_ok() const { return unassigned_nodes.empty() && doubly_assigned_nodes.empty(); }
  bool direction_ok() const { return direction_violations.empty(); }
  bool types_ok() const {
    return entity_type_violations.empty() && attribute_type_violations.empty();
  }
  bool valid() const { return partition_ok() && direction_ok() && types_ok(); }
  bool simple() const { return repeated_triples.empty(); }
};

EntityAttributeReport validate_entity_attribute(const EntityAttributeView& view);

/// True iff no (src, dst, edge type) triple carries more than one edge.
bool is_simple(const TypedMultigraph& graph);

/// { (a, tau) : (u, a, tau) in E }, sorted, parallel edges collapsed.
using TypedNeighborhood = std::vector<std::pair<NodeId, EdgeTypeId>>;
TypedNeighborhood typed_neighborhood(const EntityAttributeView& view, NodeId u);

struct EdgePorts {
  std::uint32_t p_in = 0;
  std::uint32_t p_out = 0;
  auto operator<=>(const EdgePorts&) const = default;
};

/// Per-edge incoming/outgoing port labels, indexed by edge id.
class PortAssignment {
 public:
  PortAssignment() = default;
  explicit PortAssignment(std::size_t edge_count) : ports_(edge_count) {}

  std::size_t size() const { return ports_.size(); }
  void set(EdgeId e, std::uint32_t p_in, std::uint32_t p_out);
  bool has(EdgeId e) const { return e < ports_.size() && ports_[e].has_value(); }
  // Throws if the edge has no entry.
  const EdgePorts& at(EdgeId e) const;

 private:
  std::vector<std::optional<EdgePorts>> ports_;
};

struct PortReport {
  std::vector<EdgeId> shared_port_violations;        // (i)
  std::vector<EdgeId> distinct_in_port_violations;   // (ii)
  std::vector<EdgeId> distinct_out_port_violations;  // (iii)
  std::vector<EdgeId> non_positive_ports;

  bool property_i() const { return shared_port_violations.empty(); }
  bool property_ii() const { return distinct_in_port_violations.empty(); }
  bool property_iii() const { return distinct_out_port_violations.empty(); }
  bool valid() const {
    return property_i() && property_ii() && property_iii() && non_positive_ports.empty();
  }
};

/// Throws if any edge lacks an entry.
PortReport validate_ports(const TypedMultigraph& graph, const PortAssignment& ports);

/// Ports from the rank of each distinct predecessor/successor in ascending
/// node-id order (1-based).
PortAssignment assign_canonical_ports(const TypedMultigraph& graph);

/// Every node has in-degree 1 and out-degree 1.
bool is_functional(const TypedMultigraph& graph);

struct AdaptationSet {
  bool reverse_mp = false;
  bool in_ports = false;
  bool out_ports = false;
  bool ego_ids = false;

  bool uses_ports() const { return in_ports || out_ports; }
  bool operator==(const AdaptationSet&) const = default;
  // Component-wise implication.
  bool subset_of(const AdaptationSet& other) const;
};

std::string to_string(const AdaptationSet& set);

/// Sorted multiset of (node type name, in-degree, out-degree).
using DegreeProfile = std::vector<std::tuple<std::string, std::size_t, std::size_t>>;
DegreeProfile degree_profile(const TypedMultigraph& graph);

}  // namespace teag
