// Copyright 2026 The teag-lab Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <filesystem>

#include "reference.hpp"
#include "teag/error.hpp"
#include "teag/graph.hpp"
#include "teag/interchange.hpp"
#include "teag/random_graphs.hpp"
#include "teag/separation.hpp"

namespace teag {
namespace {

TypedMultigraph small_multigraph() {
  GraphBuilder b;
  const auto person = b.node_type("Person", NodeKind::entity);
  const auto phone = b.node_type("Phone", NodeKind::attribute);
  const auto has = b.edge_type("hasPhone");
  const auto alt = b.edge_type("altPhone");
  const NodeId u = b.add_node(person, "u");
  const NodeId v = b.add_node(person, "v");
  const NodeId p = b.add_node(phone, "p");
  b.add_edge(u, p, has);
  b.add_edge(u, p, has);
  b.add_edge(u, p, alt);
  b.add_edge(v, p, has);
  return std::move(b).build();
}

TEST(GraphBuilder, AssignsDenseIdsAndAdjacency) {
  const TypedMultigraph g = small_multigraph();
  EXPECT_EQ(g.node_count(), 3u);
  EXPECT_EQ(g.edge_count(), 4u);
  EXPECT_EQ(g.out_degree(0), 3u);
  EXPECT_EQ(g.in_degree(2), 4u);
  EXPECT_EQ(g.predecessors(2), (std::vector<NodeId>{0, 1}));
  EXPECT_EQ(g.successors(0), (std::vector<NodeId>{2}));
  EXPECT_EQ(*g.find_node("v"), 1u);
  EXPECT_FALSE(g.find_node("nobody").has_value());
  EXPECT_EQ(g.edge_type_name(g.edge(2).type), "altPhone");
}

TEST(GraphBuilder, RejectsUnknownNodesAndTypes) {
  GraphBuilder b;
  const auto t = b.node_type("T", NodeKind::plain);
  b.add_node(t);
  EXPECT_THROW(b.add_edge(0, 5, b.edge_type("e")), Error);
  EXPECT_THROW(b.add_edge(0, 0, EdgeTypeId{9}), Error);
  EXPECT_THROW(b.add_node(NodeTypeId{4}), Error);
  EXPECT_THROW(b.add_node_type("T", NodeKind::plain), Error);
  EXPECT_THROW(b.node_type("T", NodeKind::entity), Error);
}

TEST(Simplicity, ParallelEdgesOfOneTypeBreakSimplicity) {
  EXPECT_FALSE(is_simple(small_multigraph()));
  EXPECT_TRUE(is_simple(separation::running_example()));
}

TEST(EntityAttribute, ValidatesPartitionDirectionAndTypes) {
  const TypedMultigraph g = small_multigraph();
  const EntityAttributeReport ok = validate_entity_attribute(EntityAttributeView(g));
  EXPECT_TRUE(ok.valid());
  EXPECT_FALSE(ok.simple());

  // Attribute claimed as entity and entity missing.
  const Bipartition bad{{0, 2}, {}};
  const EntityAttributeReport r = validate_entity_attribute(EntityAttributeView(g, bad));
  EXPECT_FALSE(r.partition_ok());
  EXPECT_FALSE(r.direction_ok());
  EXPECT_FALSE(r.types_ok());

  const Bipartition both{{0, 1, 2}, {2}};
  EXPECT_EQ(validate_entity_attribute(EntityAttributeView(g, both)).doubly_assigned_nodes,
            std::vector<NodeId>{2});
}

TEST(EntityAttribute, TypedNeighborhoodCollapsesParallelEdges) {
  const TypedMultigraph g = small_multigraph();
  const EntityAttributeView view(g);
  const TypedNeighborhood n = typed_neighborhood(view, 0);
  ASSERT_EQ(n.size(), 2u);
  EXPECT_THROW(typed_neighborhood(view, 2), Error);
}

TEST(Ports, CanonicalAssignmentIsValid) {
  const TypedMultigraph g = small_multigraph();
  const PortAssignment ports = assign_canonical_ports(g);
  const PortReport report = validate_ports(g, ports);
  EXPECT_TRUE(report.valid());
  EXPECT_EQ(ports.at(0), ports.at(1));
  EXPECT_EQ(ports.at(0), ports.at(2));  // same (src, dst) pair
  EXPECT_NE(ports.at(0).p_in, ports.at(3).p_in);
}

TEST(Ports, DetectsEachPropertyViolation) {
  const TypedMultigraph g = small_multigraph();
  PortAssignment shared = assign_canonical_ports(g);
  shared.set(1, 1, 2);
  EXPECT_FALSE(validate_ports(g, shared).property_i());

  PortAssignment in_clash = assign_canonical_ports(g);
  in_clash.set(3, 1, 1);
  EXPECT_FALSE(validate_ports(g, in_clash).property_ii());

  // Two destinations from one source sharing p_out.
  const auto pair = separation::gen_k22_example();
  PortAssignment out_clash = *pair.ports1;
  const EdgePorts first = out_clash.at(0);
  out_clash.set(1, out_clash.at(1).p_in, first.p_out);
  EXPECT_FALSE(validate_ports(pair.g1, out_clash).property_iii());

  PortAssignment zero = assign_canonical_ports(g);
  zero.set(3, 0, 1);
  EXPECT_FALSE(validate_ports(g, zero).valid());

  EXPECT_THROW(validate_ports(g, PortAssignment(2)), Error);
}

TEST(Ports, RandomAssignmentsAreValid) {
  for (std::uint64_t i = 0; i < 50; ++i) {
    random::Engine rng = random::case_engine(11, i);
    random::TeagBounds bounds;
    bounds.max_parallel = 2;
    const TypedMultigraph g = random::random_teag(rng, bounds);
    EXPECT_TRUE(validate_ports(g, random::random_valid_ports(g, rng)).valid());
  }
}

TEST(Functional, CyclesAreFunctionalAndTreesAreNot) {
  EXPECT_TRUE(is_functional(separation::directed_cycle(4)));
  EXPECT_FALSE(is_functional(separation::running_example()));
}

TEST(Adaptations, SubsetAndLabel) {
  AdaptationSet none;
  AdaptationSet rev;
  rev.reverse_mp = true;
  AdaptationSet all{true, true, true, true};
  EXPECT_TRUE(none.subset_of(rev));
  EXPECT_TRUE(rev.subset_of(all));
  EXPECT_FALSE(all.subset_of(rev));
  EXPECT_EQ(to_string(none), "forward");
  EXPECT_EQ(to_string(all), "reverse+in_ports+out_ports+ego");
}

TEST(DegreeProfile, MatchesEdgeListCount) {
  const TypedMultigraph g = small_multigraph();
  const DegreeProfile p = degree_profile(g);
  EXPECT_EQ(p, reference::degree_types(g));
}

TEST(Interchange, RoundTripPreservesGraphPortsAndBipartition) {
  const auto pair = separation::gen_k22_example();
  const std::string text = dump_graph_document(pair.g2, &*pair.ports2, &*pair.parts2);
  const GraphDocument doc = parse_graph_document(text);
  ASSERT_EQ(doc.graph.node_count(), pair.g2.node_count());
  ASSERT_EQ(doc.graph.edge_count(), pair.g2.edge_count());
  for (EdgeId e = 0; e < doc.graph.edge_count(); ++e) {
    EXPECT_EQ(doc.graph.edge(e).src, pair.g2.edge(e).src);
    EXPECT_EQ(doc.graph.edge(e).dst, pair.g2.edge(e).dst);
    EXPECT_EQ(doc.graph.edge_type_name(doc.graph.edge(e).type),
              pair.g2.edge_type_name(pair.g2.edge(e).type));
    EXPECT_EQ(doc.ports->at(e), pair.ports2->at(e));
  }
  EXPECT_EQ(doc.bipartition->entities, pair.parts2->entities);
  EXPECT_EQ(doc.graph.node_name(1), "v_1");
  EXPECT_EQ(dump_graph_document(doc.graph, &*doc.ports, &*doc.bipartition), text);
}

TEST(Interchange, AcceptsTypeIndicesAndRejectsMalformedInput) {
  const std::string by_index = R"({
    "node_types": [{"name": "P", "kind": "entity"}, {"name": "A", "kind": "attribute"}],
    "edge_types": ["has"],
    "nodes": [{"id": 0, "type": 0}, {"id": 1, "type": "A"}],
    "edges": [{"id": 0, "src": 0, "dst": 1, "type": 0}]
  })";
  const GraphDocument doc = parse_graph_document(by_index);
  EXPECT_EQ(doc.graph.node_type_info(1).name, "A");
  EXPECT_FALSE(doc.ports.has_value());

  EXPECT_THROW(parse_graph_document("{not json"), Error);
  EXPECT_THROW(parse_graph_document(R"({"node_types": []})"), Error);
  const std::string gap = R"({
    "node_types": [{"name": "P", "kind": "plain"}], "edge_types": [],
    "nodes": [{"id": 0, "type": 0}, {"id": 2, "type": 0}], "edges": []
  })";
  EXPECT_THROW(parse_graph_document(gap), Error);
  const std::string bad_type = R"({
    "node_types": [{"name": "P", "kind": "plain"}], "edge_types": [],
    "nodes": [{"id": 0, "type": "Q"}], "edges": []
  })";
  EXPECT_THROW(parse_graph_document(bad_type), Error);
}

TEST(Interchange, FileRoundTrip) {
  const auto dir = std::filesystem::temp_directory_path() / "teag_graph_test";
  std::filesystem::remove_all(dir);
  const TypedMultigraph g = separation::running_example();
  write_graph_file(dir / "nested" / "g.json", g);
  const GraphDocument doc = read_graph_file(dir / "nested" / "g.json");
  EXPECT_EQ(doc.graph.edge_count(), 4u);
  EXPECT_THROW(read_graph_file(dir / "missing.json"), Error);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace teag
