// Copyright 2026 The teag-lab Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numeric>

#include "json.hpp"
#include "reference.hpp"
#include "teag/error.hpp"
#include "teag/interchange.hpp"
#include "teag/separation.hpp"

namespace teag {
namespace {

using nlohmann::json;

// Edge multiset under a node mapping: (src, dst, type name, p_in, p_out).
using EdgeKey = std::tuple<NodeId, NodeId, std::string, std::uint32_t, std::uint32_t>;

std::vector<EdgeKey> edge_keys(const TypedMultigraph& g, const PortAssignment& ports,
                               const std::vector<NodeId>& map) {
  std::vector<EdgeKey> keys;
  for (const Edge& e : g.edges()) {
    keys.emplace_back(map[e.src], map[e.dst], g.edge_type_name(e.type), ports.at(e.id).p_in,
                      ports.at(e.id).p_out);
  }
  std::sort(keys.begin(), keys.end());
  return keys;
}

// Brute force over all node bijections.
bool isomorphic_with_ports(const TypedMultigraph& a, const PortAssignment& pa,
                           const TypedMultigraph& b, const PortAssignment& pb) {
  if (a.node_count() != b.node_count() || a.edge_count() != b.edge_count()) return false;
  std::vector<NodeId> identity(b.node_count());
  std::iota(identity.begin(), identity.end(), NodeId{0});
  const std::vector<EdgeKey> target = edge_keys(b, pb, identity);
  std::vector<NodeId> map(a.node_count());
  std::iota(map.begin(), map.end(), NodeId{0});
  do {
    bool types = true;
    for (NodeId v = 0; v < a.node_count() && types; ++v) {
      types = a.node_type_info(v).name == b.node_type_info(map[v]).name;
    }
    if (types && edge_keys(a, pa, map) == target) return true;
  } while (std::next_permutation(map.begin(), map.end()));
  return false;
}

bool oracle_label(const TypedMultigraph& g, NodeId v, const separation::Predicate& p) {
  if (p.kind == separation::PredicateKind::dup) return reference::dup(g, v, p.parameter);
  return reference::simple_cycle(g, v, p.parameter);
}

TEST(SeparationPairs, LabelsMatchReferenceOracles) {
  for (const auto& pair : separation::acceptance_grid()) {
    EXPECT_EQ(oracle_label(pair.g1, pair.target1, pair.predicate), pair.label1 == 1) << pair.id;
    EXPECT_EQ(oracle_label(pair.g2, pair.target2, pair.predicate), pair.label2 == 1) << pair.id;
  }
}

TEST(SeparationPairs, AttachedPortTablesAreValid) {
  for (const auto& pair : separation::acceptance_grid()) {
    ASSERT_TRUE(pair.ports1 && pair.ports2) << pair.id;
    EXPECT_TRUE(validate_ports(pair.g1, *pair.ports1).valid()) << pair.id;
    EXPECT_TRUE(validate_ports(pair.g2, *pair.ports2).valid()) << pair.id;
  }
}

TEST(SeparationPairs, HardPairsShareDegreeProfiles) {
  for (const auto& pair : separation::acceptance_grid()) {
    if (pair.id == "k21") {
      EXPECT_NE(reference::degree_types(pair.g1), reference::degree_types(pair.g2));
      continue;
    }
    EXPECT_EQ(reference::degree_types(pair.g1), reference::degree_types(pair.g2)) << pair.id;
  }
}

TEST(K21Pair, Shape) {
  const auto pair = separation::gen_k21_pair();
  EXPECT_EQ(pair.g1.edge_count(), 2u);
  EXPECT_EQ(pair.g2.edge_count(), 1u);
  EXPECT_TRUE(validate_entity_attribute(pair.view1()).valid());
  EXPECT_TRUE(validate_entity_attribute(pair.view2()).valid());
  EXPECT_TRUE(is_simple(pair.g1));
  EXPECT_TRUE(is_simple(pair.g2));
}

TEST(ParallelPair, Shape) {
  const auto pair = separation::gen_parallel_pair();
  for (const TypedMultigraph* g : {&pair.g1, &pair.g2}) {
    EXPECT_EQ(reference::count_kind(*g, NodeKind::entity), 2u);
    EXPECT_EQ(reference::count_kind(*g, NodeKind::attribute), 2u);
    EXPECT_EQ(g->edge_count(), 4u);
  }
  EXPECT_TRUE(is_simple(pair.g1));
  EXPECT_FALSE(is_simple(pair.g2));
}

TEST(K22Example, OverlapsAndTypedNeighborhoods) {
  const auto pair = separation::gen_k22_example();
  const TypedMultigraph& g = pair.g2;
  const NodeId u = *g.find_node("u");
  EXPECT_EQ(reference::overlap(g, u, *g.find_node("v_1")), 1u);
  EXPECT_EQ(reference::overlap(g, u, *g.find_node("v_2")), 1u);
  EXPECT_EQ(reference::overlap(g, u, *g.find_node("v_3")), 0u);

  const auto tau1 = *g.find_edge_type("tau_1");
  const auto tau2 = *g.find_edge_type("tau_2");
  const TypedNeighborhood nu = typed_neighborhood(pair.view2(), u);
  const TypedNeighborhood expected_u{{*g.find_node("a_1"), tau1}, {*g.find_node("a_2"), tau2}};
  EXPECT_EQ(nu, expected_u);
  const TypedNeighborhood nv3 = typed_neighborhood(pair.view2(), *g.find_node("v_3"));
  const TypedNeighborhood expected_v3{{*g.find_node("a_3"), tau1}, {*g.find_node("a_4"), tau2}};
  EXPECT_EQ(nv3, expected_v3);

  EXPECT_EQ(reference::overlap(pair.g1, *pair.g1.find_node("u"), *pair.g1.find_node("v")), 2u);
}

TEST(K22Example, PortTablesFollowEntityClasses) {
  const auto pair = separation::gen_k22_example();
  for (const Edge& e : pair.g1.edges()) {
    const std::string type = pair.g1.edge_type_name(e.type);
    EXPECT_EQ(pair.ports1->at(e.id).p_out, type == "tau_1" ? 1u : 2u);
  }
  for (const Edge& e : pair.g2.edges()) {
    const std::string type = pair.g2.edge_type_name(e.type);
    EXPECT_EQ(pair.ports2->at(e.id).p_out, type == "tau_1" ? 1u : 2u);
  }
}

TEST(K2rPair, DefaultRTwoMatchesK22UpToNaming) {
  const auto k22 = separation::gen_k22_example();
  const auto k2r = separation::gen_k2r_pair(2);
  EXPECT_TRUE(isomorphic_with_ports(k2r.g1, *k2r.ports1, k22.g1, *k22.ports1));
  EXPECT_TRUE(isomorphic_with_ports(k2r.g2, *k2r.ports2, k22.g2, *k22.ports2));
}

TEST(K2rPair, SizesAndMaxOverlap) {
  for (std::size_t r = 2; r <= 5; ++r) {
    const auto pair = separation::gen_k2r_pair(r);
    for (const TypedMultigraph* g : {&pair.g1, &pair.g2}) {
      EXPECT_EQ(reference::count_kind(*g, NodeKind::entity), 4u);
      EXPECT_EQ(reference::count_kind(*g, NodeKind::attribute), 2 * r);
      EXPECT_EQ(g->edge_count(), 4 * r);
    }
  }
  EXPECT_EQ(separation::gen_k2r_pair(4).g1.edge_count(), 16u);

  const separation::IndexPartition split{{1, 3}, {2, 4, 5}};
  const auto pair = separation::gen_k2r_pair(5, split);
  std::size_t best = 0;
  for (NodeId v = 1; v < 4; ++v) best = std::max(best, reference::overlap(pair.g2, pair.target2, v));
  EXPECT_EQ(best, 3u);
  EXPECT_TRUE(validate_ports(pair.g2, *pair.ports2).valid());
  EXPECT_FALSE(reference::dup(pair.g2, pair.target2, 5));
}

TEST(K2rPair, RejectsInvalidPartitions) {
  EXPECT_THROW(separation::gen_k2r_pair(1), Error);
  EXPECT_THROW(separation::gen_k2r_pair(3, separation::IndexPartition{{}, {1, 2, 3}}), Error);
  EXPECT_THROW(separation::gen_k2r_pair(3, separation::IndexPartition{{1, 2}, {2, 3}}), Error);
  EXPECT_THROW(separation::gen_k2r_pair(3, separation::IndexPartition{{1}, {2}}), Error);
  EXPECT_THROW(separation::gen_k2r_pair(3, separation::IndexPartition{{1}, {2, 4}}), Error);
}

TEST(CyclePair, ShapeAndTrivialPorts) {
  for (std::size_t l : {3, 4, 7}) {
    const auto pair = separation::gen_cycle_pair(l);
    EXPECT_EQ(pair.g1.node_count(), 2 * l);
    EXPECT_EQ(pair.g2.edge_count(), 2 * l);
    EXPECT_TRUE(is_functional(pair.g1));
    EXPECT_TRUE(is_functional(pair.g2));
    for (EdgeId e = 0; e < pair.g1.edge_count(); ++e) {
      EXPECT_EQ(pair.ports1->at(e), (EdgePorts{1, 1}));
      EXPECT_EQ(pair.ports2->at(e), (EdgePorts{1, 1}));
    }
  }
  EXPECT_THROW(separation::gen_cycle_pair(2), Error);
  EXPECT_THROW(separation::gen_cycle_pair(3).view1(), Error);
}

TEST(Emit, WritesGraphsAndManifest) {
  const auto dir = std::filesystem::temp_directory_path() / "teag_separation_test";
  std::filesystem::remove_all(dir);
  const auto pair = separation::gen_k2r_pair(3);
  separation::emit_pair(pair, dir);
  std::ifstream in(dir / "manifest.json");
  const json manifest = json::parse(in);
  EXPECT_EQ(manifest["pair"], "k2r_3");
  EXPECT_EQ(manifest["r"], 3);
  const GraphDocument g1 = read_graph_file(dir / "g1.json");
  EXPECT_EQ(g1.graph.edge_count(), 12u);
  EXPECT_TRUE(g1.ports.has_value());
  EXPECT_EQ(separation::manifest_json(pair), separation::manifest_json(separation::gen_k2r_pair(3)));
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace teag
