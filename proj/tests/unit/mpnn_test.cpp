// Copyright 2026 The teag-lab Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "teag/error.hpp"
#include "teag/mpnn.hpp"
#include "teag/random_graphs.hpp"
#include "teag/separation.hpp"

namespace teag {
namespace {

EngineConfig config(std::size_t depth, AdaptationSet a, std::uint64_t seed, std::size_t dim = 16) {
  EngineConfig c;
  c.hidden_dim = dim;
  c.depth = depth;
  c.adaptations = a;
  c.seed = seed;
  return c;
}

std::vector<double> flatten(const ModelWeights& w) {
  std::vector<double> out(w.encoder.data(), w.encoder.data() + w.encoder.size());
  out.insert(out.end(), w.encoder_bias.data(), w.encoder_bias.data() + w.encoder_bias.size());
  for (const LayerWeights& l : w.layers) {
    out.insert(out.end(), l.update.data(), l.update.data() + l.update.size());
    out.insert(out.end(), l.bias.data(), l.bias.data() + l.bias.size());
  }
  return out;
}

double pair_distance(const separation::SeparationPair& pair, const EngineConfig& c, bool ego) {
  const FeatureSpace space = FeatureSpace::covering({&pair.g1, &pair.g2});
  const ModelWeights w = init_weights(c, space);
  const PortAssignment* p1 = pair.ports1 ? &*pair.ports1 : nullptr;
  const PortAssignment* p2 = pair.ports2 ? &*pair.ports2 : nullptr;
  const auto e1 = ego ? std::optional<NodeId>{pair.target1} : std::nullopt;
  const auto e2 = ego ? std::optional<NodeId>{pair.target2} : std::nullopt;
  const ForwardResult a = forward(pair.g1, p1, c, w, e1);
  const ForwardResult b = forward(pair.g2, p2, c, w, e2);
  return embedding_distance(a.final_embedding(pair.target1), b.final_embedding(pair.target2));
}

TEST(InitWeights, SameSeedIsBitwiseIdentical) {
  const auto pair = separation::gen_k22_example();
  const FeatureSpace space = FeatureSpace::covering({&pair.g1, &pair.g2});
  const EngineConfig c = config(3, {true, true, true, true}, 77);
  EXPECT_EQ(flatten(init_weights(c, space)), flatten(init_weights(c, space)));
}

TEST(InitWeights, HundredSeedsGiveDistinctWeights) {
  const auto pair = separation::gen_k21_pair();
  const FeatureSpace space = FeatureSpace::covering({&pair.g1, &pair.g2});
  std::set<std::vector<double>> seen;
  for (std::uint64_t s = 0; s < 100; ++s) seen.insert(flatten(init_weights(config(2, {}, s), space)));
  EXPECT_EQ(seen.size(), 100u);
}

TEST(InitWeights, EntriesRespectFanInBound) {
  GraphBuilder b;
  b.add_node(b.node_type("T", NodeKind::plain));
  const TypedMultigraph g = std::move(b).build();
  FeatureSpace space = FeatureSpace::covering({&g});
  // input width 2: one type slot plus the ego bit
  const ModelWeights w = init_weights(config(2, {}, 5, 1), space);
  const double enc_bound = 1.0 / std::sqrt(2.0);
  EXPECT_LE(w.encoder.cwiseAbs().maxCoeff(), enc_bound);
  for (const LayerWeights& l : w.layers) {
    const double bound = 1.0 / std::sqrt(static_cast<double>(l.update.cols()));
    EXPECT_LE(l.update.cwiseAbs().maxCoeff(), bound);
    EXPECT_LE(l.bias.cwiseAbs().maxCoeff(), bound);
    EXPECT_LE(l.update.cwiseAbs().maxCoeff(), 1.0);
  }
}

TEST(InitWeights, RejectsDegenerateConfig) {
  const TypedMultigraph g = separation::running_example();
  const FeatureSpace space = FeatureSpace::covering({&g});
  EXPECT_THROW(init_weights(config(2, {}, 0, 0), space), Error);
  EXPECT_THROW(init_weights(config(0, {}, 0), space), Error);
}

TEST(EmbeddingDistance, Euclidean) {
  Embedding a(2);
  a << 0.0, 0.0;
  Embedding b(2);
  b << 3.0, 4.0;
  EXPECT_DOUBLE_EQ(embedding_distance(a, b), 5.0);
  EXPECT_DOUBLE_EQ(embedding_distance(b, b), 0.0);
  EXPECT_THROW(embedding_distance(a, Embedding(3)), Error);
}

TEST(Forward, ProducesAllLayersWithHiddenWidth) {
  const TypedMultigraph g = separation::running_example();
  const EngineConfig c = config(3, {}, 1);
  const ModelWeights w = init_weights(c, FeatureSpace::covering({&g}));
  const ForwardResult r = forward(g, nullptr, c, w);
  ASSERT_EQ(r.layers.size(), 4u);
  for (const auto& layer : r.layers) {
    ASSERT_EQ(layer.size(), g.node_count());
    for (const Embedding& h : layer) {
      EXPECT_EQ(h.size(), 16);
      EXPECT_TRUE(h.allFinite());
    }
  }
}

TEST(Forward, TargetEmbeddingsAgreeOnHardPairs) {
  const AdaptationSet rev{true, false, false, false};
  const AdaptationSet all_ports{true, true, true, false};
  for (std::uint64_t s = 0; s < 5; ++s) {
    EXPECT_EQ(pair_distance(separation::gen_k21_pair(), config(4, {}, s), false), 0.0);
    EXPECT_EQ(pair_distance(separation::gen_parallel_pair(), config(4, rev, s), false), 0.0);
    EXPECT_EQ(pair_distance(separation::gen_k2r_pair(3), config(6, all_ports, s), false), 0.0);
    EXPECT_EQ(pair_distance(separation::gen_cycle_pair(5), config(6, all_ports, s), false), 0.0);
  }
}

TEST(Forward, EgoBreaksTheIdentity) {
  const AdaptationSet rev_ego{true, false, false, true};
  const AdaptationSet ego{false, false, false, true};
  bool k2r_split = false;
  bool cycle_split = false;
  for (std::uint64_t s = 0; s < 10; ++s) {
    k2r_split |= pair_distance(separation::gen_k2r_pair(2), config(4, rev_ego, s), true) > 0.0;
    cycle_split |= pair_distance(separation::gen_cycle_pair(3), config(3, ego, s), true) > 0.0;
  }
  EXPECT_TRUE(k2r_split);
  EXPECT_TRUE(cycle_split);
}

TEST(Forward, IsolatedNodeSeesOnlyItsOwnType) {
  GraphBuilder b1;
  const auto t = b1.node_type("T", NodeKind::plain);
  const auto e = b1.edge_type("e");
  const NodeId lone1 = b1.add_node(t);
  const NodeId x = b1.add_node(t);
  const NodeId y = b1.add_node(t);
  b1.add_edge(x, y, e);
  b1.add_edge(y, x, e);
  const TypedMultigraph g1 = std::move(b1).build();

  GraphBuilder b2;
  b2.node_type("T", NodeKind::plain);
  b2.edge_type("e");
  const NodeId lone2 = b2.add_node(NodeTypeId{0});
  const TypedMultigraph g2 = std::move(b2).build();

  const EngineConfig c = config(3, {true, true, true, false}, 9);
  const ModelWeights w = init_weights(c, FeatureSpace::covering({&g1, &g2}));
  const PortAssignment p1 = assign_canonical_ports(g1);
  const PortAssignment p2 = assign_canonical_ports(g2);
  const ForwardResult r1 = forward(g1, &p1, c, w);
  const ForwardResult r2 = forward(g2, &p2, c, w);
  for (std::size_t k = 0; k <= 3; ++k) EXPECT_EQ(r1.at(k, lone1), r2.at(k, lone2));
}

TypedMultigraph permuted(const TypedMultigraph& g, const std::vector<NodeId>& perm,
                         std::vector<EdgeId>& edge_map) {
  GraphBuilder b;
  for (const NodeType& t : g.node_type_catalog()) b.add_node_type(t.name, t.kind);
  for (const std::string& e : g.edge_type_catalog()) b.add_edge_type(e);
  std::vector<NodeId> inverse(perm.size());
  for (NodeId v = 0; v < perm.size(); ++v) inverse[perm[v]] = v;
  for (NodeId w = 0; w < perm.size(); ++w) b.add_node(g.node_type(inverse[w]));
  // Reverse edge order as well.
  edge_map.assign(g.edge_count(), 0);
  for (EdgeId e = g.edge_count(); e-- > 0;) {
    const Edge& edge = g.edge(e);
    edge_map[e] = b.add_edge(perm[edge.src], perm[edge.dst], edge.type);
  }
  return std::move(b).build();
}

TEST(Forward, EquivariantUnderRelabeling) {
  const AdaptationSet all{true, true, true, true};
  for (std::uint64_t i = 0; i < 20; ++i) {
    random::Engine rng = random::case_engine(31, i);
    random::TeagBounds bounds;
    bounds.max_parallel = 2;
    const TypedMultigraph g = random::random_teag(rng, bounds);
    const PortAssignment ports = random::random_valid_ports(g, rng);
    std::vector<NodeId> perm(g.node_count());
    std::iota(perm.begin(), perm.end(), NodeId{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<EdgeId> edge_map;
    const TypedMultigraph h = permuted(g, perm, edge_map);
    PortAssignment moved(h.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      moved.set(edge_map[e], ports.at(e).p_in, ports.at(e).p_out);
    }
    ASSERT_TRUE(validate_ports(h, moved).valid());

    const EngineConfig c = config(3, all, i);
    const ModelWeights w = init_weights(c, FeatureSpace::covering({&g, &h}));
    const NodeId ego = 0;
    const ForwardResult a = forward(g, &ports, c, w, ego);
    const ForwardResult b = forward(h, &moved, c, w, perm[ego]);
    for (NodeId v = 0; v < g.node_count(); ++v) {
      ASSERT_EQ(a.final_embedding(v), b.final_embedding(perm[v])) << i << " " << v;
    }
  }
}

TEST(Forward, RejectsMismatchedInputs) {
  const auto pair = separation::gen_k22_example();
  const EngineConfig ported = config(2, {false, true, false, false}, 0);
  const ModelWeights w = init_weights(ported, FeatureSpace::covering({&pair.g1}));
  EXPECT_THROW(forward(pair.g1, nullptr, ported, w), Error);

  const EngineConfig ego = config(2, {false, false, false, true}, 0);
  const ModelWeights we = init_weights(ego, FeatureSpace::covering({&pair.g1}));
  EXPECT_THROW(forward(pair.g1, nullptr, ego, we), Error);
  EXPECT_THROW(forward(pair.g1, nullptr, config(2, {}, 0), we, NodeId{0}), Error);

  EXPECT_THROW(forward(pair.g1, &*pair.ports1, config(3, {false, true, false, false}, 0), w), Error);

  const TypedMultigraph other = separation::directed_cycle(3);
  EXPECT_THROW(forward(other, &*pair.ports1, ported, w), Error);
}

}  // namespace
}  // namespace teag
