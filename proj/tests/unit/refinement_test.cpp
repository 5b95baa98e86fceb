// Copyright 2026 The teag-lab Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "teag/error.hpp"
#include "teag/random_graphs.hpp"
#include "teag/refinement.hpp"
#include "teag/separation.hpp"

namespace teag {
namespace {

AdaptationSet make(bool reverse, bool in, bool out, bool ego) { return {reverse, in, out, ego}; }

std::vector<AdaptationSet> all_adaptations() {
  std::vector<AdaptationSet> out;
  for (int mask = 0; mask < 16; ++mask) {
    out.push_back(make(mask & 1, mask & 2, mask & 4, mask & 8));
  }
  return out;
}

TEST(Refinement, ForwardOnlyCannotSeparateK21PairAtAnyDepth) {
  const auto pair = separation::gen_k21_pair();
  for (std::size_t k = 1; k <= 8; ++k) {
    EXPECT_TRUE(indistinguishable(pair.g1, pair.target1, pair.g2, pair.target2, nullptr, nullptr,
                                  AdaptationSet{}, k));
  }
}

TEST(Refinement, ReverseSeparatesK21PairAtDepthTwoButNotOne) {
  const auto pair = separation::gen_k21_pair();
  const AdaptationSet rev = make(true, false, false, false);
  EXPECT_TRUE(indistinguishable(pair.g1, pair.target1, pair.g2, pair.target2, nullptr, nullptr, rev, 1));
  EXPECT_FALSE(indistinguishable(pair.g1, pair.target1, pair.g2, pair.target2, nullptr, nullptr, rev, 2));
}

TEST(Refinement, K2rPairNeedsEgoUnderReverseAndPorts) {
  for (std::size_t r = 2; r <= 4; ++r) {
    const auto pair = separation::gen_k2r_pair(r);
    const AdaptationSet ports = make(true, true, true, false);
    for (std::size_t k = 1; k <= 8; ++k) {
      EXPECT_TRUE(indistinguishable(pair.g1, pair.target1, pair.g2, pair.target2, &*pair.ports1,
                                    &*pair.ports2, ports, k))
          << r << " " << k;
    }
    const AdaptationSet ego = make(true, false, false, true);
    EXPECT_TRUE(indistinguishable(pair.g1, pair.target1, pair.g2, pair.target2, &*pair.ports1,
                                  &*pair.ports2, ego, 3));
    EXPECT_FALSE(indistinguishable(pair.g1, pair.target1, pair.g2, pair.target2, &*pair.ports1,
                                   &*pair.ports2, ego, 4));
  }
}

TEST(Refinement, CyclePairNeedsEgo) {
  for (std::size_t l : {3, 5, 7}) {
    const auto pair = separation::gen_cycle_pair(l);
    const AdaptationSet ports = make(true, true, true, false);
    for (std::size_t k = 1; k <= 2 * l + 2; ++k) {
      EXPECT_TRUE(indistinguishable(pair.g1, pair.target1, pair.g2, pair.target2, &*pair.ports1,
                                    &*pair.ports2, ports, k));
    }
    const AdaptationSet ego = make(false, false, false, true);
    EXPECT_TRUE(indistinguishable(pair.g1, pair.target1, pair.g2, pair.target2, nullptr, nullptr,
                                  ego, l - 1));
    EXPECT_FALSE(indistinguishable(pair.g1, pair.target1, pair.g2, pair.target2, nullptr, nullptr,
                                   ego, l));
  }
}

TEST(Refinement, NodeIsIndistinguishableFromItself) {
  const TypedMultigraph g = separation::running_example();
  for (const AdaptationSet& c : all_adaptations()) {
    const PortAssignment ports = assign_canonical_ports(g);
    EXPECT_TRUE(indistinguishable(g, 0, g, 0, &ports, &ports, c, 4)) << to_string(c);
  }
}

TEST(Refinement, ByLayerMatchesSingleDepthQueries) {
  const auto pair = separation::gen_k21_pair();
  const AdaptationSet rev = make(true, false, false, false);
  const std::vector<bool> layers = indistinguishable_by_layer(
      pair.g1, pair.target1, pair.g2, pair.target2, nullptr, nullptr, rev, 3);
  ASSERT_EQ(layers.size(), 4u);
  for (std::size_t k = 1; k <= 3; ++k) {
    EXPECT_EQ(layers[k], indistinguishable(pair.g1, pair.target1, pair.g2, pair.target2, nullptr,
                                           nullptr, rev, k));
  }
}

TEST(Refinement, MissingPortsOrEgoAreErrors) {
  const TypedMultigraph g = separation::running_example();
  EXPECT_THROW(refine(g, nullptr, make(false, true, false, false), 2), Error);
  EXPECT_THROW(refine(g, nullptr, make(false, false, false, true), 2), Error);
  EXPECT_THROW(refine(g, nullptr, AdaptationSet{}, 2, NodeId{0}), Error);
  EXPECT_THROW(refine(g, nullptr, make(false, false, false, true), 2, NodeId{42}), Error);
}

TEST(Refinement, PartitionsOnlyGetFinerWithDepth) {
  for (std::uint64_t i = 0; i < 100; ++i) {
    random::Engine rng = random::case_engine(21, i);
    random::TeagBounds bounds;
    bounds.max_parallel = 2;
    const TypedMultigraph g = random::random_teag(rng, bounds);
    const PortAssignment ports = random::random_valid_ports(g, rng);
    for (const AdaptationSet& c : all_adaptations()) {
      const std::optional<NodeId> ego = c.ego_ids ? std::optional<NodeId>{0} : std::nullopt;
      const ColorAssignment colors = refine(g, &ports, c, 5, ego);
      for (std::size_t k = 0; k < 5; ++k) {
        for (NodeId u = 0; u < g.node_count(); ++u) {
          for (NodeId v = u + 1; v < g.node_count(); ++v) {
            if (colors.at(k + 1, u) == colors.at(k + 1, v)) {
              ASSERT_EQ(colors.at(k, u), colors.at(k, v));
            }
          }
        }
        ASSERT_LE(colors.partition_size(k), colors.partition_size(k + 1));
      }
    }
  }
}

TEST(Refinement, MoreAdaptationsNeverMergeSeparatedNodes) {
  const auto configs = all_adaptations();
  for (std::uint64_t i = 0; i < 40; ++i) {
    random::Engine rng = random::case_engine(22, i);
    random::TeagBounds bounds;
    bounds.max_parallel = 2;
    const TypedMultigraph g1 = random::random_teag(rng, bounds);
    const TypedMultigraph g2 = random::random_teag(rng, bounds);
    const PortAssignment p1 = random::random_valid_ports(g1, rng);
    const PortAssignment p2 = random::random_valid_ports(g2, rng);
    const NodeId u1 = 0;
    const NodeId u2 = 0;
    for (std::size_t depth : {1, 2, 3}) {
      for (const AdaptationSet& small : configs) {
        if (indistinguishable(g1, u1, g2, u2, &p1, &p2, small, depth)) continue;
        for (const AdaptationSet& big : configs) {
          if (!small.subset_of(big)) continue;
          ASSERT_FALSE(indistinguishable(g1, u1, g2, u2, &p1, &p2, big, depth))
              << to_string(small) << " vs " << to_string(big) << " case " << i;
        }
      }
    }
  }
}

TEST(Refinement, SharedDictionaryMakesColorsComparable) {
  ColorRefiner refiner(AdaptationSet{});
  const auto pair = separation::gen_k21_pair();
  const ColorAssignment a = refiner.refine(pair.g1, nullptr, 2);
  const ColorAssignment b = refiner.refine(pair.g2, nullptr, 2);
  EXPECT_EQ(a.at(2, pair.target1), b.at(2, pair.target2));
  EXPECT_GT(refiner.dictionary_size(), 0u);
}

}  // namespace
}  // namespace teag
