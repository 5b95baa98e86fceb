// Copyright 2026 The teag-lab Authors
// SPDX-License-Identifier: Apache-2.0

#include "teag/random_graphs.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "teag/error.hpp"

namespace teag::random {

namespace {

std::size_t uniform(Engine& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(Engine& rng, double p) { return std::bernoulli_distribution(p)(rng); }

std::vector<std::uint32_t> shuffled_ranks(std::size_t n, Engine& rng) {
  std::vector<std::uint32_t> ranks(n);
  std::iota(ranks.begin(), ranks.end(), 1u);
  std::shuffle(ranks.begin(), ranks.end(), rng);
  return ranks;
}

}  // namespace

Engine case_engine(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return Engine(seq);
}

TypedMultigraph random_teag(Engine& rng, const TeagBounds& bounds) {
  if (bounds.max_entities == 0 || bounds.max_attributes == 0 || bounds.max_entity_types == 0 ||
      bounds.max_attribute_types == 0 || bounds.max_edge_types == 0 || bounds.max_parallel == 0) {
    throw Error("random_teag bounds must be positive");
  }
  const std::size_t n_entities = uniform(rng, 1, bounds.max_entities);
  const std::size_t n_attributes = uniform(rng, 1, bounds.max_attributes);
  const std::size_t n_entity_types = uniform(rng, 1, bounds.max_entity_types);
  const std::size_t n_attribute_types = uniform(rng, 1, bounds.max_attribute_types);
  const std::size_t n_edge_types = uniform(rng, 1, bounds.max_edge_types);
  const double density = std::uniform_real_distribution<double>(0.05, 0.5)(rng);

  GraphBuilder b;
  std::vector<NodeTypeId> entity_types;
  std::vector<NodeTypeId> attribute_types;
  std::vector<EdgeTypeId> edge_types;
  for (std::size_t i = 0; i < n_entity_types; ++i) {
    entity_types.push_back(b.add_node_type("E" + std::to_string(i), NodeKind::entity));
  }
  for (std::size_t i = 0; i < n_attribute_types; ++i) {
    attribute_types.push_back(b.add_node_type("A" + std::to_string(i), NodeKind::attribute));
  }
  for (std::size_t i = 0; i < n_edge_types; ++i) {
    edge_types.push_back(b.add_edge_type("t" + std::to_string(i)));
  }

  std::vector<NodeId> entities;
  std::vector<NodeId> attributes;
  for (std::size_t i = 0; i < n_entities; ++i) {
    entities.push_back(
        b.add_node(entity_types[uniform(rng, 0, n_entity_types - 1)], "e" + std::to_string(i)));
  }
  for (std::size_t i = 0; i < n_attributes; ++i) {
    attributes.push_back(b.add_node(attribute_types[uniform(rng, 0, n_attribute_types - 1)],
                                    "a" + std::to_string(i)));
  }
  for (NodeId e : entities) {
    for (NodeId a : attributes) {
      for (EdgeTypeId t : edge_types) {
        if (!coin(rng, density)) continue;
        const std::size_t copies = uniform(rng, 1, bounds.max_parallel);
        for (std::size_t c = 0; c < copies; ++c) b.add_edge(e, a, t);
      }
    }
  }
  return std::move(b).build();
}

PortAssignment random_valid_ports(const TypedMultigraph& graph, Engine& rng) {
  const std::size_t n = graph.node_count();
  // rank_in[v][i]: port of the i-th distinct predecessor of v (ascending id).
  std::vector<std::vector<NodeId>> preds(n);
  std::vector<std::vector<NodeId>> succs(n);
  std::vector<std::vector<std::uint32_t>> rank_in(n);
  std::vector<std::vector<std::uint32_t>> rank_out(n);
  for (NodeId v = 0; v < n; ++v) {
    preds[v] = graph.predecessors(v);
    succs[v] = graph.successors(v);
    rank_in[v] = shuffled_ranks(preds[v].size(), rng);
    rank_out[v] = shuffled_ranks(succs[v].size(), rng);
  }
  PortAssignment ports(graph.edge_count());
  for (const Edge& e : graph.edges()) {
    const auto& p = preds[e.dst];
    const auto& s = succs[e.src];
    const auto i = std::lower_bound(p.begin(), p.end(), e.src) - p.begin();
    const auto o = std::lower_bound(s.begin(), s.end(), e.dst) - s.begin();
    ports.set(e.id, rank_in[e.dst][static_cast<std::size_t>(i)],
              rank_out[e.src][static_cast<std::size_t>(o)]);
  }
  return ports;
}

TypedMultigraph random_digraph(Engine& rng, std::size_t max_nodes) {
  if (max_nodes == 0) throw Error("random_digraph needs at least one node");
  const std::size_t n = uniform(rng, 1, max_nodes);
  const double density = std::uniform_real_distribution<double>(0.05, 0.45)(rng);
  GraphBuilder b;
  const auto sigma = b.add_node_type("sigma", NodeKind::plain);
  const EdgeTypeId types[] = {b.add_edge_type("tau_1"), b.add_edge_type("tau_2")};
  for (std::size_t i = 0; i < n; ++i) b.add_node(sigma, "n" + std::to_string(i));
  for (NodeId s = 0; s < n; ++s) {
    for (NodeId d = 0; d < n; ++d) {
      if (coin(rng, density)) b.add_edge(s, d, types[uniform(rng, 0, 1)]);
      if (coin(rng, density / 8)) b.add_edge(s, d, types[uniform(rng, 0, 1)]);
    }
  }
  return std::move(b).build();
}

TypedMultigraph random_functional_graph(Engine& rng, std::size_t max_nodes) {
  if (max_nodes == 0) throw Error("random_functional_graph needs at least one node");
  const std::size_t n = uniform(rng, 1, max_nodes);
  std::vector<NodeId> next(n);
  std::iota(next.begin(), next.end(), NodeId{0});
  std::shuffle(next.begin(), next.end(), rng);
  GraphBuilder b;
  const auto sigma = b.add_node_type("sigma", NodeKind::plain);
  const auto tau = b.add_edge_type("tau_1");
  for (std::size_t i = 0; i < n; ++i) b.add_node(sigma, "n" + std::to_string(i));
  for (NodeId v = 0; v < n; ++v) b.add_edge(v, next[v], tau);
  return std::move(b).build();
}

std::size_t cycle_length_through(const TypedMultigraph& functional, NodeId v) {
  if (!is_functional(functional)) throw Error("graph is not functional");
  functional.check_node(v);
  std::size_t length = 0;
  NodeId cur = v;
  do {
    cur = functional.edge(functional.out_edges(cur).front()).dst;
    ++length;
  } while (cur != v);
  return length;
}

}  // namespace teag::random
