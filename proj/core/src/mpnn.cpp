// Copyright 2026 The teag-lab Authors
// SPDX-License-Identifier: Apache-2.0

#include "teag/mpnn.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "teag/error.hpp"

namespace teag {

FeatureSpace FeatureSpace::covering(std::initializer_list<const TypedMultigraph*> graphs) {
  std::set<std::string> node_types;
  std::set<std::string> edge_types;
  FeatureSpace space;
  for (const TypedMultigraph* g : graphs) {
    for (const NodeType& t : g->node_type_catalog()) node_types.insert(t.name);
    for (const std::string& t : g->edge_type_catalog()) edge_types.insert(t);
    for (NodeId v = 0; v < g->node_count(); ++v) {
      space.in_port_width = std::max(space.in_port_width, g->in_degree(v));
      space.out_port_width = std::max(space.out_port_width, g->out_degree(v));
    }
  }
  space.node_types.assign(node_types.begin(), node_types.end());
  space.edge_types.assign(edge_types.begin(), edge_types.end());
  return space;
}

namespace {

class UniformSource {
 public:
  explicit UniformSource(std::uint64_t seed) : engine_(seed) {}

  // 53 random mantissa bits mapped onto [-bound, bound).
  double next(double bound) {
    const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return (2.0 * unit - 1.0) * bound;
  }

  void fill(Eigen::MatrixXd& m, double bound) {
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      for (Eigen::Index c = 0; c < m.cols(); ++c) m(r, c) = next(bound);
    }
  }

  void fill(Eigen::VectorXd& v, double bound) {
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = next(bound);
  }

 private:
  std::mt19937_64 engine_;
};

std::size_t index_of(const std::vector<std::string>& names, const std::string& name) {
  const auto it = std::lower_bound(names.begin(), names.end(), name);
  if (it == names.end() || *it != name) {
    throw Error("type '" + name + "' is not part of the feature space");
  }
  return static_cast<std::size_t>(it - names.begin());
}

bool lexicographic_less(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(),
                                      b.data() + b.size());
}

// Order-canonical sum: equal multisets give bitwise-equal results.
Eigen::VectorXd canonical_sum(std::vector<Eigen::VectorXd>& messages, Eigen::Index width) {
  std::sort(messages.begin(), messages.end(), lexicographic_less);
  Eigen::VectorXd total = Eigen::VectorXd::Zero(width);
  for (const Eigen::VectorXd& m : messages) total += m;
  return total;
}

}  // namespace

ModelWeights init_weights(const EngineConfig& config, const FeatureSpace& space) {
  if (config.hidden_dim == 0) throw Error("hidden_dim must be at least 1");
  if (config.depth == 0) throw Error("depth must be at least 1");

  const auto d = static_cast<Eigen::Index>(config.hidden_dim);
  const auto in_width = static_cast<Eigen::Index>(space.input_width());
  const auto msg_width = static_cast<Eigen::Index>(space.message_width(config.hidden_dim));
  const Eigen::Index update_width = d + msg_width * (config.adaptations.reverse_mp ? 2 : 1);

  ModelWeights w;
  w.space = space;
  w.hidden_dim = config.hidden_dim;
  w.reverse_mp = config.adaptations.reverse_mp;

  UniformSource rng(config.seed);
  const double enc_bound = 1.0 / std::sqrt(static_cast<double>(in_width));
  w.encoder.resize(d, in_width);
  w.encoder_bias.resize(d);
  rng.fill(w.encoder, enc_bound);
  rng.fill(w.encoder_bias, enc_bound);

  const double bound = 1.0 / std::sqrt(static_cast<double>(update_width));
  for (std::size_t k = 0; k < config.depth; ++k) {
    LayerWeights layer;
    layer.update.resize(d, update_width);
    layer.bias.resize(d);
    rng.fill(layer.update, bound);
    rng.fill(layer.bias, bound);
    w.layers.push_back(std::move(layer));
  }
  return w;
}

ForwardResult forward(const TypedMultigraph& graph, const PortAssignment* ports,
                      const EngineConfig& config, const ModelWeights& weights,
                      std::optional<NodeId> ego) {
  const AdaptationSet& adapt = config.adaptations;
  if (adapt.uses_ports() && ports == nullptr) {
    throw Error("port flags are set but no port assignment was given");
  }
  if (ports != nullptr && ports->size() != graph.edge_count()) {
    throw Error("port assignment does not match the graph's edge count");
  }
  if (adapt.ego_ids != ego.has_value()) {
    throw Error(adapt.ego_ids ? "ego IDs are enabled but no ego node was given"
                              : "an ego node was given but ego IDs are disabled");
  }
  if (ego) graph.check_node(*ego);
  if (weights.layers.size() < config.depth || weights.hidden_dim != config.hidden_dim ||
      weights.reverse_mp != adapt.reverse_mp) {
    throw Error("weights do not match the engine configuration");
  }

  const FeatureSpace& space = weights.space;
  const auto d = static_cast<Eigen::Index>(config.hidden_dim);
  const auto msg_width = static_cast<Eigen::Index>(space.message_width(config.hidden_dim));
  const auto edge_offset = d;
  const auto in_port_offset = edge_offset + static_cast<Eigen::Index>(space.edge_types.size());
  const auto out_port_offset = in_port_offset + static_cast<Eigen::Index>(space.in_port_width);

  std::vector<std::size_t> edge_slot;
  for (const std::string& name : graph.edge_type_catalog()) {
    edge_slot.push_back(index_of(space.edge_types, name));
  }

  // Everything in a message except the sender embedding.
  std::vector<Eigen::VectorXd> edge_features(graph.edge_count(), Eigen::VectorXd::Zero(msg_width));
  for (const Edge& e : graph.edges()) {
    Eigen::VectorXd& f = edge_features[e.id];
    f(edge_offset + static_cast<Eigen::Index>(edge_slot[e.type.value])) = 1.0;
    if (adapt.in_ports && space.in_port_width > 0) {
      const std::size_t p = std::min<std::size_t>(ports->at(e.id).p_in, space.in_port_width);
      f(in_port_offset + static_cast<Eigen::Index>(p) - 1) = 1.0;
    }
    if (adapt.out_ports && space.out_port_width > 0) {
      const std::size_t p = std::min<std::size_t>(ports->at(e.id).p_out, space.out_port_width);
      f(out_port_offset + static_cast<Eigen::Index>(p) - 1) = 1.0;
    }
  }

  ForwardResult result;
  std::vector<Embedding> h(graph.node_count());
  for (NodeId v = 0; v < graph.node_count(); ++v) {
    Eigen::VectorXd x = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(space.input_width()));
    x(static_cast<Eigen::Index>(index_of(space.node_types, graph.node_type_info(v).name))) = 1.0;
    if (ego && *ego == v) x(x.size() - 1) = 1.0;
    h[v] = weights.encoder * x + weights.encoder_bias;
  }
  result.layers.push_back(h);

  for (std::size_t k = 0; k < config.depth; ++k) {
    const LayerWeights& layer = weights.layers[k];
    std::vector<Embedding> next(graph.node_count());
    for (NodeId v = 0; v < graph.node_count(); ++v) {
      auto gather = [&](std::span<const EdgeId> edge_ids, bool from_src) {
        std::vector<Eigen::VectorXd> messages;
        messages.reserve(edge_ids.size());
        for (EdgeId e : edge_ids) {
          const Edge& edge = graph.edge(e);
          Eigen::VectorXd m = edge_features[e];
          m.head(d) = h[from_src ? edge.src : edge.dst];
          messages.push_back(std::move(m));
        }
        return canonical_sum(messages, msg_width);
      };

      Eigen::VectorXd input(layer.update.cols());
      input.head(d) = h[v];
      input.segment(d, msg_width) = gather(graph.in_edges(v), true);
      if (adapt.reverse_mp) input.tail(msg_width) = gather(graph.out_edges(v), false);
      next[v] = (layer.update * input + layer.bias).cwiseMax(0.0);
      if (!next[v].allFinite()) {
        throw Error("non-finite embedding at layer " + std::to_string(k + 1));
      }
    }
    h = std::move(next);
    result.layers.push_back(h);
  }
  return result;
}

double embedding_distance(const Embedding& a, const Embedding& b) {
  if (a.size() != b.size()) throw Error("embedding dimensions differ");
  return (a - b).norm();
}

}  // namespace teag
