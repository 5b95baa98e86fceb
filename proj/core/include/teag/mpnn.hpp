// Copyright 2026 The teag-lab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "teag/graph.hpp"

namespace teag {

struct EngineConfig {
  std::size_t hidden_dim = 32;
  std::size_t depth = 2;
  AdaptationSet adaptations;
  std::uint64_t seed = 0;
};

/// Shared feature layout for every graph evaluated with one set of weights.
/// Types are matched by name so that two graphs built independently line up.
struct FeatureSpace {
  std::vector<std::string> node_types;
  std::vector<std::string> edge_types;
  std::size_t in_port_width = 0;   // max in-degree over the covered graphs
  std::size_t out_port_width = 0;  // max out-degree over the covered graphs

  static FeatureSpace covering(std::initializer_list<const TypedMultigraph*> graphs);

  std::size_t input_width() const { return node_types.size() + 1; }
  std::size_t message_width(std::size_t hidden_dim) const {
    return hidden_dim + edge_types.size() + in_port_width + out_port_width;
  }
};

/// Update at layer k: h_k = relu(W_k [h_{k-1}; a_in; a_out] + b_k). The
/// column blocks of W_k are the self, incoming and (under reverse message
/// passing) outgoing maps.
struct LayerWeights {
  Eigen::MatrixXd update;
  Eigen::VectorXd bias;
};

struct ModelWeights {
  FeatureSpace space;
  std::size_t hidden_dim = 0;
  bool reverse_mp = false;
  Eigen::MatrixXd encoder;  // hidden_dim x input_width
  Eigen::VectorXd encoder_bias;
  std::vector<LayerWeights> layers;
};

/// Uniform entries on [-1/sqrt(fan_in), 1/sqrt(fan_in)] drawn from
/// std::mt19937_64 seeded with config.seed; biases use the same bound.
/// Identical (config, space) pairs give bitwise-identical weights.
ModelWeights init_weights(const EngineConfig& config, const FeatureSpace& space);

using Embedding = Eigen::VectorXd;

struct ForwardResult {
  std::vector<std::vector<Embedding>> layers;  // layers[k][v], k = 0..depth

  const Embedding& at(std::size_t layer, NodeId v) const { return layers.at(layer).at(v); }
  const Embedding& final_embedding(NodeId v) const { return layers.back().at(v); }
};

/// Forward pass over all nodes.
///
/// Messages are [sender embedding; edge-type one-hot; p_in one-hot; p_out
/// one-hot] with disabled port slots left at zero. Aggregation is a sum taken
/// in lexicographic order of the message vectors, so equal message multisets
/// produce bitwise-equal aggregates regardless of node or edge numbering.
ForwardResult forward(const TypedMultigraph& graph, const PortAssignment* ports,
                      const EngineConfig& config, const ModelWeights& weights,
                      std::optional<NodeId> ego = std::nullopt);

/// Euclidean distance. Throws on dimension mismatch.
double embedding_distance(const Embedding& a, const Embedding& b);

}  // namespace teag
