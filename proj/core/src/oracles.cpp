// Copyright 2026 The teag-lab Authors
// SPDX-License-Identifier: Apache-2.0

#include "teag/oracles.hpp"

#include <algorithm>
#include <iterator>
#include <vector>

#include "json.hpp"
#include "teag/error.hpp"

namespace teag::oracle {

std::size_t overlap(const EntityAttributeView& view, NodeId u, NodeId v) {
  const TypedNeighborhood nu = typed_neighborhood(view, u);
  const TypedNeighborhood nv = typed_neighborhood(view, v);
  std::size_t count = 0;
  for (const auto& pair : nu) {
    if (std::binary_search(nv.begin(), nv.end(), pair)) ++count;
  }
  return count;
}

bool dup_r(const EntityAttributeView& view, NodeId u, std::size_t r) {
  view.require_entity(u);
  if (r == 0) throw Error("dup_r requires r >= 1");
  const TypedMultigraph& g = view.graph();
  for (NodeId v : view.entities()) {
    if (v == u || g.node_type(v) != g.node_type(u)) continue;
    if (overlap(view, u, v) >= r) return true;
  }
  return false;
}

namespace {

// Depth-first extension of the simple path `path` (which starts at path[0]).
bool extend_to_cycle(const TypedMultigraph& g, std::vector<NodeId>& path,
                     std::vector<bool>& on_path, std::size_t length) {
  const NodeId start = path.front();
  const NodeId last = path.back();
  if (path.size() == length) {
    for (EdgeId e : g.out_edges(last)) {
      if (g.edge(e).dst == start) return true;
    }
    return false;
  }
  for (NodeId next : g.successors(last)) {
    if (on_path[next]) continue;
    on_path[next] = true;
    path.push_back(next);
    const bool found = extend_to_cycle(g, path, on_path, length);
    path.pop_back();
    on_path[next] = false;
    if (found) return true;
  }
  return false;
}

}  // namespace

bool cyc(const TypedMultigraph& graph, NodeId v, std::size_t length) {
  graph.check_node(v);
  if (length < 3) throw Error("cycle length must be at least 3");
  if (length > graph.node_count()) return false;
  std::vector<NodeId> path{v};
  std::vector<bool> on_path(graph.node_count(), false);
  on_path[v] = true;
  return extend_to_cycle(graph, path, on_path, length);
}

bool closed_walk(const TypedMultigraph& graph, NodeId v, std::size_t length) {
  graph.check_node(v);
  std::vector<bool> frontier(graph.node_count(), false);
  frontier[v] = true;
  for (std::size_t step = 0; step < length; ++step) {
    std::vector<bool> next(graph.node_count(), false);
    for (const Edge& e : graph.edges()) {
      if (frontier[e.src]) next[e.dst] = true;
    }
    frontier = std::move(next);
  }
  return frontier[v];
}

void SimilarityTable::set(NodeId a, NodeId b, double value) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw Error("similarity " + std::to_string(value) + " is outside [0, 1]");
  }
  if (a == b) {
    if (value != 1.0) throw Error("self-similarity must be 1");
    return;
  }
  table_[std::minmax(a, b)] = value;
}

double SimilarityTable::get(NodeId a, NodeId b) const {
  if (a == b) return 1.0;
  const auto it = table_.find(std::minmax(a, b));
  return it == table_.end() ? 0.0 : it->second;
}

SimilarityTable SimilarityTable::parse(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(std::string("malformed similarity file: ") + e.what());
  }
  if (!doc.is_array()) throw Error("similarity file must hold an array");
  SimilarityTable table;
  for (const auto& entry : doc) {
    if (!entry.is_object() || !entry.contains("a") || !entry.contains("b") ||
        !entry.contains("sim")) {
      throw Error("similarity entries need a, b and sim");
    }
    if (!entry["a"].is_number_unsigned() || !entry["b"].is_number_unsigned() ||
        !entry["sim"].is_number()) {
      throw Error("similarity entries need node ids a, b and a numeric sim");
    }
    table.set(entry["a"].get<NodeId>(), entry["b"].get<NodeId>(), entry["sim"].get<double>());
  }
  return table;
}

double soft_overlap(const EntityAttributeView& view, NodeId u, NodeId v,
                    const SimilarityTable& sims) {
  const TypedNeighborhood nu = typed_neighborhood(view, u);
  const TypedNeighborhood nv = typed_neighborhood(view, v);
  double total = 0.0;
  for (const auto& [a, tau] : nu) {
    double best = 0.0;
    for (const auto& [b, tau_v] : nv) {
      if (tau_v == tau) best = std::max(best, sims.get(a, b));
    }
    total += best;
  }
  return total;
}

}  // namespace teag::oracle
