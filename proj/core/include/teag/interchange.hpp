// Copyright 2026 The teag-lab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "teag/graph.hpp"

namespace teag {

/// Contents of one graph interchange file.
///
/// The text format is a single JSON object:
///
///   node_types  [{name, kind: "entity"|"attribute"|"plain"}]
///   edge_types  [name]
///   nodes       [{id, type, name?}]   type is a node-type name or index
///   edges       [{id, src, dst, type}] type is an edge-type name or index
///   ports       [{edge, p_in, p_out}]   optional
///   bipartition {entities: [ids], attributes: [ids]}   optional
///
/// Ids are 0-based and must be dense; they are listed in any order.
struct GraphDocument {
  TypedMultigraph graph;
  std::optional<PortAssignment> ports;
  std::optional<Bipartition> bipartition;
};

GraphDocument parse_graph_document(const std::string& text);
std::string dump_graph_document(const TypedMultigraph& graph,
                                const PortAssignment* ports = nullptr,
                                const Bipartition* bipartition = nullptr);

GraphDocument read_graph_file(const std::filesystem::path& path);
void write_graph_file(const std::filesystem::path& path, const TypedMultigraph& graph,
                      const PortAssignment* ports = nullptr,
                      const Bipartition* bipartition = nullptr);

/// Entity-attribute view for a document: its bipartition if present, else the
/// node-type kinds.
EntityAttributeView view_of(const GraphDocument& doc);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace teag
