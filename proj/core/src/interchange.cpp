// Copyright 2026 The teag-lab Authors
// SPDX-License-Identifier: Apache-2.0

#include "teag/interchange.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "teag/error.hpp"

namespace teag {

using nlohmann::json;

namespace {

std::uint32_t as_index(const json& value, const char* what) {
  if (!value.is_number_integer() || value.get<std::int64_t>() < 0) {
    throw Error(std::string("expected a non-negative integer for ") + what);
  }
  return value.get<std::uint32_t>();
}

const json& field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw Error(std::string("missing field '") + key + "'");
  }
  return obj.at(key);
}

// Dense id -> object, rejecting gaps and duplicates.
std::vector<const json*> by_id(const json& array, const char* what) {
  if (!array.is_array()) throw Error(std::string(what) + " must be an array");
  std::vector<const json*> slots(array.size(), nullptr);
  for (const json& item : array) {
    const auto id = as_index(field(item, "id"), what);
    if (id >= slots.size() || slots[id] != nullptr) {
      throw Error(std::string(what) + " ids must be dense and unique");
    }
    slots[id] = &item;
  }
  return slots;
}

std::vector<NodeId> id_list(const json& array) {
  std::vector<NodeId> out;
  for (const json& v : array) out.push_back(as_index(v, "bipartition id"));
  return out;
}

}  // namespace

static GraphDocument parse_document(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(std::string("malformed graph file: ") + e.what());
  }

  GraphBuilder builder;
  std::vector<NodeTypeId> node_types;
  for (const json& t : field(doc, "node_types")) {
    node_types.push_back(builder.add_node_type(field(t, "name").get<std::string>(),
                                               node_kind_from_string(
                                                   field(t, "kind").get<std::string>())));
  }
  std::vector<EdgeTypeId> edge_types;
  for (const json& t : field(doc, "edge_types")) {
    edge_types.push_back(builder.add_edge_type(t.get<std::string>()));
  }

  auto resolve = [](const json& ref, const auto& ids, auto&& lookup_name) {
    if (ref.is_string()) return lookup_name(ref.template get<std::string>());
    const auto idx = as_index(ref, "type");
    if (idx >= ids.size()) throw Error("type index out of range");
    return ids[idx];
  };
  auto node_type_named = [&](const std::string& name) {
    for (std::size_t i = 0; i < node_types.size(); ++i) {
      if (doc["node_types"][i]["name"] == name) return node_types[i];
    }
    throw Error("unknown node type '" + name + "'");
  };
  auto edge_type_named = [&](const std::string& name) {
    for (std::size_t i = 0; i < edge_types.size(); ++i) {
      if (doc["edge_types"][i] == name) return edge_types[i];
    }
    throw Error("unknown edge type '" + name + "'");
  };

  for (const json* node : by_id(field(doc, "nodes"), "nodes")) {
    const NodeTypeId type = resolve(field(*node, "type"), node_types, node_type_named);
    builder.add_node(type, node->value("name", std::string{}));
  }
  const auto edges = by_id(field(doc, "edges"), "edges");
  for (const json* edge : edges) {
    const EdgeTypeId type = resolve(field(*edge, "type"), edge_types, edge_type_named);
    builder.add_edge(as_index(field(*edge, "src"), "src"), as_index(field(*edge, "dst"), "dst"),
                     type);
  }

  GraphDocument out{std::move(builder).build(), std::nullopt, std::nullopt};
  if (doc.contains("ports")) {
    PortAssignment ports(out.graph.edge_count());
    for (const json& p : doc["ports"]) {
      const auto e = as_index(field(p, "edge"), "edge");
      if (e >= out.graph.edge_count()) throw Error("port entry for unknown edge");
      ports.set(e, as_index(field(p, "p_in"), "p_in"), as_index(field(p, "p_out"), "p_out"));
    }
    out.ports = std::move(ports);
  }
  if (doc.contains("bipartition")) {
    const json& b = doc["bipartition"];
    out.bipartition = Bipartition{id_list(field(b, "entities")), id_list(field(b, "attributes"))};
    for (NodeId v : out.bipartition->entities) out.graph.check_node(v);
    for (NodeId v : out.bipartition->attributes) out.graph.check_node(v);
  }
  return out;
}

std::string dump_graph_document(const TypedMultigraph& graph, const PortAssignment* ports,
                                const Bipartition* bipartition) {
  json doc;
  doc["node_types"] = json::array();
  for (const NodeType& t : graph.node_type_catalog()) {
    doc["node_types"].push_back({{"name", t.name}, {"kind", std::string(to_string(t.kind))}});
  }
  doc["edge_types"] = json::array();
  for (const std::string& t : graph.edge_type_catalog()) doc["edge_types"].push_back(t);
  doc["nodes"] = json::array();
  for (NodeId v = 0; v < graph.node_count(); ++v) {
    json node = {{"id", v}, {"type", graph.node_type_info(v).name}};
    if (!graph.node_name(v).empty()) node["name"] = graph.node_name(v);
    doc["nodes"].push_back(std::move(node));
  }
  doc["edges"] = json::array();
  for (const Edge& e : graph.edges()) {
    doc["edges"].push_back(
        {{"id", e.id}, {"src", e.src}, {"dst", e.dst}, {"type", graph.edge_type_name(e.type)}});
  }
  if (ports != nullptr) {
    doc["ports"] = json::array();
    for (const Edge& e : graph.edges()) {
      const EdgePorts& p = ports->at(e.id);
      doc["ports"].push_back({{"edge", e.id}, {"p_in", p.p_in}, {"p_out", p.p_out}});
    }
  }
  if (bipartition != nullptr) {
    doc["bipartition"] = {{"entities", bipartition->entities},
                          {"attributes", bipartition->attributes}};
  }
  return doc.dump(2) + "\n";
}

GraphDocument parse_graph_document(const std::string& text) {
  try {
    return parse_document(text);
  } catch (const json::exception& e) {
    throw Error(std::string("malformed graph file: ") + e.what());
  }
}

GraphDocument read_graph_file(const std::filesystem::path& path) {
  return parse_graph_document(read_text_file(path));
}

void write_graph_file(const std::filesystem::path& path, const TypedMultigraph& graph,
                      const PortAssignment* ports, const Bipartition* bipartition) {
  write_text_file(path, dump_graph_document(graph, ports, bipartition));
}

EntityAttributeView view_of(const GraphDocument& doc) {
  if (doc.bipartition) return EntityAttributeView(doc.graph, *doc.bipartition);
  return EntityAttributeView(doc.graph);
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
}

}  // namespace teag
