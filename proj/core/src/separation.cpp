// Copyright 2026 The teag-lab Authors
// SPDX-License-Identifier: Apache-2.0

#include "teag/separation.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"
#include "teag/error.hpp"
#include "teag/interchange.hpp"

namespace teag::separation {

namespace {

std::string indexed(const std::string& stem, std::size_t j) { return stem + "_" + std::to_string(j); }

struct PortedEdge {
  NodeId src;
  NodeId dst;
  EdgeTypeId type;
  std::uint32_t p_out;
  std::uint32_t p_in;
};

std::pair<TypedMultigraph, PortAssignment> build_with_ports(GraphBuilder builder,
                                                            const std::vector<PortedEdge>& edges) {
  std::vector<EdgeId> ids;
  for (const PortedEdge& e : edges) ids.push_back(builder.add_edge(e.src, e.dst, e.type));
  TypedMultigraph g = std::move(builder).build();
  PortAssignment ports(g.edge_count());
  for (std::size_t i = 0; i < edges.size(); ++i) ports.set(ids[i], edges[i].p_in, edges[i].p_out);
  return {std::move(g), std::move(ports)};
}

void attach_canonical(SeparationPair& pair) {
  pair.ports1 = assign_canonical_ports(pair.g1);
  pair.ports2 = assign_canonical_ports(pair.g2);
}

void attach_kind_bipartitions(SeparationPair& pair) {
  pair.parts1 = bipartition_from_kinds(pair.g1);
  pair.parts2 = bipartition_from_kinds(pair.g2);
}

}  // namespace

std::string to_string(const Predicate& predicate) {
  return predicate.kind == PredicateKind::dup ? "dup_" + std::to_string(predicate.parameter)
                                              : "cyc_" + std::to_string(predicate.parameter);
}

EntityAttributeView SeparationPair::view1() const {
  if (!parts1) throw Error("pair " + id + " has no entity-attribute structure");
  return EntityAttributeView(g1, *parts1);
}

EntityAttributeView SeparationPair::view2() const {
  if (!parts2) throw Error("pair " + id + " has no entity-attribute structure");
  return EntityAttributeView(g2, *parts2);
}

SeparationPair gen_k21_pair() {
  SeparationPair pair;
  pair.id = "k21";
  pair.predicate = {PredicateKind::dup, 1};
  {
    GraphBuilder b;
    const auto sigma = b.node_type("sigma", NodeKind::entity);
    const auto alpha = b.node_type("alpha_1", NodeKind::attribute);
    const auto tau = b.edge_type("tau_1");
    const NodeId u = b.add_node(sigma, "u");
    const NodeId v = b.add_node(sigma, "v");
    const NodeId a = b.add_node(alpha, "a");
    b.add_edge(u, a, tau);
    b.add_edge(v, a, tau);
    pair.g1 = std::move(b).build();
    pair.target1 = u;
  }
  {
    GraphBuilder b;
    const auto sigma = b.node_type("sigma", NodeKind::entity);
    const auto alpha = b.node_type("alpha_1", NodeKind::attribute);
    const auto tau = b.edge_type("tau_1");
    const NodeId u = b.add_node(sigma, "u");
    const NodeId a = b.add_node(alpha, "a");
    b.add_edge(u, a, tau);
    pair.g2 = std::move(b).build();
    pair.target2 = u;
  }
  attach_kind_bipartitions(pair);
  attach_canonical(pair);
  return pair;
}

SeparationPair gen_parallel_pair() {
  SeparationPair pair;
  pair.id = "parallel";
  pair.predicate = {PredicateKind::dup, 1};
  auto make = [](bool crossed) {
    GraphBuilder b;
    const auto sigma = b.node_type("sigma", NodeKind::entity);
    const auto alpha = b.node_type("alpha_1", NodeKind::attribute);
    const auto tau = b.edge_type("tau_1");
    const NodeId u = b.add_node(sigma, "u");
    const NodeId v = b.add_node(sigma, "v");
    const NodeId a1 = b.add_node(alpha, "a_1");
    const NodeId a2 = b.add_node(alpha, "a_2");
    if (crossed) {
      b.add_edge(u, a1, tau);
      b.add_edge(v, a1, tau);
      b.add_edge(u, a2, tau);
      b.add_edge(v, a2, tau);
    } else {
      b.add_edge(u, a1, tau);
      b.add_edge(u, a1, tau);
      b.add_edge(v, a2, tau);
      b.add_edge(v, a2, tau);
    }
    return std::move(b).build();
  };
  pair.g1 = make(true);
  pair.g2 = make(false);
  pair.target1 = 0;
  pair.target2 = 0;
  attach_kind_bipartitions(pair);
  attach_canonical(pair);
  return pair;
}

SeparationPair gen_k22_example() {
  SeparationPair pair;
  pair.id = "k22";
  pair.predicate = {PredicateKind::dup, 2};

  auto skeleton = [](const std::vector<std::string>& entity_names, GraphBuilder& b,
                     std::vector<NodeId>& ent, std::vector<NodeId>& att,
                     std::vector<EdgeTypeId>& tau) {
    const auto sigma = b.node_type("sigma", NodeKind::entity);
    const auto alpha1 = b.node_type("alpha_1", NodeKind::attribute);
    const auto alpha2 = b.node_type("alpha_2", NodeKind::attribute);
    tau = {b.edge_type("tau_1"), b.edge_type("tau_2")};
    for (const std::string& name : entity_names) ent.push_back(b.add_node(sigma, name));
    att.push_back(b.add_node(alpha1, "a_1"));
    att.push_back(b.add_node(alpha2, "a_2"));
    att.push_back(b.add_node(alpha1, "a_3"));
    att.push_back(b.add_node(alpha2, "a_4"));
  };

  {
    GraphBuilder b;
    std::vector<NodeId> e;
    std::vector<NodeId> a;
    std::vector<EdgeTypeId> t;
    skeleton({"u", "v", "w", "x"}, b, e, a, t);
    auto [g, ports] = build_with_ports(std::move(b), {
                                                         {e[0], a[0], t[0], 1, 1},
                                                         {e[0], a[1], t[1], 2, 1},
                                                         {e[1], a[0], t[0], 1, 2},
                                                         {e[1], a[1], t[1], 2, 2},
                                                         {e[2], a[2], t[0], 1, 1},
                                                         {e[2], a[3], t[1], 2, 1},
                                                         {e[3], a[2], t[0], 1, 2},
                                                         {e[3], a[3], t[1], 2, 2},
                                                     });
    pair.g1 = std::move(g);
    pair.ports1 = std::move(ports);
  }
  {
    GraphBuilder b;
    std::vector<NodeId> e;
    std::vector<NodeId> a;
    std::vector<EdgeTypeId> t;
    skeleton({"u", "v_1", "v_2", "v_3"}, b, e, a, t);
    auto [g, ports] = build_with_ports(std::move(b), {
                                                         {e[0], a[0], t[0], 1, 1},
                                                         {e[0], a[1], t[1], 2, 1},
                                                         {e[1], a[0], t[0], 1, 2},
                                                         {e[1], a[3], t[1], 2, 2},
                                                         {e[2], a[2], t[0], 1, 2},
                                                         {e[2], a[1], t[1], 2, 2},
                                                         {e[3], a[2], t[0], 1, 1},
                                                         {e[3], a[3], t[1], 2, 1},
                                                     });
    pair.g2 = std::move(g);
    pair.ports2 = std::move(ports);
  }
  pair.target1 = 0;
  pair.target2 = 0;
  attach_kind_bipartitions(pair);
  return pair;
}

SeparationPair gen_k2r_pair(std::size_t r, const std::optional<IndexPartition>& partition) {
  if (r < 2) throw Error("gen_k2r_pair requires r >= 2");
  IndexPartition parts;
  if (partition) {
    parts = *partition;
  } else {
    parts.s1 = {1};
    for (std::size_t j = 2; j <= r; ++j) parts.s2.push_back(j);
  }
  {
    std::set<std::size_t> seen;
    bool ok = !parts.s1.empty() && !parts.s2.empty();
    for (const auto* s : {&parts.s1, &parts.s2}) {
      for (std::size_t j : *s) ok = ok && j >= 1 && j <= r && seen.insert(j).second;
    }
    if (!ok || seen.size() != r) {
      throw Error("partition must split {1..r} into two nonempty disjoint sets");
    }
  }
  std::vector<bool> in_s1(r + 1, false);
  for (std::size_t j : parts.s1) in_s1[j] = true;

  SeparationPair pair;
  pair.id = "k2r_" + std::to_string(r);
  pair.predicate = {PredicateKind::dup, r};

  struct Frame {
    GraphBuilder b;
    std::vector<NodeId> ent;
    std::vector<NodeId> a;  // a[j-1]
    std::vector<NodeId> bb;
    std::vector<EdgeTypeId> tau;
  };
  auto skeleton = [r](const std::vector<std::string>& entity_names) {
    Frame f;
    const auto sigma = f.b.node_type("sigma", NodeKind::entity);
    std::vector<NodeTypeId> alpha;
    for (std::size_t j = 1; j <= r; ++j) {
      alpha.push_back(f.b.node_type(indexed("alpha", j), NodeKind::attribute));
    }
    for (std::size_t j = 1; j <= r; ++j) f.tau.push_back(f.b.edge_type(indexed("tau", j)));
    for (const std::string& name : entity_names) f.ent.push_back(f.b.add_node(sigma, name));
    for (std::size_t j = 1; j <= r; ++j) f.a.push_back(f.b.add_node(alpha[j - 1], indexed("a", j)));
    for (std::size_t j = 1; j <= r; ++j) f.bb.push_back(f.b.add_node(alpha[j - 1], indexed("b", j)));
    return f;
  };
  auto edge = [](const Frame& f, NodeId src, NodeId dst, std::size_t j, std::uint32_t p_in) {
    return PortedEdge{src, dst, f.tau[j - 1], static_cast<std::uint32_t>(j), p_in};
  };

  {
    Frame f = skeleton({"u", "v", "w", "x"});
    std::vector<PortedEdge> edges;
    for (std::size_t j = 1; j <= r; ++j) edges.push_back(edge(f, f.ent[0], f.a[j - 1], j, 1));
    for (std::size_t j = 1; j <= r; ++j) edges.push_back(edge(f, f.ent[1], f.a[j - 1], j, 2));
    for (std::size_t j = 1; j <= r; ++j) edges.push_back(edge(f, f.ent[2], f.bb[j - 1], j, 1));
    for (std::size_t j = 1; j <= r; ++j) edges.push_back(edge(f, f.ent[3], f.bb[j - 1], j, 2));
    auto [g, ports] = build_with_ports(std::move(f.b), edges);
    pair.g1 = std::move(g);
    pair.ports1 = std::move(ports);
  }
  {
    Frame f = skeleton({"u", "v_1", "v_2", "v_3"});
    std::vector<PortedEdge> edges;
    for (std::size_t j = 1; j <= r; ++j) edges.push_back(edge(f, f.ent[0], f.a[j - 1], j, 1));
    for (std::size_t j = 1; j <= r; ++j) {
      edges.push_back(edge(f, f.ent[1], in_s1[j] ? f.a[j - 1] : f.bb[j - 1], j, 2));
    }
    for (std::size_t j = 1; j <= r; ++j) {
      edges.push_back(edge(f, f.ent[2], in_s1[j] ? f.bb[j - 1] : f.a[j - 1], j, 2));
    }
    for (std::size_t j = 1; j <= r; ++j) edges.push_back(edge(f, f.ent[3], f.bb[j - 1], j, 1));
    auto [g, ports] = build_with_ports(std::move(f.b), edges);
    pair.g2 = std::move(g);
    pair.ports2 = std::move(ports);
  }
  pair.target1 = 0;
  pair.target2 = 0;
  attach_kind_bipartitions(pair);
  return pair;
}

SeparationPair gen_cycle_pair(std::size_t length) {
  if (length < 3) throw Error("gen_cycle_pair requires length >= 3");
  SeparationPair pair;
  pair.id = "cycle_" + std::to_string(length);
  pair.predicate = {PredicateKind::cyc, length};
  {
    GraphBuilder b;
    const auto sigma = b.node_type("sigma", NodeKind::plain);
    const auto tau = b.edge_type("tau_1");
    for (std::size_t i = 1; i <= length; ++i) b.add_node(sigma, indexed("v", i));
    for (std::size_t i = 1; i <= length; ++i) b.add_node(sigma, indexed("w", i));
    for (std::size_t c = 0; c < 2; ++c) {
      const auto base = static_cast<NodeId>(c * length);
      for (std::size_t i = 0; i < length; ++i) {
        b.add_edge(base + static_cast<NodeId>(i), base + static_cast<NodeId>((i + 1) % length),
                   tau);
      }
    }
    pair.g1 = std::move(b).build();
  }
  {
    GraphBuilder b;
    const auto sigma = b.node_type("sigma", NodeKind::plain);
    const auto tau = b.edge_type("tau_1");
    const std::size_t n = 2 * length;
    for (std::size_t i = 1; i <= n; ++i) b.add_node(sigma, indexed("z", i));
    for (std::size_t i = 0; i < n; ++i) {
      b.add_edge(static_cast<NodeId>(i), static_cast<NodeId>((i + 1) % n), tau);
    }
    pair.g2 = std::move(b).build();
  }
  pair.target1 = 0;
  pair.target2 = 0;
  attach_canonical(pair);
  return pair;
}

TypedMultigraph running_example() {
  GraphBuilder b;
  const auto person = b.node_type("Person", NodeKind::entity);
  const auto email = b.node_type("Email", NodeKind::attribute);
  const auto phone = b.node_type("Phone", NodeKind::attribute);
  const auto address = b.node_type("Address", NodeKind::attribute);
  const NodeId u = b.add_node(person, "u");
  const NodeId v = b.add_node(person, "v");
  const NodeId mail = b.add_node(email, "smith@x.com");
  const NodeId tel = b.add_node(phone, "555-1234");
  const NodeId addr = b.add_node(address, "42 Main St");
  b.add_edge(u, mail, b.edge_type("hasEmail"));
  b.add_edge(u, tel, b.edge_type("hasPhone"));
  b.add_edge(v, mail, b.edge_type("hasEmail"));
  b.add_edge(v, addr, b.edge_type("hasAddr"));
  return std::move(b).build();
}

TypedMultigraph directed_cycle(std::size_t length) {
  if (length == 0) throw Error("cycle length must be positive");
  GraphBuilder b;
  const auto sigma = b.node_type("sigma", NodeKind::plain);
  const auto tau = b.edge_type("tau_1");
  for (std::size_t i = 1; i <= length; ++i) b.add_node(sigma, indexed("c", i));
  for (std::size_t i = 0; i < length; ++i) {
    b.add_edge(static_cast<NodeId>(i), static_cast<NodeId>((i + 1) % length), tau);
  }
  return std::move(b).build();
}

std::string manifest_json(const SeparationPair& pair) {
  nlohmann::json doc;
  doc["pair"] = pair.id;
  doc["predicate"] = pair.predicate.kind == PredicateKind::dup ? "dup" : "cyc";
  doc[pair.predicate.kind == PredicateKind::dup ? "r" : "length"] = pair.predicate.parameter;
  doc["targets"] = {{"g1", pair.g1.node_name(pair.target1)},
                    {"g2", pair.g2.node_name(pair.target2)}};
  doc["target_ids"] = {{"g1", pair.target1}, {"g2", pair.target2}};
  doc["expected_labels"] = {pair.label1, pair.label2};
  doc["files"] = {{"g1", "g1.json"}, {"g2", "g2.json"}};
  return doc.dump(2) + "\n";
}

void emit_pair(const SeparationPair& pair, const std::filesystem::path& directory) {
  const Bipartition* p1 = pair.parts1 ? &*pair.parts1 : nullptr;
  const Bipartition* p2 = pair.parts2 ? &*pair.parts2 : nullptr;
  write_graph_file(directory / "g1.json", pair.g1, pair.ports1 ? &*pair.ports1 : nullptr, p1);
  write_graph_file(directory / "g2.json", pair.g2, pair.ports2 ? &*pair.ports2 : nullptr, p2);
  write_text_file(directory / "manifest.json", manifest_json(pair));
}

std::vector<SeparationPair> acceptance_grid() {
  std::vector<SeparationPair> grid;
  grid.push_back(gen_k21_pair());
  grid.push_back(gen_parallel_pair());
  grid.push_back(gen_k22_example());
  for (std::size_t r : {2, 3, 4}) grid.push_back(gen_k2r_pair(r));
  for (std::size_t l : {3, 5, 7}) grid.push_back(gen_cycle_pair(l));
  return grid;
}

}  // namespace teag::separation
