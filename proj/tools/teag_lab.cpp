// Copyright 2026 The teag-lab Authors
// SPDX-License-Identifier: Apache-2.0

// teag-lab: command-line harness for the separation experiments.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "teag/constructions.hpp"
#include "teag/error.hpp"
#include "teag/harness.hpp"
#include "teag/interchange.hpp"
#include "teag/oracles.hpp"
#include "teag/separation.hpp"

namespace {

namespace fs = std::filesystem;
using namespace teag;

struct Output {
  std::string out;
  std::string format = "json";
  std::size_t jobs = 1;
};

// JSON or text goes to --out when given (console gets the text summary),
// otherwise the chosen format goes to stdout.
int emit(const Output& o, const std::string& json_text, const std::string& text, bool pass) {
  const std::string& body = o.format == "text" ? text : json_text;
  if (o.out.empty()) {
    std::cout << body;
  } else {
    write_text_file(o.out, body);
    std::cout << text;
  }
  return pass ? 0 : 1;
}

NodeId resolve_node(const TypedMultigraph& g, const std::string& ref) {
  if (auto v = g.find_node(ref)) return *v;
  try {
    std::size_t used = 0;
    const unsigned long id = std::stoul(ref, &used);
    if (used == ref.size() && id < g.node_count()) return static_cast<NodeId>(id);
  } catch (const std::exception&) {
  }
  throw Error("no node named or numbered '" + ref + "'");
}

std::string label(const TypedMultigraph& g, NodeId v) {
  return g.node_name(v).empty() ? std::to_string(v) : g.node_name(v);
}

separation::IndexPartition parse_partition(const std::string& text) {
  // "1|2,3"
  const auto bar = text.find('|');
  if (bar == std::string::npos) throw Error("partition must look like '1|2,3'");
  auto parse_list = [](const std::string& s) {
    std::vector<std::size_t> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
      if (!item.empty()) out.push_back(std::stoul(item));
    }
    return out;
  };
  return {parse_list(text.substr(0, bar)), parse_list(text.substr(bar + 1))};
}

std::string quote(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Expressivity laboratory for MPNNs on typed entity-attribute graphs"};
  app.require_subcommand(1);
  app.fallthrough();

  Output output;
  app.add_option("--out", output.out, "Write the report to this path");
  app.add_option("--format", output.format, "Report format")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--jobs", output.jobs, "Worker threads")->check(CLI::PositiveNumber);

  // gen
  auto* gen = app.add_subcommand("gen", "Emit separation pairs as graph files plus a manifest");
  std::string gen_pair = "all";
  std::size_t gen_r = 2;
  std::size_t gen_length = 3;
  std::string gen_partition;
  gen->add_option("--pair", gen_pair, "Pair to emit")
      ->check(CLI::IsMember({"k21", "parallel", "k22", "k2r", "cycle", "all"}));
  gen->add_option("--r", gen_r, "r for k2r");
  gen->add_option("--length", gen_length, "Cycle length for cycle");
  gen->add_option("--partition", gen_partition, "k2r index partition, e.g. '1|2,3'");

  // oracle
  auto* orc = app.add_subcommand("oracle", "Evaluate a brute-force predicate on a graph file");
  std::string orc_graph;
  std::string orc_predicate = "dup";
  std::string orc_node;
  std::string orc_other;
  std::string orc_sim;
  std::size_t orc_r = 1;
  std::size_t orc_length = 3;
  orc->add_option("--graph", orc_graph, "Graph file")->required()->check(CLI::ExistingFile);
  orc->add_option("--predicate", orc_predicate, "Predicate")
      ->check(CLI::IsMember({"dup", "cyc", "walk", "overlap", "soft"}));
  orc->add_option("--node", orc_node, "Node name or id")->required();
  orc->add_option("--other", orc_other, "Second entity for overlap and soft");
  orc->add_option("--r", orc_r, "Threshold for dup");
  orc->add_option("--length", orc_length, "Length for cyc and walk");
  orc->add_option("--sim", orc_sim, "Similarity table for soft")->check(CLI::ExistingFile);

  // construct
  auto* con = app.add_subcommand("construct", "Run an exact construction and dump its trace");
  std::string con_graph;
  std::string con_kind = "dup1_simple";
  std::string con_ego;
  std::size_t con_r = 2;
  std::size_t con_length = 3;
  con->add_option("--graph", con_graph, "Graph file")->required()->check(CLI::ExistingFile);
  con->add_option("--construction", con_kind, "Construction")
      ->check(CLI::IsMember(
          {"dup1_simple", "dup1_multigraph", "dupr_ego", "dupr_ego_multigraph", "cyc_ego"}));
  con->add_option("--ego", con_ego, "Ego node name or id");
  con->add_option("--r", con_r, "Threshold for dupr_ego");
  con->add_option("--length", con_length, "Length for cyc_ego");

  // necessity
  auto* nec = app.add_subcommand("necessity", "Random-weight embedding identity trials");
  std::string nec_row = "all";
  harness::NecessityOptions nec_opts;
  std::optional<std::uint64_t> nec_master;
  nec->add_option("--row", nec_row, "Row")
      ->check(CLI::IsMember({"dup1", "dup1-multi", "dupr", "cycle", "all"}));
  nec->add_option("--seeds", nec_opts.seeds, "Trials per depth");
  nec->add_option("--hidden-dim", nec_opts.hidden_dim, "Hidden dimension")
      ->check(CLI::PositiveNumber);
  nec->add_option("--depths", nec_opts.depths, "Depth list (default per row)")->delimiter(',');
  nec->add_option("--tolerance", nec_opts.tolerance, "Maximum accepted distance");
  nec->add_option("--master-seed", nec_master, "First trial seed (else TEAG_LAB_SEED, else 0)");

  // sufficiency
  auto* suf = app.add_subcommand("sufficiency", "Run constructions on their separation pairs");
  std::string suf_row = "all";
  std::optional<std::size_t> suf_param;
  suf->add_option("--row", suf_row, "Row")
      ->check(CLI::IsMember({"dup1", "dup1-multi", "dupr", "cycle", "all"}));
  suf->add_option("--param", suf_param, "r for dupr, length for cycle");

  // certify
  auto* cert = app.add_subcommand("certify", "Color-refinement certificates");
  std::size_t cert_bound = 16;
  cert->add_option("--depth-bound", cert_bound, "Largest depth checked")
      ->check(CLI::PositiveNumber);

  // fuzz
  auto* fuzz = app.add_subcommand("fuzz", "Oracle-equivalence fuzzing of the constructions");
  harness::FuzzOptions fuzz_opts;
  std::optional<std::uint64_t> fuzz_seed;
  fuzz->add_option("--seed", fuzz_seed, "Fuzz seed (else TEAG_LAB_SEED, else 0)");
  fuzz->add_option("--graphs", fuzz_opts.simple_graphs, "Random simple TEAGs");
  fuzz->add_option("--multigraphs", fuzz_opts.multigraphs, "Random multigraph TEAGs");
  fuzz->add_option("--port-assignments", fuzz_opts.port_assignments,
                   "Valid port assignments per multigraph");
  fuzz->add_option("--digraphs", fuzz_opts.digraphs, "Random digraphs and functional graphs");
  fuzz->add_option("--max-entities", fuzz_opts.max_entities, "At most 8");
  fuzz->add_option("--max-attributes", fuzz_opts.max_attributes, "At most 10");
  fuzz->add_option("--max-entity-types", fuzz_opts.max_entity_types, "At most 3");
  fuzz->add_option("--max-edge-types", fuzz_opts.max_edge_types, "At most 3");
  fuzz->add_option("--max-parallel", fuzz_opts.max_parallel, "At most 2");
  fuzz->add_option("--max-digraph-nodes", fuzz_opts.max_digraph_nodes, "At most 8");
  fuzz->add_option("--max-cycle-length", fuzz_opts.max_cycle_length, "At most 8");

  // report
  auto* rep = app.add_subcommand("report", "Merge JSON reports into text tables");
  std::vector<std::string> rep_files;
  rep->add_option("reports", rep_files, "Report files")->required()->check(CLI::ExistingFile);

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      if (output.out.empty()) throw Error("gen needs --out DIR");
      std::vector<separation::SeparationPair> pairs;
      if (gen_pair == "all") {
        pairs = separation::acceptance_grid();
      } else if (gen_pair == "k21") {
        pairs.push_back(separation::gen_k21_pair());
      } else if (gen_pair == "parallel") {
        pairs.push_back(separation::gen_parallel_pair());
      } else if (gen_pair == "k22") {
        pairs.push_back(separation::gen_k22_example());
      } else if (gen_pair == "k2r") {
        std::optional<separation::IndexPartition> part;
        if (!gen_partition.empty()) part = parse_partition(gen_partition);
        pairs.push_back(separation::gen_k2r_pair(gen_r, part));
      } else {
        pairs.push_back(separation::gen_cycle_pair(gen_length));
      }
      for (const auto& p : pairs) {
        const fs::path dir = gen_pair == "all" ? fs::path(output.out) / p.id : fs::path(output.out);
        separation::emit_pair(p, dir);
        std::cout << p.id << " -> " << dir.string() << "\n";
      }
      return 0;
    }

    if (orc->parsed()) {
      const GraphDocument doc = read_graph_file(orc_graph);
      const NodeId u = resolve_node(doc.graph, orc_node);
      std::ostringstream js;
      std::string text;
      if (orc_predicate == "cyc" || orc_predicate == "walk") {
        const bool y = orc_predicate == "cyc" ? oracle::cyc(doc.graph, u, orc_length)
                                              : oracle::closed_walk(doc.graph, u, orc_length);
        js << "{\"predicate\": " << quote(orc_predicate) << ", \"node\": "
           << quote(label(doc.graph, u)) << ", \"length\": " << orc_length
           << ", \"value\": " << (y ? 1 : 0) << "}\n";
        text = orc_predicate + "_" + std::to_string(orc_length) + "(" + label(doc.graph, u) +
               ") = " + (y ? "1" : "0") + "\n";
      } else {
        const EntityAttributeView view = view_of(doc);
        if (orc_predicate == "dup") {
          const bool y = oracle::dup_r(view, u, orc_r);
          js << "{\"predicate\": \"dup\", \"node\": " << quote(label(doc.graph, u))
             << ", \"r\": " << orc_r << ", \"value\": " << (y ? 1 : 0) << "}\n";
          text = "dup_" + std::to_string(orc_r) + "(" + label(doc.graph, u) + ") = " +
                 (y ? "1" : "0") + "\n";
        } else {
          if (orc_other.empty()) throw Error(orc_predicate + " needs --other");
          const NodeId v = resolve_node(doc.graph, orc_other);
          std::ostringstream value;
          if (orc_predicate == "overlap") {
            value << oracle::overlap(view, u, v);
          } else {
            const oracle::SimilarityTable sims =
                orc_sim.empty() ? oracle::SimilarityTable{}
                                : oracle::SimilarityTable::parse(read_text_file(orc_sim));
            value << oracle::soft_overlap(view, u, v, sims);
          }
          js << "{\"predicate\": " << quote(orc_predicate) << ", \"u\": "
             << quote(label(doc.graph, u)) << ", \"v\": " << quote(label(doc.graph, v))
             << ", \"value\": " << value.str() << "}\n";
          text = orc_predicate + "(" + label(doc.graph, u) + ", " + label(doc.graph, v) +
                 ") = " + value.str() + "\n";
        }
      }
      return emit(output, js.str(), text, true);
    }

    if (con->parsed()) {
      const GraphDocument doc = read_graph_file(con_graph);
      const TypedMultigraph& g = doc.graph;
      auto need_ports = [&]() -> const PortAssignment& {
        if (!doc.ports) throw Error(con_kind + " needs ports in the graph file");
        return *doc.ports;
      };
      auto need_ego = [&] {
        if (con_ego.empty()) throw Error(con_kind + " needs --ego");
        return resolve_node(g, con_ego);
      };
      std::string js;
      std::string text;
      if (con_kind == "dup1_simple" || con_kind == "dup1_multigraph") {
        const EntityAttributeView view = view_of(doc);
        const construct::Dup1Result res = con_kind == "dup1_simple"
                                              ? construct::dup1_simple(view)
                                              : construct::dup1_multigraph(view, need_ports());
        js = construct::to_json(g, res);
        for (NodeId u : view.entities()) {
          text += con_kind + "(" + label(g, u) + ") = " + (res.at(u) ? "1" : "0") + "\n";
        }
      } else if (con_kind == "dupr_ego" || con_kind == "dupr_ego_multigraph") {
        const EntityAttributeView view = view_of(doc);
        const NodeId ego = need_ego();
        const construct::EgoLayerState st =
            con_kind == "dupr_ego" ? construct::dupr_ego(view, ego, con_r)
                                   : construct::dupr_ego_multigraph(view, need_ports(), ego, con_r);
        js = construct::to_json(g, st);
        text = con_kind + "(" + label(g, ego) + ", r=" + std::to_string(con_r) + ") = " +
               (st.output ? "1" : "0") + "\n";
      } else {
        const NodeId ego = need_ego();
        const construct::WalkTrace tr = construct::cyc_ego(g, ego, con_length);
        js = construct::to_json(g, tr);
        text = "cyc_ego(" + label(g, ego) + ", l=" + std::to_string(con_length) + ") = " +
               (tr.output ? "1" : "0") + "\n";
      }
      return emit(output, js, text, true);
    }

    if (nec->parsed()) {
      nec_opts.master_seed = nec_master ? *nec_master : harness::master_seed(0);
      nec_opts.jobs = output.jobs;
      std::vector<harness::NecessityReport> reports;
      if (nec_row == "all") {
        for (harness::Row r : harness::kAllRows) reports.push_back(harness::run_necessity(r, nec_opts));
      } else {
        reports.push_back(harness::run_necessity(harness::row_from_string(nec_row), nec_opts));
      }
      bool pass = true;
      for (const auto& r : reports) pass = pass && r.pass;
      return emit(output, harness::to_json(reports), harness::to_text(reports), pass);
    }

    if (suf->parsed()) {
      std::vector<harness::SufficiencyReport> reports;
      if (suf_row == "all") {
        if (suf_param) throw Error("--param needs a single --row");
        reports = harness::run_sufficiency_table();
      } else {
        reports.push_back(harness::run_sufficiency(harness::row_from_string(suf_row), suf_param));
      }
      bool pass = true;
      for (const auto& r : reports) pass = pass && r.pass;
      return emit(output, harness::to_json(reports), harness::to_text(reports), pass);
    }

    if (cert->parsed()) {
      const harness::CertificateReport report = harness::run_certificates(cert_bound);
      return emit(output, harness::to_json(report), harness::to_text(report), report.pass);
    }

    if (fuzz->parsed()) {
      fuzz_opts.seed = fuzz_seed ? *fuzz_seed : harness::master_seed(0);
      fuzz_opts.jobs = output.jobs;
      const harness::FuzzReport report = harness::run_fuzz(fuzz_opts);
      return emit(output, harness::to_json(report), harness::to_text(report), report.pass);
    }

    if (rep->parsed()) {
      std::vector<std::string> docs;
      for (const std::string& f : rep_files) docs.push_back(read_text_file(f));
      bool pass = false;
      const std::string text = harness::render_report_tables(docs, pass);
      if (output.out.empty()) {
        std::cout << text;
      } else {
        write_text_file(output.out, text);
        std::cout << text;
      }
      return pass ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
