// pg: command-line front end for the power-graph library.

#include <iostream>

#include <CLI11.hpp>

#include "pg/canonical.hpp"
#include "pg/coset_enumeration.hpp"
#include "pg/error.hpp"
#include "pg/expression.hpp"
#include "pg/io.hpp"
#include "pg/isomorphism.hpp"
#include "pg/power_graph.hpp"
#include "pg/scanner.hpp"

namespace {

constexpr int kYes = 0, kNo = 1, kFailure = 2;

pg::Group load(const std::string& source) { return pg::load_group(source, {}, pg::default_order_cap()); }

void print_mapping(const std::vector<std::uint32_t>& map) {
  for (std::size_t i = 0; i < map.size(); ++i) std::cout << i << " -> " << map[i] << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite groups, power graphs and conformality"};
  app.require_subcommand(1);

  std::string g1, g2, file, dot_out, edges_out, cayley_out, manifest, json_out;
  bool directed = false, as_json = false, exhaustive = false, corrupt = false;
  std::size_t limit = pg::EnumerationOptions{}.max_cosets, order = 0;
  unsigned jobs = 1;

  auto* spectrum = app.add_subcommand("spectrum", "Print the order spectrum");
  spectrum->add_option("group", g1, "construction or file")->required();

  auto* conformal = app.add_subcommand("conformal", "Test whether two groups are conformal");
  conformal->add_option("g1", g1)->required();
  conformal->add_option("g2", g2)->required();

  auto* pgiso = app.add_subcommand("pgiso", "Test power-graph isomorphism");
  pgiso->add_option("g1", g1)->required();
  pgiso->add_option("g2", g2)->required();
  pgiso->add_flag("--directed", directed, "compare directed power graphs");

  auto* giso = app.add_subcommand("giso", "Test group isomorphism");
  giso->add_option("g1", g1)->required();
  giso->add_option("g2", g2)->required();

  auto* graph = app.add_subcommand("graph", "Build a power graph");
  graph->add_option("group", g1)->required();
  graph->add_flag("--directed", directed);
  graph->add_option("--dot", dot_out, "write DOT to this file");
  graph->add_option("--edges", edges_out, "write the edge list to this file");

  auto* coset = app.add_subcommand("coset", "Enumerate cosets of a presentation (.fp)");
  coset->add_option("file", file)->required();
  coset->add_option("--limit", limit, "maximum number of cosets");
  coset->add_option("--out", cayley_out, "write the realized group as a .cayley file");

  auto* scan = app.add_subcommand("scan", "Classify one order over a catalog");
  scan->add_option("--order", order)->required();
  scan->add_option("--manifest", manifest, "manifest file; the builtin corpus if omitted");
  scan->add_flag("--json", as_json);
  scan->add_flag("--exhaustive", exhaustive, "test all relations for every pair");
  scan->add_option("--jobs", jobs)->check(CLI::Range(1u, 256u));

  auto* verify = app.add_subcommand("verify-paper", "Run the verification suite");
  verify->add_option("--json", json_out, "also write the report as JSON");
  verify->add_flag("--corrupt", corrupt, "use a corrupted presentation (negative control)");
  verify->add_option("--jobs", jobs)->check(CLI::Range(1u, 256u));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*spectrum) {
      auto g = load(g1);
      std::cout << "order " << g.order() << "\n" << pg::to_string(pg::order_spectrum(g)) << "\n";
      return kYes;
    }
    if (*conformal) {
      bool c = pg::are_conformal(load(g1), load(g2));
      std::cout << (c ? "conformal" : "not conformal") << "\n";
      return c ? kYes : kNo;
    }
    if (*pgiso) {
      auto a = pg::power_graph(load(g1), directed), b = pg::power_graph(load(g2), directed);
      auto map = pg::are_isomorphic_graphs(a, b);
      std::cout << "VERDICT: " << (map ? "isomorphic" : "not isomorphic") << "\n";
      if (map) print_mapping(*map);
      return map ? kYes : kNo;
    }
    if (*giso) {
      auto map = pg::are_isomorphic_groups(load(g1), load(g2));
      std::cout << "VERDICT: " << (map ? "isomorphic" : "not isomorphic") << "\n";
      if (map) print_mapping(*map);
      return map ? kYes : kNo;
    }
    if (*graph) {
      auto p = pg::power_graph(load(g1), directed);
      if (!dot_out.empty()) pg::write_file(dot_out, pg::to_dot(p));
      if (!edges_out.empty()) pg::write_file(edges_out, pg::edge_list(p.graph()));
      if (dot_out.empty() && edges_out.empty()) std::cout << pg::edge_list(p.graph());
      std::cerr << p.vertex_count() << " vertices, " << p.graph().edge_count() << (directed ? " arcs" : " edges")
                << "\n";
      return kYes;
    }
    if (*coset) {
      auto pres = pg::parse_presentation(pg::read_file(file));
      pg::EnumerationOptions opt;
      opt.max_cosets = limit;
      auto table = pg::todd_coxeter(pres, opt);
      std::cout << "cosets " << table.coset_count << " (defined " << table.total_defined << ")\n";
      if (!cayley_out.empty()) pg::write_file(cayley_out, pg::format_cayley(pg::realize(table).group));
      return kYes;
    }
    if (*scan) {
      auto catalog = manifest.empty() ? pg::builtin_corpus() : pg::load_catalog(manifest);
      for (const auto& e : catalog.errors) std::cerr << "error: " << e.id << ": " << e.message << "\n";
      if (catalog.of_order(order).empty()) {
        std::cerr << "no catalog groups of order " << order << "\n";
        return kFailure;
      }
      auto report = pg::classify_order(catalog, order, {jobs, exhaustive});
      std::cout << (as_json ? pg::report_json(report) : pg::report_text(report));
      return report.defects.empty() ? kYes : kFailure;
    }
    if (*verify) {
      pg::VerifyOptions opt;
      opt.corrupt_presentation = corrupt;
      opt.jobs = jobs;
      auto checks = pg::verify_paper(opt);
      std::cout << pg::checks_text(checks);
      if (!json_out.empty()) pg::write_file(json_out, pg::checks_json(checks));
      for (const auto& c : checks)
        if (!c.pass) return kNo;
      return kYes;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kFailure;
}
