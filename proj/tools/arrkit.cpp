// arrkit command-line tool: analyze, catalog, verify-suite.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "arrkit/analysis.hpp"
#include "arrkit/catalog.hpp"
#include "arrkit/parser.hpp"
#include "arrkit/suites.hpp"

namespace {

using namespace arrkit;
using nlohmann::json;

struct AnalyzeArgs {
  std::string path;
  std::string catalog;
  std::vector<std::string> params;
  std::string report = "text";
  std::optional<std::string> delta;
  std::string tau_method = "local";
  int degree_guard = 12;
  bool force = false;
  bool timing = false;
};

struct CatalogArgs {
  std::string name;
  std::vector<std::string> params;
  std::string report = "text";
};

struct SuiteArgs {
  std::string name;
  std::string manifest;
  std::string report = "text";
};

int cmd_analyze(const AnalyzeArgs& a) {
  if (a.path.empty() == a.catalog.empty()) {
    std::cerr << "analyze: give either an arrangement file or --catalog NAME\n";
    return kExitParse;
  }
  const Arrangement arr =
      a.catalog.empty() ? load_arrangement(a.path) : catalog_build(a.catalog, parse_catalog_params(a.params));
  AnalyzeOptions opt;
  opt.tau_method = parse_tjurina_method(a.tau_method);
  opt.tjurina.degree_guard = a.degree_guard;
  opt.tjurina.force = a.force;
  opt.delta = a.delta;
  opt.timing = a.timing;
  const AnalysisReport rep = analyze(arr, opt);
  if (a.report == "json")
    std::cout << to_json(rep).dump(2) << "\n";
  else
    std::cout << to_text(rep);
  return rep.exit_code();
}

int cmd_catalog_list(const CatalogArgs& a) {
  if (a.report == "json") {
    json out = json::array();
    for (const auto& e : catalog()) {
      json params = json::array();
      for (const auto& p : e.params)
        params.push_back({{"name", p.name},
                          {"description", p.description},
                          {"default", p.default_value ? json(*p.default_value) : json(nullptr)}});
      out.push_back({{"name", e.name}, {"summary", e.summary}, {"params", params}});
    }
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }
  for (const auto& e : catalog()) {
    std::cout << e.name;
    for (const auto& p : e.params) std::cout << " [" << p.name << (p.default_value ? "=" + *p.default_value : "") << "]";
    std::cout << "  " << e.summary << "\n";
  }
  return kExitOk;
}

int cmd_catalog_emit(const CatalogArgs& a) {
  std::cout << to_json(catalog_build(a.name, parse_catalog_params(a.params))).dump(2) << "\n";
  return kExitOk;
}

int cmd_verify_suite(const SuiteArgs& a) {
  json manifest = builtin_manifest();
  if (!a.manifest.empty()) {
    std::ifstream in(a.manifest);
    if (!in) throw std::invalid_argument("cannot open manifest " + a.manifest);
    manifest = json::parse(in);
  }
  const SuiteResult r = run_suite(a.name, manifest);
  if (a.report == "json")
    std::cout << to_json(r).dump(2) << "\n";
  else
    std::cout << to_text(r);
  return r.pass() ? kExitOk : kExitInfeasible;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact invariants of plane curve arrangements"};
  app.require_subcommand(1);

  AnalyzeArgs aa;
  auto* analyze_cmd = app.add_subcommand("analyze", "Full analysis of an arrangement file or catalog entry");
  analyze_cmd->add_option("file", aa.path, "Arrangement JSON file");
  analyze_cmd->add_option("--catalog", aa.catalog, "Catalog entry name");
  analyze_cmd->add_option("--param", aa.params, "Catalog parameter k=v (repeatable)");
  analyze_cmd->add_option("--report", aa.report, "Output format")->check(CLI::IsMember({"json", "text"}));
  analyze_cmd->add_option("--delta", aa.delta, "Candidate Alexander polynomial, e.g. \"(t-1)^4*(t^4-1)^2\"");
  analyze_cmd->add_option("--tau-method", aa.tau_method, "Global Tjurina number method")
      ->check(CLI::IsMember({"local", "hilbert"}));
  analyze_cmd->add_option("--degree-guard", aa.degree_guard, "Largest degree for the Hilbert method");
  analyze_cmd->add_flag("--force", aa.force, "Run the Hilbert method above the degree guard");
  analyze_cmd->add_flag("--timing", aa.timing, "Record wall time in the report");

  CatalogArgs ca;
  auto* catalog_cmd = app.add_subcommand("catalog", "List or emit catalog arrangements");
  catalog_cmd->require_subcommand(1);
  auto* list_cmd = catalog_cmd->add_subcommand("list", "List entries and their parameters");
  list_cmd->add_option("--report", ca.report, "Output format")->check(CLI::IsMember({"json", "text"}));
  auto* emit_cmd = catalog_cmd->add_subcommand("emit", "Write an entry as arrangement JSON");
  emit_cmd->add_option("name", ca.name, "Entry name")->required();
  emit_cmd->add_option("--param", ca.params, "Parameter k=v (repeatable)");

  SuiteArgs sa;
  auto* suite_cmd = app.add_subcommand("verify-suite", "Run a fixture suite: props4, hesse, degenerations, identities");
  suite_cmd->add_option("suite", sa.name, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  suite_cmd->add_option("--manifest", sa.manifest, "Fixture manifest (defaults to the built-in copy)");
  suite_cmd->add_option("--report", sa.report, "Output format")->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(aa);
    if (*list_cmd) return cmd_catalog_list(ca);
    if (*emit_cmd) return cmd_catalog_emit(ca);
    if (*suite_cmd) return cmd_verify_suite(sa);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const json::exception& e) {
    std::cerr << "json error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return kExitParse;
}
