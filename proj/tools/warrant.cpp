// Command-line front end: run a scenario, report statuses, export graphs.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "warrant/report.hpp"
#include "warrant/schemas.hpp"

namespace {

int run(const std::string& path, const std::string& graph, bool json,
        const warrant::RunOptions& opts) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot open " << path << "\n";
    return 1;
  }
  std::stringstream text;
  text << in.rdbuf();

  warrant::Scenario scenario;
  try {
    scenario = warrant::load_scenario(text.str());
  } catch (const warrant::DslError& e) {
    std::cerr << path << ":" << e.line() << ":" << e.column() << ": "
              << e.what() << "\n";
    return 1;
  }

  warrant::RunResult result = warrant::run_scenario(scenario, opts);
  std::cout << (json ? warrant::format_json(result) : warrant::format_text(result));

  if (!graph.empty()) {
    std::ofstream out(graph);
    if (!out) {
      std::cerr << "cannot write " << graph << "\n";
      return 1;
    }
    out << warrant::export_dot(result.engine->graph(),
                               result.analysis ? &*result.analysis : nullptr);
  }
  const auto& rep = result.report;
  return rep.budget_exhausted || rep.enumeration_error ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Defeasible reasoner over percepts, premises and reason-schemas"};
  app.require_subcommand(0, 1);

  bool print_schemas = false;
  app.add_flag("--schemas", print_schemas, "Print the built-in reason-schemas");

  auto* run_cmd = app.add_subcommand("run", "Run a scenario file");
  std::string file, graph;
  bool json = false, trace = false;
  std::size_t budget = 0;
  double decay = 0.0;
  run_cmd->add_option("file", file, "Scenario (.osc)")->required();
  run_cmd->add_option("--graph", graph, "Write the inference graph in dot format");
  run_cmd->add_flag("--json", json, "Structured report");
  auto* budget_opt = run_cmd->add_option("--budget", budget, "Step budget")->check(CLI::PositiveNumber);
  auto* decay_opt = run_cmd->add_option("--decay", decay, "Temporal decay")
                        ->check(CLI::Range(0.0, 1.0));
  run_cmd->add_flag("--trace", trace, "Log each queue step to stderr");

  auto* schemas_cmd = app.add_subcommand("schemas", "Print the built-in reason-schemas");

  CLI11_PARSE(app, argc, argv);

  if (print_schemas || schemas_cmd->parsed()) {
    std::cout << warrant::builtin_library_text();
    return 0;
  }
  if (!run_cmd->parsed()) {
    std::cout << app.help();
    return 1;
  }

  warrant::RunOptions opts;
  if (budget_opt->count()) opts.budget = budget;
  if (decay_opt->count()) {
    if (decay <= 0.0 || decay >= 1.0) {
      std::cerr << "--decay must lie strictly between 0 and 1\n";
      return 1;
    }
    opts.decay = decay;
  }
  if (trace) opts.trace = [](const std::string& s) { std::cerr << s << "\n"; };
  return run(file, graph, json, opts);
}
