#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "aomdd/compile.hpp"
#include "aomdd/dot.hpp"
#include "aomdd/generators.hpp"
#include "aomdd/graph.hpp"
#include "aomdd/pseudo_tree.hpp"
#include "aomdd/query.hpp"
#include "aomdd/uai.hpp"

namespace {

struct RunConfig {
  std::string input_path;
  std::string evidence_path;
  std::string order_path;
  std::string tree_path;
  std::string method = "both";          // ve | search | both
  std::string heuristic = "min-fill";   // min-fill | min-fill-random
  bool no_redundancy_reduction = false;
  int epsilon_digits = 12;
  std::string dot_path;
  std::string stats_path;
  unsigned seed = 0;
};

struct Instance {
  aomdd::GraphicalModel model;
  std::shared_ptr<const aomdd::PseudoTree> tree;
  std::size_t evidence_count = 0;
  std::string name;
  double tree_seconds = 0.0;  // ordering + pseudo tree construction
};

void add_model_options(CLI::App* cmd, RunConfig& config) {
  cmd->add_option("input", config.input_path, "UAI model file")->required();
  cmd->add_option("--evidence", config.evidence_path, "evidence file");
  cmd->add_option("--order-file", config.order_path,
                  "elimination ordering file (one variable index per line)");
  cmd->add_option("--tree-file", config.tree_path,
                  "pseudo tree file (\"var parent ...\" lines)");
  cmd->add_option("--heuristic", config.heuristic, "ordering heuristic")
      ->check(CLI::IsMember({"min-fill", "min-fill-random"}));
  cmd->add_flag("--no-redundancy-reduction", config.no_redundancy_reduction,
                "keep redundant meta-nodes (isomorphism merging only)");
  cmd->add_option("--epsilon-digits", config.epsilon_digits,
                  "significant decimal digits for weight quantization");
  cmd->add_option("--seed", config.seed, "seed for randomized tie-breaking");
}

Instance load_instance(const RunConfig& config) {
  aomdd::GraphicalModel model = aomdd::parse_uai_file(config.input_path);
  std::size_t evidence_count = 0;
  if (!config.evidence_path.empty()) {
    const auto evidence = aomdd::parse_evidence_file(config.evidence_path);
    evidence_count = evidence.size();
    model = aomdd::with_evidence(model, evidence);
  }
  const auto tree_start = std::chrono::steady_clock::now();
  const aomdd::PrimalGraph graph = aomdd::primal_graph(model);
  aomdd::PseudoTree tree = [&] {
    if (!config.tree_path.empty()) {
      std::ifstream in(config.tree_path);
      if (!in) throw aomdd::Error("cannot open '" + config.tree_path + "'");
      return aomdd::parse_pseudo_tree(in, graph);
    }
    aomdd::Ordering order;
    if (!config.order_path.empty()) {
      std::ifstream in(config.order_path);
      if (!in) throw aomdd::Error("cannot open '" + config.order_path + "'");
      order = aomdd::parse_ordering(in, model.num_variables());
    } else {
      order = aomdd::min_fill_ordering(graph, config.seed,
                                       config.heuristic == "min-fill-random");
    }
    return aomdd::pseudo_tree_from_ordering(graph, order);
  }();

  const double tree_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - tree_start)
          .count();

  std::string name = config.input_path;
  if (const auto slash = name.find_last_of('/'); slash != std::string::npos) {
    name = name.substr(slash + 1);
  }
  return Instance{std::move(model),
                  std::make_shared<const aomdd::PseudoTree>(std::move(tree)),
                  evidence_count, std::move(name), tree_seconds};
}

aomdd::StoreOptions store_options(const RunConfig& config) {
  return {config.epsilon_digits, !config.no_redundancy_reduction};
}

std::string stats_row(const Instance& instance, const std::string& method,
                      const aomdd::CompileStats& stats, double seconds) {
  const aomdd::GraphicalModel& model = instance.model;
  int dmax = 0;
  for (int v = 0; v < model.num_variables(); ++v) {
    dmax = std::max(dmax, model.domain_size(v));
  }
  std::ostringstream row;
  row << instance.name << "," << method << "," << model.num_variables() << "," << dmax
      << "," << instance.evidence_count << "," << stats.induced_width << ","
      << stats.tree_height << ",";
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.2f", 100.0 * model.zero_fraction());
  row << buffer << ",";
  std::snprintf(buffer, sizeof buffer, "%.3f", seconds);
  row << buffer << "," << stats.cm_or_nodes << "," << stats.aomdd_meta_nodes << ",";
  std::snprintf(buffer, sizeof buffer, "%.4g", stats.ratio);
  row << buffer;
  return row.str();
}

constexpr const char* kStatsHeader =
    "instance,method,n,dmax,e,w,h,zeros_pct,time_sec,cm,aomdd,ratio";

int run_compile(const RunConfig& config) {
  const Instance instance = load_instance(config);
  const aomdd::StoreOptions options = store_options(config);

  std::optional<aomdd::CompileResult> result;
  std::string method = config.method;
  double seconds = instance.tree_seconds;  // reported time covers tree + compile
  if (config.method == "both") {
    aomdd::PipelineReport report =
        aomdd::compare_pipelines(instance.model, instance.tree, options);
    seconds += report.ve.stats.wall_seconds + report.search.stats.wall_seconds;
    if (!report.match) {
      std::cerr << "pipeline mismatch: " << report.mismatch << "\n";
      return 2;
    }
    report.search.stats.wall_seconds = seconds;
    result.emplace(std::move(report.search));
  } else if (config.method == "ve") {
    result.emplace(aomdd::compile_ve(instance.model, instance.tree, options));
    seconds += result->stats.wall_seconds;
  } else {
    result.emplace(aomdd::compile_search(instance.model, instance.tree, options));
    seconds += result->stats.wall_seconds;
  }

  const std::string row = stats_row(instance, method, result->stats, seconds);
  std::cout << kStatsHeader << "\n" << row << "\n";
  if (!config.stats_path.empty()) {
    std::ofstream out(config.stats_path);
    if (!out) throw aomdd::Error("cannot write '" + config.stats_path + "'");
    out << kStatsHeader << "\n" << row << "\n";
  }
  if (!config.dot_path.empty()) {
    std::ofstream out(config.dot_path);
    if (!out) throw aomdd::Error("cannot write '" + config.dot_path + "'");
    aomdd::write_dot(result->diagram, out);
  }
  return 0;
}

int run_eval(const RunConfig& config, const std::string& assignment_path) {
  const Instance instance = load_instance(config);
  std::ifstream in(assignment_path);
  if (!in) throw aomdd::Error("cannot open '" + assignment_path + "'");
  const aomdd::Assignment assignment = aomdd::parse_assignment(in, instance.model);

  const aomdd::StoreOptions options = store_options(config);
  const aomdd::CompileResult result =
      config.method == "ve" ? aomdd::compile_ve(instance.model, instance.tree, options)
                            : aomdd::compile_search(instance.model, instance.tree, options);
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.17g",
                aomdd::eval_assignment(result.diagram, assignment));
  std::cout << buffer << "\n";
  return 0;
}

int run_gen_grid(int rows, int cols, unsigned seed, double zero_fraction,
                 const std::string& output_path) {
  const aomdd::GraphicalModel model =
      aomdd::generate_grid(rows, cols, seed, zero_fraction);
  if (output_path.empty() || output_path == "-") {
    aomdd::write_uai(model, std::cout);
    return 0;
  }
  std::ofstream out(output_path);
  if (!out) throw aomdd::Error("cannot write '" + output_path + "'");
  aomdd::write_uai(model, out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weighted AND/OR multi-valued decision diagram compiler"};
  app.require_subcommand(1);

  RunConfig config;
  CLI::App* compile = app.add_subcommand("compile", "compile a model and report stats");
  add_model_options(compile, config);
  compile->add_option("--method", config.method, "compilation pipeline")
      ->check(CLI::IsMember({"ve", "search", "both"}));
  compile->add_option("--dot", config.dot_path, "write the diagram in DOT format");
  compile->add_option("--stats", config.stats_path, "write the stats row as CSV");

  RunConfig eval_config;
  eval_config.method = "search";
  std::string assignment_path;
  CLI::App* eval = app.add_subcommand("eval", "evaluate one full assignment");
  add_model_options(eval, eval_config);
  eval->add_option("assignment", assignment_path, "assignment file (\"var value\" lines)")
      ->required();
  eval->add_option("--method", eval_config.method, "compilation pipeline")
      ->check(CLI::IsMember({"ve", "search"}));

  int rows = 0, cols = 0;
  unsigned grid_seed = 0;
  double zero_fraction = 0.0;
  std::string output_path;
  CLI::App* gen = app.add_subcommand("gen-grid", "generate a random grid model");
  gen->add_option("rows", rows, "grid rows")->required();
  gen->add_option("cols", cols, "grid columns")->required();
  gen->add_option("--seed", grid_seed, "generator seed");
  gen->add_option("--zero-fraction", zero_fraction, "share of entries forced to 0");
  gen->add_option("-o,--output", output_path, "output UAI path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (compile->parsed()) return run_compile(config);
    if (eval->parsed()) return run_eval(eval_config, assignment_path);
    if (gen->parsed()) return run_gen_grid(rows, cols, grid_seed, zero_fraction, output_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
