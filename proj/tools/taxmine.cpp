#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "taxmine/pipeline.hpp"

namespace {

struct RawOptions {
  std::string input;
  std::string class_column;
  std::string delta_kappa = "1";
  std::string delta_alpha = "0.75";
  std::string rule_delta_kappa = "0.5";
  std::string theta_g = "0";
  std::string measure = "interval";
  bool single_tree = true;
  std::string output_dir = ".";
  bool emit_matrices = true;
  bool emit_dot = true;
  bool emit_json = true;
  bool emit_trace = true;
};

void add_options(CLI::App& cmd, RawOptions& raw) {
  cmd.add_option("-i,--input", raw.input, "CSV decision table")->required();
  cmd.add_option("--class-column", raw.class_column,
                 "Decision attribute (default: last non-id column)");
  cmd.add_option("--delta-kappa", raw.delta_kappa,
                 "Coverage threshold for characterization sets, in (0, 1]");
  cmd.add_option("--delta-alpha", raw.delta_alpha, "Accuracy threshold for retained rules");
  cmd.add_option("--rule-delta-kappa", raw.rule_delta_kappa,
                 "Coverage threshold for retained rules");
  cmd.add_option("--theta-g", raw.theta_g, "Similarity threshold for grouping");
  cmd.add_option("--measure", raw.measure,
                 "interval, matching, jaccard, chi2, point_correlation, kulczynski, ochiai, "
                 "simpson or braun");
  cmd.add_flag("--single-tree,!--no-single-tree", raw.single_tree,
               "Join remaining roots into one tree with zero-similarity merges");
  cmd.add_option("-o,--output-dir", raw.output_dir, "Directory for emitted artifacts");
  cmd.add_flag("--emit-matrices,!--no-emit-matrices", raw.emit_matrices,
               "Write matrix_step<k>.json per grouping step");
  cmd.add_flag("--emit-dot,!--no-emit-dot", raw.emit_dot, "Write taxonomy.dot");
  cmd.add_flag("--emit-json,!--no-emit-json", raw.emit_json,
               "Write characterizations/taxonomy/rules JSON");
  cmd.add_flag("--emit-trace,!--no-emit-trace", raw.emit_trace, "Write trace.json");
  cmd.set_config("--config", "", "Read options from a key = value file");
}

taxmine::PipelineConfig to_config(const RawOptions& raw) {
  taxmine::PipelineConfig config;
  config.input = raw.input;
  if (!raw.class_column.empty()) config.class_column = raw.class_column;
  config.delta_kappa = taxmine::parse_ratio(raw.delta_kappa);
  config.delta_alpha = taxmine::parse_ratio(raw.delta_alpha);
  config.rule_delta_kappa = taxmine::parse_ratio(raw.rule_delta_kappa);
  config.theta_g = taxmine::parse_ratio(raw.theta_g);
  const auto measure = taxmine::similarity_measure_from_name(raw.measure);
  if (!measure) throw taxmine::ConfigError("unknown measure '" + raw.measure + "'");
  config.measure = *measure;
  config.single_tree = raw.single_tree;
  config.output_dir = raw.output_dir;
  config.emit_matrices = raw.emit_matrices;
  config.emit_dot = raw.emit_dot;
  config.emit_json = raw.emit_json;
  config.emit_trace = raw.emit_trace;
  return config;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rough-set taxonomy mining: characterization sets, interval similarity, "
               "agglomerative grouping and multi-stage rule induction"};
  app.require_subcommand(1);

  struct StageCommand {
    const char* name;
    const char* description;
    taxmine::Stage stage;
  };
  const StageCommand commands[] = {
      {"characterize", "Write per-class characterization sets", taxmine::Stage::characterize},
      {"similarity", "Write the initial pairwise similarity matrix", taxmine::Stage::similarity},
      {"group", "Mine the taxonomy and write trace, matrices and tree", taxmine::Stage::group},
      {"induce", "Induce multi-stage rules down the taxonomy", taxmine::Stage::induce},
      {"run", "Run the full pipeline", taxmine::Stage::run},
  };

  RawOptions raw;
  taxmine::Stage selected = taxmine::Stage::run;
  for (const StageCommand& command : commands) {
    CLI::App* sub = app.add_subcommand(command.name, command.description);
    add_options(*sub, raw);
    sub->callback([&selected, stage = command.stage] { selected = stage; });
  }

  CLI11_PARSE(app, argc, argv);

  try {
    const taxmine::PipelineOutcome outcome = taxmine::run_pipeline(to_config(raw), selected);
    for (const auto& path : outcome.written) std::cout << path.string() << "\n";
    for (const std::string& warning : outcome.warnings) {
      std::cerr << "warning: " << warning << "\n";
    }
  } catch (const taxmine::Error& error) {
    std::cerr << "taxmine: " << error.what() << "\n";
    return 1;
  }
  return 0;
}
