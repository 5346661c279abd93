#include "taxmine/pipeline.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "taxmine/emit.hpp"
#include "taxmine/errors.hpp"

namespace taxmine {

namespace {

void validate(const PipelineConfig& config) {
  const auto in_unit = [](const Rational& r) { return r >= Rational(0) && r <= Rational(1); };
  if (config.delta_kappa <= Rational(0) || config.delta_kappa > Rational(1)) {
    throw ConfigError("delta-kappa must lie in (0, 1]");
  }
  if (!in_unit(config.delta_alpha)) throw ConfigError("delta-alpha must lie in [0, 1]");
  if (!in_unit(config.rule_delta_kappa)) throw ConfigError("rule-delta-kappa must lie in [0, 1]");
  if (!in_unit(config.theta_g)) throw ConfigError("theta-g must lie in [0, 1]");
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open input file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::filesystem::path& path, const std::string& content,
                PipelineOutcome& outcome) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write output file '" + path.string() + "'");
  out << content;
  outcome.written.push_back(path);
}

void write_json(const std::filesystem::path& path, const OrderedJson& doc,
                PipelineOutcome& outcome) {
  write_file(path, doc.dump(2) + "\n", outcome);
}

void collect_leaves(const TaxonomyNode& node, std::vector<const TaxonomyNode*>& leaves) {
  if (node.is_leaf()) {
    leaves.push_back(&node);
    return;
  }
  for (const TaxonomyNode& child : node.children) collect_leaves(child, leaves);
}

}  // namespace

PipelineOutcome run_pipeline(const PipelineConfig& config, Stage stage) {
  validate(config);
  const DecisionTable table = DecisionTable::from_csv(read_file(config.input),
                                                      config.class_column);

  PipelineOutcome outcome;
  std::filesystem::create_directories(config.output_dir);
  const auto path_for = [&](const std::string& name) { return config.output_dir / name; };

  // Characterizations of the original classes.
  std::vector<CharacterizationSet> sets;
  for (const std::string& label : table.decision().domain) {
    sets.push_back(characterize(table, label, config.delta_kappa));
  }
  if (stage == Stage::characterize || (stage == Stage::run && config.emit_json)) {
    write_json(path_for("characterizations.json"),
               characterizations_json(sets, config.delta_kappa), outcome);
  }
  if (stage == Stage::characterize) return outcome;

  GroupingConfig grouping_config{config.delta_kappa, config.theta_g, config.measure,
                                 config.single_tree};
  const GroupingResult grouped = group(table, grouping_config);

  if (stage == Stage::similarity) {
    write_json(path_for("matrix_step2.json"), matrix_json(grouped.matrices.front(), config.measure),
               outcome);
    return outcome;
  }

  if ((stage == Stage::group || stage == Stage::run) && config.emit_matrices) {
    for (const MatrixSnapshot& snapshot : grouped.matrices) {
      write_json(path_for("matrix_step" + std::to_string(snapshot.step) + ".json"),
                 matrix_json(snapshot, config.measure), outcome);
    }
  }
  if (stage == Stage::group || (stage == Stage::run && config.emit_trace)) {
    write_json(path_for("trace.json"), trace_json(grouped.trace), outcome);
  }
  if (stage == Stage::group || (stage == Stage::run && config.emit_json)) {
    write_json(path_for("taxonomy.json"), taxonomy_json(grouped.forest, grouping_config), outcome);
  }
  if ((stage == Stage::group || stage == Stage::run) && config.emit_dot) {
    write_file(path_for("taxonomy.dot"), taxonomy_dot(grouped.forest), outcome);
  }
  if (stage == Stage::group) return outcome;

  const RuleSet induced =
      induce_rules(grouped.forest, table, config.delta_alpha, config.rule_delta_kappa);
  const RuleSet retained =
      filter_probabilistic(induced, config.delta_alpha, config.rule_delta_kappa);

  RuleSet excluded;
  excluded.delta_alpha = config.delta_alpha;
  excluded.delta_kappa = config.rule_delta_kappa;
  for (const Rule& rule : induced.rules) {
    const bool kept = std::any_of(retained.rules.begin(), retained.rules.end(),
                                  [&](const Rule& r) { return r.conclusion == rule.conclusion; });
    if (!kept) excluded.rules.push_back(rule);
  }

  for (const Rule& rule : induced.rules) {
    if (rule.degenerate) {
      outcome.warnings.push_back("rule for '" + rule.conclusion +
                                 "' has no discriminating leaf condition");
    }
    if (!rule.accuracy) {
      outcome.warnings.push_back("rule for '" + rule.conclusion + "' has an empty extension");
    }
  }

  if (stage == Stage::induce || (stage == Stage::run && config.emit_json)) {
    write_json(path_for("rules.json"), rules_json(retained, excluded, outcome.warnings), outcome);
    write_file(path_for("rules.txt"), rules_text(retained, excluded), outcome);
  }
  return outcome;
}

}  // namespace taxmine
