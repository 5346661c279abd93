#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "taxmine/grouping.hpp"

namespace taxmine {

enum class Stage { characterize, similarity, group, induce, run };

struct PipelineConfig {
  std::filesystem::path input;
  std::optional<std::string> class_column;

  Rational delta_kappa{1};        // characterization coverage threshold
  Rational delta_alpha{3, 4};     // rule accuracy threshold
  Rational rule_delta_kappa{1, 2};  // rule coverage threshold
  Rational theta_g{0};            // grouping threshold

  SimilarityMeasure measure = SimilarityMeasure::interval;
  bool single_tree = true;

  std::filesystem::path output_dir = ".";
  bool emit_matrices = true;
  bool emit_dot = true;
  bool emit_json = true;
  bool emit_trace = true;
};

struct PipelineOutcome {
  std::vector<std::filesystem::path> written;
  std::vector<std::string> warnings;
};

/// Runs ingest -> characterize -> similarity -> group -> induce and
/// writes the stage's artifacts under the output directory. Throws
/// taxmine::Error subclasses on parse or configuration problems;
/// degenerate-rule conditions become warnings, not errors.
PipelineOutcome run_pipeline(const PipelineConfig& config, Stage stage = Stage::run);

}  // namespace taxmine
