#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "taxmine/similarity.hpp"

namespace taxmine {

/// Similarity driving pair selection: the interval measure or one of
/// the eight single-valued coefficients.
enum class SimilarityMeasure {
  interval,
  matching,
  jaccard,
  chi2,
  point_correlation,
  kulczynski,
  ochiai,
  simpson,
  braun,
};

const char* to_string(SimilarityMeasure measure);
std::optional<SimilarityMeasure> similarity_measure_from_name(std::string_view name);

struct GroupingConfig {
  Rational delta_kappa{1};
  /// Merge threshold applied to the interval maximum (Simpson side) or
  /// to the raw value of a single-valued measure.
  Rational theta_g{0};
  SimilarityMeasure measure = SimilarityMeasure::interval;
  /// When set, remaining roots are joined pairwise under synthetic
  /// nodes with similarity [0, 0] once no similar pair is left. Those
  /// joins are themselves subject to theta_g.
  bool single_tree = false;
};

/// Node of the mined taxonomy. Internal nodes carry exactly two
/// children in merge-record order and a characterization equal to the
/// intersection of the children's element sets.
struct TaxonomyNode {
  std::string id;
  CharacterizationSet characterization;
  std::vector<TaxonomyNode> children;
  std::optional<IntervalSimilarity> merge_similarity;

  bool is_leaf() const { return children.empty(); }
};

struct MergeRecord {
  std::string left;
  std::string right;
  IntervalSimilarity similarity;
  std::string id;

  friend bool operator==(const MergeRecord&, const MergeRecord&) = default;
};

/// One upper-triangular cell of a live pairwise similarity matrix.
/// `interval` is [0, 0] whenever the pair shares no element or either
/// side is empty; `value` is set for single-valued measures and absent
/// when the measure is undefined on the pair.
struct MatrixCell {
  std::string left;
  std::string right;
  ContingencyCounts counts;
  IntervalSimilarity interval;
  std::optional<double> value;
};

struct MatrixSnapshot {
  int step = 0;
  std::vector<std::string> groups;
  std::vector<MatrixCell> cells;
};

struct GroupingResult {
  std::vector<TaxonomyNode> forest;
  std::vector<MergeRecord> trace;
  std::vector<MatrixSnapshot> matrices;
};

/// Elements shared by both sets, labelled as the new group.
CharacterizationSet intersect_characterizations(const CharacterizationSet& first,
                                                const CharacterizationSet& second,
                                                std::string new_label);

/// Agglomerative taxonomy construction: starting from one leaf per
/// class, repeatedly merges the most similar pair of live groups (at
/// least one shared element, representative similarity >= theta_g)
/// into a synthetic group D<k>, characterized by element intersection.
/// Snapshots of the live matrix are taken before every step, numbered
/// from 2. Throws ConfigError with fewer than two classes.
GroupingResult group(const DecisionTable& table, const GroupingConfig& config = {});

}  // namespace taxmine
