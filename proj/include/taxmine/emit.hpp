#pragma once

#include <json.hpp>

#include <span>
#include <string>
#include <vector>

#include "taxmine/induction.hpp"

namespace taxmine {

/// Insertion-ordered JSON keeps emitted documents byte-stable.
using OrderedJson = nlohmann::ordered_json;

OrderedJson formula_json(const Formula& f);

OrderedJson characterizations_json(std::span<const CharacterizationSet> sets,
                                   const Rational& delta_kappa);

/// Upper-triangular live similarity matrix for one grouping step.
/// Interval cells carry reduced rational strings with decimal
/// convenience fields; single-valued cells carry a plain value.
OrderedJson matrix_json(const MatrixSnapshot& snapshot, SimilarityMeasure measure);

OrderedJson trace_json(std::span<const MergeRecord> trace);

OrderedJson taxonomy_json(std::span<const TaxonomyNode> forest, const GroupingConfig& config);

/// Rebuilds a taxonomy forest from taxonomy_json output.
std::vector<TaxonomyNode> taxonomy_from_json(const OrderedJson& doc);

OrderedJson rules_json(const RuleSet& retained, const RuleSet& excluded,
                       std::span<const std::string> warnings);

std::string rules_text(const RuleSet& retained, const RuleSet& excluded);

/// Bottom-up dendrogram in DOT format; edges are labelled with the
/// merge similarity of the parent they enter.
std::string taxonomy_dot(std::span<const TaxonomyNode> forest);

}  // namespace taxmine
