#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "taxmine/grouping.hpp"

namespace taxmine {

/// One discrimination step of a rule: the taxonomy level it was taken
/// at, the off-path sibling it discriminates against, and the formula
/// contributed to the rule condition.
struct SubruleRecord {
  std::string level_id;
  std::string sibling_id;
  Formula formula;
};

struct Rule {
  Formula condition;  // simplified, negation-free NNF
  std::string conclusion;
  std::optional<Rational> accuracy;  // absent when the extension is empty
  Rational coverage{0};
  std::vector<SubruleRecord> derivation;
  bool degenerate = false;
};

struct RuleSet {
  std::vector<Rule> rules;
  Rational delta_alpha{0};
  Rational delta_kappa{0};
};

/// Disjunction of the negations of a set's elements; rejecting any one
/// element rejects the group the set characterizes.
Formula negate_characterization(const CharacterizationSet& set);

struct Discrimination {
  Formula condition;
  bool degenerate = false;
};

/// Leaf-level discrimination: conjoins `own`'s value disjunction for
/// every attribute where both siblings carry elements with disjoint
/// value sets. Falls back to TRUE (degenerate) when no such attribute
/// exists.
Discrimination discriminate_within(const CharacterizationSet& own,
                                   const CharacterizationSet& sibling);

/// Rewrites a formula into an extensionally equal, negation-free form
/// over the schema's domains: negations become value complements,
/// same-attribute disjunctions collapse, and fixed constraints within a
/// conjunction delete contradicted disjuncts and absorb entailed ones.
Formula simplify(const Formula& f, const Schema& schema);

/// Builds the multi-stage rule for one leaf class by walking its root
/// path. At a node merged as (left, right), paths into the left child
/// conjoin the negated characterization of the right sibling and paths
/// into the right child conjoin the right child's own characterization
/// conjunction; at the leaf's parent a leaf sibling is handled by
/// discriminate_within instead.
Rule build_rule(const std::string& leaf_label, std::span<const TaxonomyNode> forest,
                const DecisionTable& table);

/// Rules for every leaf class of the forest, in decision-domain order.
/// Thresholds are recorded, not applied; see filter_probabilistic.
RuleSet induce_rules(std::span<const TaxonomyNode> forest, const DecisionTable& table,
                     const Rational& delta_alpha, const Rational& delta_kappa);

/// Keeps the rules with accuracy >= delta_alpha and coverage >=
/// delta_kappa. A rule with an undefined accuracy (empty extension)
/// passes the accuracy bound only when delta_alpha is zero.
RuleSet filter_probabilistic(const RuleSet& rules, const Rational& delta_alpha,
                             const Rational& delta_kappa);

}  // namespace taxmine
