#pragma once

#include <string>
#include <vector>

#include "taxmine/rational.hpp"
#include "taxmine/table.hpp"

namespace taxmine {

/// Single-attribute value disjunction, e.g. ([loc = ocular] v [loc = whole]).
/// Values are kept in the attribute's domain order. Two elements are
/// equal only when attribute and value set coincide; a single-value
/// element and a wider disjunction over the same attribute are distinct.
struct ValueDisjunction {
  std::string attribute;
  std::vector<std::string> values;

  Formula to_formula() const;
  std::string to_string() const;

  friend bool operator==(const ValueDisjunction&, const ValueDisjunction&) = default;
};

/// The elements characterizing one class (or merged group) at a given
/// coverage threshold: at most one element per attribute, in schema order.
struct CharacterizationSet {
  std::string label;
  Rational kappa_threshold{1};
  std::vector<ValueDisjunction> elements;

  bool contains(const ValueDisjunction& element) const;
  std::size_t size() const { return elements.size(); }
  bool empty() const { return elements.empty(); }
};

/// Builds the characterization set of a class. For each condition
/// attribute, values are accumulated in descending per-value class
/// coverage (ties broken by domain order) until the cumulative coverage
/// reaches delta_kappa; the element is kept only when its value set is
/// a proper subset of the attribute's domain. With delta_kappa = 1 this
/// reduces to the set of values observed in the class's rows.
CharacterizationSet characterize(const DecisionTable& table, const std::string& class_label,
                                 const Rational& delta_kappa);

enum class RelationType { independent, overlapped, subcategory };

/// Classifies two characterization sets: independent when they share no
/// element, subcategory when one element set contains the other,
/// overlapped otherwise.
RelationType relation_type(const CharacterizationSet& first, const CharacterizationSet& second);

const char* to_string(RelationType type);

}  // namespace taxmine
