#include "taxmine/characterize.hpp"

#include <algorithm>

#include "taxmine/errors.hpp"

namespace taxmine {

Formula ValueDisjunction::to_formula() const {
  std::vector<Formula> atoms;
  atoms.reserve(values.size());
  for (const std::string& v : values) atoms.push_back(Formula::atom(attribute, v));
  return Formula::disjunction(std::move(atoms));
}

std::string ValueDisjunction::to_string() const { return to_formula().to_string(); }

bool CharacterizationSet::contains(const ValueDisjunction& element) const {
  return std::find(elements.begin(), elements.end(), element) != elements.end();
}

CharacterizationSet characterize(const DecisionTable& table, const std::string& class_label,
                                 const Rational& delta_kappa) {
  if (delta_kappa <= Rational(0) || delta_kappa > Rational(1)) {
    throw ConfigError("delta_kappa must lie in (0, 1], got " + to_fraction_string(delta_kappa));
  }
  const Extension cls = table.class_extension(class_label);
  if (cls.empty()) throw UndefinedError("class '" + class_label + "' has no cases");
  const auto class_size = static_cast<std::int64_t>(cls.size());

  CharacterizationSet out{class_label, delta_kappa, {}};
  for (const std::size_t attr : table.condition_indices()) {
    const AttributeSchema& schema = table.schema()[attr];

    // Per-value counts within the class.
    std::vector<std::int64_t> counts(schema.domain.size(), 0);
    for (const CaseId id : cls.ids()) {
      ++counts[table.value_index(table.row_of(id), attr)];
    }

    // Greedy accumulation: highest class coverage first, domain order on ties.
    std::vector<std::size_t> order(schema.domain.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return counts[a] > counts[b]; });

    std::vector<bool> picked(schema.domain.size(), false);
    std::int64_t covered = 0;
    for (const std::size_t value_idx : order) {
      if (Rational(covered, class_size) >= delta_kappa) break;
      picked[value_idx] = true;
      covered += counts[value_idx];
    }

    ValueDisjunction element{schema.name, {}};
    for (std::size_t i = 0; i < schema.domain.size(); ++i) {
      if (picked[i]) element.values.push_back(schema.domain[i]);
    }
    // A full-domain disjunction is tautological and is never stored.
    if (element.values.size() < schema.domain.size()) {
      out.elements.push_back(std::move(element));
    }
  }
  return out;
}

namespace {

bool element_subset(const CharacterizationSet& inner, const CharacterizationSet& outer) {
  for (const ValueDisjunction& element : inner.elements) {
    if (!outer.contains(element)) return false;
  }
  return true;
}

}  // namespace

RelationType relation_type(const CharacterizationSet& first, const CharacterizationSet& second) {
  std::size_t shared = 0;
  for (const ValueDisjunction& element : first.elements) {
    if (second.contains(element)) ++shared;
  }
  if (shared == 0) return RelationType::independent;
  if (element_subset(first, second) || element_subset(second, first)) {
    return RelationType::subcategory;
  }
  return RelationType::overlapped;
}

const char* to_string(RelationType type) {
  switch (type) {
    case RelationType::independent:
      return "independent";
    case RelationType::overlapped:
      return "overlapped";
    case RelationType::subcategory:
      return "subcategory";
  }
  return "unknown";
}

}  // namespace taxmine
