#include "taxmine/emit.hpp"

#include <sstream>

#include "taxmine/errors.hpp"

namespace taxmine {

namespace {

void put_ratio(OrderedJson& obj, const std::string& key, const Rational& r) {
  obj[key] = to_fraction_string(r);
  obj[key + "_decimal"] = to_double(r);
}

void put_interval(OrderedJson& obj, const IntervalSimilarity& similarity) {
  put_ratio(obj, "lo", similarity.lo);
  put_ratio(obj, "hi", similarity.hi);
}

OrderedJson element_json(const ValueDisjunction& element) {
  OrderedJson out;
  out["attribute"] = element.attribute;
  out["values"] = element.values;
  return out;
}

ValueDisjunction element_from_json(const OrderedJson& doc) {
  ValueDisjunction out;
  out.attribute = doc.at("attribute").get<std::string>();
  for (const auto& value : doc.at("values")) out.values.push_back(value.get<std::string>());
  return out;
}

OrderedJson node_json(const TaxonomyNode& node) {
  OrderedJson out;
  out["id"] = node.id;
  if (node.merge_similarity) {
    OrderedJson similarity;
    put_interval(similarity, *node.merge_similarity);
    out["merge_similarity"] = similarity;
  }
  out["elements"] = OrderedJson::array();
  for (const ValueDisjunction& element : node.characterization.elements) {
    out["elements"].push_back(element_json(element));
  }
  out["children"] = OrderedJson::array();
  for (const TaxonomyNode& child : node.children) out["children"].push_back(node_json(child));
  return out;
}

TaxonomyNode node_from_json(const OrderedJson& doc, const Rational& delta_kappa) {
  TaxonomyNode node;
  node.id = doc.at("id").get<std::string>();
  node.characterization.label = node.id;
  node.characterization.kappa_threshold = delta_kappa;
  for (const auto& element : doc.at("elements")) {
    node.characterization.elements.push_back(element_from_json(element));
  }
  if (doc.contains("merge_similarity")) {
    const auto& similarity = doc.at("merge_similarity");
    node.merge_similarity =
        IntervalSimilarity{parse_ratio(similarity.at("lo").get<std::string>()),
                           parse_ratio(similarity.at("hi").get<std::string>())};
  }
  for (const auto& child : doc.at("children")) {
    node.children.push_back(node_from_json(child, delta_kappa));
  }
  return node;
}

OrderedJson rule_json(const Rule& rule) {
  OrderedJson out;
  out["class"] = rule.conclusion;
  out["condition"] = formula_json(rule.condition);
  out["condition_text"] = rule.condition.to_string();
  if (rule.accuracy) {
    put_ratio(out, "accuracy", *rule.accuracy);
  } else {
    out["accuracy"] = nullptr;
    out["accuracy_decimal"] = nullptr;
  }
  put_ratio(out, "coverage", rule.coverage);
  out["degenerate"] = rule.degenerate;
  out["derivation"] = OrderedJson::array();
  for (const SubruleRecord& record : rule.derivation) {
    OrderedJson step;
    step["level"] = record.level_id;
    step["sibling"] = record.sibling_id;
    step["formula"] = formula_json(record.formula);
    step["formula_text"] = record.formula.to_string();
    out["derivation"].push_back(step);
  }
  return out;
}

std::string quote_dot(const std::string& text) {
  std::string out = "\"";
  for (const char ch : text) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  out += "\"";
  return out;
}

void dot_node(const TaxonomyNode& node, std::ostringstream& out) {
  if (node.is_leaf()) {
    out << "  " << quote_dot(node.id) << " [shape=box];\n";
    return;
  }
  out << "  " << quote_dot(node.id) << ";\n";
  for (const TaxonomyNode& child : node.children) dot_node(child, out);
  const std::string label =
      node.merge_similarity ? node.merge_similarity->to_string() : std::string{};
  for (const TaxonomyNode& child : node.children) {
    out << "  " << quote_dot(child.id) << " -> " << quote_dot(node.id);
    if (!label.empty()) out << " [label=" << quote_dot(label) << "]";
    out << ";\n";
  }
}

void append_rule_text(const Rule& rule, std::string& out) {
  out += rule.conclusion;
  out += " <- ";
  out += rule.condition.to_string();
  out += "   (accuracy ";
  out += rule.accuracy ? to_fraction_string(*rule.accuracy) : std::string("undefined");
  out += ", coverage ";
  out += to_fraction_string(rule.coverage);
  out += ")";
  if (rule.degenerate) out += "  [degenerate]";
  out += "\n";
}

}  // namespace

OrderedJson formula_json(const Formula& f) {
  OrderedJson out;
  switch (f.kind()) {
    case Formula::Kind::True:
      out["kind"] = "true";
      return out;
    case Formula::Kind::False:
      out["kind"] = "false";
      return out;
    case Formula::Kind::Atom:
      out["kind"] = "atom";
      out["attribute"] = f.descriptor().attribute;
      out["value"] = f.descriptor().value;
      return out;
    case Formula::Kind::Not:
      out["kind"] = "not";
      out["operand"] = formula_json(f.operand());
      return out;
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      out["kind"] = f.kind() == Formula::Kind::And ? "and" : "or";
      out["operands"] = OrderedJson::array();
      for (const Formula& part : f.operands()) out["operands"].push_back(formula_json(part));
      return out;
    }
  }
  return out;
}

OrderedJson characterizations_json(std::span<const CharacterizationSet> sets,
                                   const Rational& delta_kappa) {
  OrderedJson out;
  put_ratio(out, "delta_kappa", delta_kappa);
  out["classes"] = OrderedJson::array();
  for (const CharacterizationSet& set : sets) {
    OrderedJson entry;
    entry["class"] = set.label;
    entry["elements"] = OrderedJson::array();
    for (const ValueDisjunction& element : set.elements) {
      entry["elements"].push_back(element_json(element));
    }
    out["classes"].push_back(entry);
  }
  return out;
}

OrderedJson matrix_json(const MatrixSnapshot& snapshot, SimilarityMeasure measure) {
  OrderedJson out;
  out["step"] = snapshot.step;
  out["measure"] = to_string(measure);
  out["groups"] = snapshot.groups;
  out["cells"] = OrderedJson::array();
  for (const MatrixCell& cell : snapshot.cells) {
    OrderedJson entry;
    entry["left"] = cell.left;
    entry["right"] = cell.right;
    entry["a"] = cell.counts.a;
    entry["b"] = cell.counts.b;
    entry["c"] = cell.counts.c;
    entry["d"] = cell.counts.d;
    if (measure == SimilarityMeasure::interval) {
      put_interval(entry, cell.interval);
    } else if (cell.value) {
      entry["value"] = *cell.value;
    } else {
      entry["value"] = nullptr;
    }
    out["cells"].push_back(entry);
  }
  return out;
}

OrderedJson trace_json(std::span<const MergeRecord> trace) {
  OrderedJson out;
  out["merges"] = OrderedJson::array();
  for (const MergeRecord& record : trace) {
    OrderedJson entry;
    entry["left"] = record.left;
    entry["right"] = record.right;
    OrderedJson similarity;
    put_interval(similarity, record.similarity);
    entry["similarity"] = similarity;
    entry["id"] = record.id;
    out["merges"].push_back(entry);
  }
  return out;
}

OrderedJson taxonomy_json(std::span<const TaxonomyNode> forest, const GroupingConfig& config) {
  OrderedJson out;
  put_ratio(out, "delta_kappa", config.delta_kappa);
  put_ratio(out, "theta_g", config.theta_g);
  out["measure"] = to_string(config.measure);
  out["single_tree"] = config.single_tree;
  out["roots"] = OrderedJson::array();
  for (const TaxonomyNode& root : forest) out["roots"].push_back(node_json(root));
  return out;
}

std::vector<TaxonomyNode> taxonomy_from_json(const OrderedJson& doc) {
  const Rational delta_kappa = parse_ratio(doc.at("delta_kappa").get<std::string>());
  std::vector<TaxonomyNode> forest;
  for (const auto& root : doc.at("roots")) forest.push_back(node_from_json(root, delta_kappa));
  return forest;
}

OrderedJson rules_json(const RuleSet& retained, const RuleSet& excluded,
                       std::span<const std::string> warnings) {
  OrderedJson out;
  put_ratio(out, "delta_alpha", retained.delta_alpha);
  put_ratio(out, "delta_kappa", retained.delta_kappa);
  out["rules"] = OrderedJson::array();
  for (const Rule& rule : retained.rules) out["rules"].push_back(rule_json(rule));
  out["excluded"] = OrderedJson::array();
  for (const Rule& rule : excluded.rules) out["excluded"].push_back(rule_json(rule));
  out["warnings"] = OrderedJson::array();
  for (const std::string& warning : warnings) out["warnings"].push_back(warning);
  return out;
}

std::string rules_text(const RuleSet& retained, const RuleSet& excluded) {
  std::string out = "# rules retained at delta_alpha = " + to_fraction_string(retained.delta_alpha) +
                    ", delta_kappa = " + to_fraction_string(retained.delta_kappa) + "\n";
  for (const Rule& rule : retained.rules) append_rule_text(rule, out);
  if (!excluded.rules.empty()) {
    out += "# excluded by thresholds\n";
    for (const Rule& rule : excluded.rules) append_rule_text(rule, out);
  }
  return out;
}

std::string taxonomy_dot(std::span<const TaxonomyNode> forest) {
  std::ostringstream out;
  out << "digraph taxonomy {\n";
  out << "  rankdir=BT;\n";
  for (const TaxonomyNode& root : forest) dot_node(root, out);
  out << "}\n";
  return out.str();
}

}  // namespace taxmine
