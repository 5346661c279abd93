#include "taxmine/induction.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "taxmine/errors.hpp"

namespace taxmine {

Formula negate_characterization(const CharacterizationSet& set) {
  if (set.empty()) {
    throw UndefinedError("cannot negate the empty characterization of '" + set.label + "'");
  }
  std::vector<Formula> terms;
  terms.reserve(set.size());
  for (const ValueDisjunction& element : set.elements) {
    terms.push_back(Formula::negation(element.to_formula()));
  }
  return Formula::disjunction(std::move(terms));
}

Discrimination discriminate_within(const CharacterizationSet& own,
                                   const CharacterizationSet& sibling) {
  std::vector<Formula> parts;
  for (const ValueDisjunction& mine : own.elements) {
    for (const ValueDisjunction& theirs : sibling.elements) {
      if (mine.attribute != theirs.attribute) continue;
      const bool disjoint = std::none_of(
          mine.values.begin(), mine.values.end(), [&](const std::string& value) {
            return std::find(theirs.values.begin(), theirs.values.end(), value) !=
                   theirs.values.end();
          });
      if (disjoint) parts.push_back(mine.to_formula());
    }
  }
  if (parts.empty()) return {Formula::constant(true), true};
  return {Formula::conjunction(std::move(parts)), false};
}

// ---------------------------------------------------------------------------
// Simplification works on a constraint tree: leaves are per-attribute
// value masks, negation is eliminated up front by complementing masks.

namespace {

using Mask = std::vector<bool>;

bool mask_empty(const Mask& m) { return std::none_of(m.begin(), m.end(), [](bool b) { return b; }); }
bool mask_full(const Mask& m) { return std::all_of(m.begin(), m.end(), [](bool b) { return b; }); }

// every value of s allowed by t
bool mask_subset(const Mask& s, const Mask& t) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] && !t[i]) return false;
  }
  return true;
}

bool mask_disjoint(const Mask& s, const Mask& t) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] && t[i]) return false;
  }
  return true;
}

Mask mask_and(const Mask& s, const Mask& t) {
  Mask out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out[i] = s[i] && t[i];
  return out;
}

Mask mask_or(const Mask& s, const Mask& t) {
  Mask out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out[i] = s[i] || t[i];
  return out;
}

struct CNode {
  enum class Kind { True, False, Leaf, And, Or };
  Kind kind = Kind::True;
  std::size_t attr = 0;  // Leaf
  Mask mask;             // Leaf
  std::vector<CNode> kids;

  static CNode constant(bool truth) { return {truth ? Kind::True : Kind::False, 0, {}, {}}; }
  static CNode leaf(std::size_t attr, Mask mask) {
    return {Kind::Leaf, attr, std::move(mask), {}};
  }

  friend bool operator==(const CNode&, const CNode&) = default;
};

using Context = std::map<std::size_t, Mask>;

std::size_t schema_index(const Schema& schema, const std::string& name) {
  for (std::size_t i = 0; i < schema.size(); ++i) {
    if (schema[i].name == name) return i;
  }
  throw EvalError("unknown attribute '" + name + "'");
}

// Negation normal form with complemented masks instead of Not nodes.
CNode to_cnode(const Formula& f, bool negated, const Schema& schema) {
  switch (f.kind()) {
    case Formula::Kind::True:
      return CNode::constant(!negated);
    case Formula::Kind::False:
      return CNode::constant(negated);
    case Formula::Kind::Atom: {
      const Descriptor& d = f.descriptor();
      const std::size_t attr = schema_index(schema, d.attribute);
      const auto value = schema[attr].domain_index(d.value);
      if (!value) {
        throw EvalError("value '" + d.value + "' is outside the domain of '" + d.attribute + "'");
      }
      Mask mask(schema[attr].domain.size(), negated);
      mask[*value] = !negated;
      return CNode::leaf(attr, std::move(mask));
    }
    case Formula::Kind::Not:
      return to_cnode(f.operand(), !negated, schema);
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      const bool conjunctive = (f.kind() == Formula::Kind::And) != negated;
      CNode out{conjunctive ? CNode::Kind::And : CNode::Kind::Or, 0, {}, {}};
      for (const Formula& part : f.operands()) out.kids.push_back(to_cnode(part, negated, schema));
      return out;
    }
  }
  throw EvalError("unreachable formula kind");
}

// Flattens nested connectives, merges same-attribute leaves and folds
// constants. Children of an And end up as (sorted leaves, then others);
// an Or is the dual with unions instead of intersections.
CNode normalize(CNode node) {
  switch (node.kind) {
    case CNode::Kind::True:
    case CNode::Kind::False:
      return node;
    case CNode::Kind::Leaf:
      if (mask_empty(node.mask)) return CNode::constant(false);
      if (mask_full(node.mask)) return CNode::constant(true);
      return node;
    case CNode::Kind::And:
    case CNode::Kind::Or:
      break;
  }
  const bool conjunctive = node.kind == CNode::Kind::And;

  std::map<std::size_t, Mask> leaves;
  std::vector<CNode> others;
  std::vector<CNode> pending = std::move(node.kids);
  for (std::size_t i = 0; i < pending.size(); ++i) {
    CNode kid = normalize(std::move(pending[i]));
    if (kid.kind == CNode::Kind::True) {
      if (!conjunctive) return CNode::constant(true);
      continue;
    }
    if (kid.kind == CNode::Kind::False) {
      if (conjunctive) return CNode::constant(false);
      continue;
    }
    if (kid.kind == node.kind) {  // splice nested connective of the same kind
      for (CNode& grand : kid.kids) pending.push_back(std::move(grand));
      continue;
    }
    if (kid.kind == CNode::Kind::Leaf) {
      const auto it = leaves.find(kid.attr);
      if (it == leaves.end()) {
        leaves.emplace(kid.attr, std::move(kid.mask));
      } else {
        it->second = conjunctive ? mask_and(it->second, kid.mask) : mask_or(it->second, kid.mask);
        if (conjunctive && mask_empty(it->second)) return CNode::constant(false);
        if (!conjunctive && mask_full(it->second)) return CNode::constant(true);
      }
      continue;
    }
    others.push_back(std::move(kid));
  }

  std::vector<CNode> kids;
  for (auto& [attr, mask] : leaves) {
    if (conjunctive && mask_full(mask)) continue;   // no constraint
    if (!conjunctive && mask_empty(mask)) continue;  // no contribution
    kids.push_back(CNode::leaf(attr, std::move(mask)));
  }
  for (CNode& other : others) kids.push_back(std::move(other));

  if (kids.empty()) return CNode::constant(conjunctive);
  if (kids.size() == 1) return std::move(kids.front());
  node.kids = std::move(kids);
  return node;
}

// Simplifies under a set of fixed per-attribute constraints. Leaves fold
// to constants when the context contradicts or entails them; inside a
// conjunction, collapsed disjunctions feed back into the context until
// nothing changes.
CNode simplify_node(CNode node, const Context& context) {
  switch (node.kind) {
    case CNode::Kind::True:
    case CNode::Kind::False:
      return node;
    case CNode::Kind::Leaf: {
      const auto it = context.find(node.attr);
      if (it == context.end()) return node;
      if (mask_disjoint(it->second, node.mask)) return CNode::constant(false);
      if (mask_subset(it->second, node.mask)) return CNode::constant(true);
      return node;
    }
    case CNode::Kind::Or: {
      CNode out{CNode::Kind::Or, 0, {}, {}};
      for (CNode& kid : node.kids) out.kids.push_back(simplify_node(std::move(kid), context));
      return normalize(std::move(out));
    }
    case CNode::Kind::And:
      break;
  }

  Context local = context;
  std::map<std::size_t, Mask> own;  // constraints to re-emit
  std::vector<CNode> items = std::move(node.kids);

  const auto absorb = [&](std::size_t attr, const Mask& mask) -> bool {
    const auto it = local.find(attr);
    const Mask combined = it == local.end() ? mask : mask_and(it->second, mask);
    if (mask_empty(combined)) return false;
    local[attr] = combined;
    const auto own_it = own.find(attr);
    own[attr] = own_it == own.end() ? mask : mask_and(own_it->second, mask);
    return true;
  };

  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<CNode> rest;
    for (CNode& item : items) {
      CNode simplified = simplify_node(std::move(item), local);
      switch (simplified.kind) {
        case CNode::Kind::True:
          changed = true;
          break;
        case CNode::Kind::False:
          return CNode::constant(false);
        case CNode::Kind::Leaf:
          if (!absorb(simplified.attr, simplified.mask)) return CNode::constant(false);
          changed = true;
          break;
        case CNode::Kind::And:
          for (CNode& grand : simplified.kids) rest.push_back(std::move(grand));
          changed = true;
          break;
        case CNode::Kind::Or:
          rest.push_back(std::move(simplified));
          break;
      }
    }
    items = std::move(rest);
  }

  std::vector<CNode> kids;
  for (auto& [attr, mask] : own) {
    if (mask_full(mask)) continue;
    kids.push_back(CNode::leaf(attr, std::move(mask)));
  }
  for (CNode& item : items) kids.push_back(std::move(item));

  if (kids.empty()) return CNode::constant(true);
  if (kids.size() == 1) return std::move(kids.front());
  return CNode{CNode::Kind::And, 0, {}, std::move(kids)};
}

Formula to_formula(const CNode& node, const Schema& schema) {
  switch (node.kind) {
    case CNode::Kind::True:
      return Formula::constant(true);
    case CNode::Kind::False:
      return Formula::constant(false);
    case CNode::Kind::Leaf: {
      std::vector<Formula> atoms;
      const AttributeSchema& attr = schema[node.attr];
      for (std::size_t i = 0; i < node.mask.size(); ++i) {
        if (node.mask[i]) atoms.push_back(Formula::atom(attr.name, attr.domain[i]));
      }
      return Formula::disjunction(std::move(atoms));
    }
    case CNode::Kind::And:
    case CNode::Kind::Or: {
      std::vector<Formula> parts;
      parts.reserve(node.kids.size());
      for (const CNode& kid : node.kids) parts.push_back(to_formula(kid, schema));
      return node.kind == CNode::Kind::And ? Formula::conjunction(std::move(parts))
                                           : Formula::disjunction(std::move(parts));
    }
  }
  throw EvalError("unreachable constraint kind");
}

}  // namespace

Formula simplify(const Formula& f, const Schema& schema) {
  CNode root = simplify_node(normalize(to_cnode(f, false, schema)), {});
  return to_formula(root, schema);
}

// ---------------------------------------------------------------------------
// Rule construction

namespace {

const TaxonomyNode* find_path(const TaxonomyNode& node, const std::string& leaf_label,
                              std::vector<const TaxonomyNode*>& path) {
  path.push_back(&node);
  if (node.is_leaf()) {
    if (node.id == leaf_label) return &node;
  } else {
    for (const TaxonomyNode& child : node.children) {
      if (const TaxonomyNode* found = find_path(child, leaf_label, path)) return found;
    }
  }
  path.pop_back();
  return nullptr;
}

}  // namespace

Rule build_rule(const std::string& leaf_label, std::span<const TaxonomyNode> forest,
                const DecisionTable& table) {
  std::vector<const TaxonomyNode*> path;
  const TaxonomyNode* leaf = nullptr;
  for (const TaxonomyNode& root : forest) {
    if ((leaf = find_path(root, leaf_label, path))) break;
    path.clear();
  }
  if (!leaf) throw EvalError("leaf '" + leaf_label + "' not found in the taxonomy");

  Rule rule;
  rule.conclusion = leaf_label;

  std::vector<Formula> parts;
  for (std::size_t depth = 0; depth + 1 < path.size(); ++depth) {
    const TaxonomyNode& node = *path[depth];
    const TaxonomyNode& taken = *path[depth + 1];
    const bool took_left = &node.children[0] == &taken;
    const TaxonomyNode& sibling = took_left ? node.children[1] : node.children[0];

    if (&taken == leaf && sibling.is_leaf()) {
      const Discrimination d =
          discriminate_within(leaf->characterization, sibling.characterization);
      rule.degenerate = rule.degenerate || d.degenerate;
      rule.derivation.push_back(SubruleRecord{node.id, sibling.id, d.condition});
      parts.push_back(d.condition);
      continue;
    }

    if (took_left) {
      // The right member's characterization is the necessary condition of
      // its subtree; failing it routes the case to the left.
      if (sibling.characterization.empty()) continue;
      const Formula exclusion = negate_characterization(sibling.characterization);
      rule.derivation.push_back(SubruleRecord{node.id, sibling.id, exclusion});
      parts.push_back(exclusion);
    } else {
      if (taken.characterization.empty()) continue;
      std::vector<Formula> conjuncts;
      for (const ValueDisjunction& element : taken.characterization.elements) {
        conjuncts.push_back(element.to_formula());
      }
      Formula own = Formula::conjunction(std::move(conjuncts));
      rule.derivation.push_back(SubruleRecord{node.id, sibling.id, own});
      parts.push_back(std::move(own));
    }
  }
  if (path.size() == 1) rule.degenerate = true;  // isolated root: nothing to discriminate

  rule.condition = simplify(Formula::conjunction(std::move(parts)), table.schema());

  const Extension extension = meaning(rule.condition, table);
  if (!extension.empty()) rule.accuracy = accuracy(rule.condition, leaf_label, table);
  rule.coverage = coverage(rule.condition, leaf_label, table);
  return rule;
}

RuleSet induce_rules(std::span<const TaxonomyNode> forest, const DecisionTable& table,
                     const Rational& delta_alpha, const Rational& delta_kappa) {
  RuleSet out;
  out.delta_alpha = delta_alpha;
  out.delta_kappa = delta_kappa;
  for (const std::string& label : table.decision().domain) {
    out.rules.push_back(build_rule(label, forest, table));
  }
  return out;
}

RuleSet filter_probabilistic(const RuleSet& rules, const Rational& delta_alpha,
                             const Rational& delta_kappa) {
  RuleSet out;
  out.delta_alpha = delta_alpha;
  out.delta_kappa = delta_kappa;
  for (const Rule& rule : rules.rules) {
    const bool accuracy_ok =
        rule.accuracy ? *rule.accuracy >= delta_alpha : delta_alpha == Rational(0);
    if (accuracy_ok && rule.coverage >= delta_kappa) out.rules.push_back(rule);
  }
  return out;
}

}  // namespace taxmine
