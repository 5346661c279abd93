#include <doctest.h>

#include <stdexcept>

#include "fixture.hpp"
#include "generators.hpp"
#include "taxmine/errors.hpp"
#include "taxmine/induction.hpp"

using taxmine::CharacterizationSet;
using taxmine::DecisionTable;
using taxmine::Extension;
using taxmine::Formula;
using taxmine::GroupingConfig;
using taxmine::GroupingResult;
using taxmine::Rational;
using taxmine::Rule;
using taxmine::RuleSet;

namespace {

Extension ids(std::vector<taxmine::CaseId> values) { return Extension(std::move(values)); }

GroupingResult headache_taxonomy(const DecisionTable& table) {
  GroupingConfig config;
  config.single_tree = true;
  return group(table, config);
}

const Rule& rule_for(const RuleSet& rules, const std::string& label) {
  for (const Rule& rule : rules.rules) {
    if (rule.conclusion == label) return rule;
  }
  FAIL("no rule for " + label);
  throw std::logic_error("unreachable");
}

}  // namespace

TEST_CASE("negating a characterization disjoins element negations") {
  const DecisionTable table = fixture::headache_table();
  const CharacterizationSet mch = characterize(table, "m.c.h.", Rational(1));
  const CharacterizationSet psycho = characterize(table, "psycho", Rational(1));
  const CharacterizationSet d8 = intersect_characterizations(mch, psycho, "D8");

  CHECK(negate_characterization(d8).to_string() == "![nat = per] | ![prod = 0]");

  const CharacterizationSet iml = characterize(table, "i.m.l.", Rational(1));
  const Formula negated = negate_characterization(iml);
  REQUIRE(negated.kind() == Formula::Kind::Or);
  CHECK(negated.operands().size() == 7);
  // Negating rejects exactly the cases matching every element.
  CHECK(meaning(negated, table) ==
        Extension::difference(table.universe(), ids({6, 8})));

  const CharacterizationSet single{"s", Rational(1), {{"prod", {"0"}}}};
  CHECK(negate_characterization(single).kind() == Formula::Kind::Not);

  const CharacterizationSet empty{"e", Rational(1), {}};
  CHECK_THROWS_AS(negate_characterization(empty), taxmine::UndefinedError);
}

TEST_CASE("leaf discrimination keeps only disjoint attributes") {
  const DecisionTable table = fixture::headache_table();
  const CharacterizationSet common = characterize(table, "common", Rational(1));
  const CharacterizationSet classic = characterize(table, "classic", Rational(1));

  // his overlaps ({per, par} vs {par}); prod is the only disjoint attribute.
  const auto forward = discriminate_within(common, classic);
  CHECK_FALSE(forward.degenerate);
  CHECK(forward.condition.to_string() == "[prod = 0]");

  const auto backward = discriminate_within(classic, common);
  CHECK(backward.condition.to_string() == "[prod = 1]");

  const auto self = discriminate_within(common, common);
  CHECK(self.degenerate);
  CHECK(self.condition == Formula::constant(true));
}

TEST_CASE("simplification produces extensionally equal negation-free formulas") {
  const DecisionTable table = fixture::headache_table();
  const taxmine::Schema& schema = table.schema();

  SUBCASE("complement over the observed domain") {
    const Formula f = Formula::negation(
        Formula::disjunction({Formula::atom("loc", "ocular"), Formula::atom("loc", "whole")}));
    CHECK(simplify(f, schema) == Formula::atom("loc", "lateral"));
  }
  SUBCASE("contradicted disjuncts vanish, then complements resolve") {
    const Formula f = Formula::conjunction(
        {Formula::disjunction({Formula::negation(Formula::atom("nat", "per")),
                               Formula::negation(Formula::atom("prod", "0"))}),
         Formula::atom("prod", "0")});
    CHECK(simplify(f, schema) ==
          Formula::conjunction({Formula::atom("nat", "thr"), Formula::atom("prod", "0")}));
  }
  SUBCASE("true conjuncts are dropped") {
    const Formula x = Formula::atom("jolt", "1");
    CHECK(simplify(Formula::conjunction({Formula::constant(true), x}), schema) == x);
  }
  SUBCASE("entailed disjunctions are absorbed") {
    const Formula f = Formula::conjunction(
        {Formula::atom("nat", "thr"),
         Formula::disjunction({Formula::atom("nat", "thr"), Formula::atom("jolt", "0")})});
    CHECK(simplify(f, schema) == Formula::atom("nat", "thr"));
  }
  SUBCASE("contradictions collapse to false") {
    const Formula f = Formula::conjunction(
        {Formula::atom("prod", "0"), Formula::atom("prod", "1")});
    CHECK(simplify(f, schema) == Formula::constant(false));
  }
}

TEST_CASE("simplification preserves extensions on random formulas") {
  testgen::Rng rng(1234);
  for (int round = 0; round < 100; ++round) {
    const taxmine::Schema schema = testgen::random_schema(rng, 5, 4);
    const Formula f = testgen::random_formula(rng, schema, 4);
    const Formula simplified = simplify(f, schema);
    for (int t = 0; t < 3; ++t) {
      const DecisionTable table = testgen::random_table_for_schema(rng, schema, 8);
      CHECK(meaning(f, table) == meaning(simplified, table));
    }
  }
}

TEST_CASE("rules induced down the headache taxonomy") {
  const DecisionTable table = fixture::headache_table();
  const GroupingResult grouped = headache_taxonomy(table);
  const RuleSet induced = induce_rules(grouped.forest, table, Rational(3, 4), Rational(1, 2));
  REQUIRE(induced.rules.size() == 5);

  SUBCASE("common: both exclusion subrules plus the leaf discrimination") {
    const Rule& rule = rule_for(induced, "common");
    REQUIRE(rule.derivation.size() == 3);
    CHECK(rule.derivation[0].level_id == "D9");
    CHECK(rule.derivation[0].sibling_id == "D8");
    CHECK(rule.derivation[0].formula.to_string() == "![nat = per] | ![prod = 0]");
    CHECK(rule.derivation[1].level_id == "D7");
    CHECK(rule.derivation[1].sibling_id == "i.m.l.");
    CHECK(rule.derivation[1].formula.operands().size() == 7);
    CHECK(rule.derivation[2].level_id == "D6");
    CHECK(rule.derivation[2].sibling_id == "classic");
    CHECK(rule.derivation[2].formula.to_string() == "[prod = 0]");

    CHECK(meaning(rule.condition, table) == ids({3, 9}));
    CHECK(rule.condition ==
          Formula::conjunction({Formula::atom("nat", "thr"), Formula::atom("prod", "0")}));
    CHECK(rule.accuracy == Rational(1));
    CHECK(rule.coverage == Rational(1));
    CHECK_FALSE(rule.degenerate);
  }

  SUBCASE("classic mirrors common with the opposite leaf value") {
    const Rule& rule = rule_for(induced, "classic");
    CHECK(meaning(rule.condition, table) == ids({4}));
    CHECK(rule.condition == Formula::atom("prod", "1"));
    CHECK(rule.accuracy == Rational(1));
    CHECK(rule.coverage == Rational(1));
  }

  SUBCASE("m.c.h. and psycho rest on the group characterization alone") {
    // Rows 1 and 5 are identical across the two classes, so no formula
    // separates them; the leaf discrimination degenerates to TRUE.
    const Rule& mch = rule_for(induced, "m.c.h.");
    CHECK(mch.degenerate);
    CHECK(meaning(mch.condition, table) == ids({1, 2, 5, 6, 7, 8, 10}));
    CHECK(mch.accuracy == Rational(3, 7));
    CHECK(mch.coverage == Rational(1));

    const Rule& psycho = rule_for(induced, "psycho");
    CHECK(psycho.degenerate);
    CHECK(psycho.accuracy == Rational(2, 7));
    CHECK(psycho.coverage == Rational(1));
  }

  SUBCASE("i.m.l. is contradicted by the zero-join exclusion") {
    // The completion join makes the rule conjoin the negation of D8's
    // characterization, which every i.m.l. case satisfies.
    const Rule& rule = rule_for(induced, "i.m.l.");
    CHECK(rule.condition == Formula::constant(false));
    CHECK_FALSE(rule.accuracy.has_value());
    CHECK(rule.coverage == Rational(0));
  }

  SUBCASE("derivation subformulas conjoin to the unsimplified condition") {
    for (const Rule& rule : induced.rules) {
      std::vector<Formula> parts;
      for (const auto& record : rule.derivation) parts.push_back(record.formula);
      CHECK(meaning(Formula::conjunction(parts), table) == meaning(rule.condition, table));
    }
  }

  SUBCASE("accuracy and coverage match a recomputation") {
    for (const Rule& rule : induced.rules) {
      const Extension ext = meaning(rule.condition, table);
      if (!ext.empty()) {
        CHECK(rule.accuracy == accuracy(rule.condition, rule.conclusion, table));
      }
      CHECK(rule.coverage == coverage(rule.condition, rule.conclusion, table));
    }
  }
}

TEST_CASE("a two-class taxonomy reduces to the leaf discrimination") {
  const DecisionTable table = DecisionTable::from_rows(
      {"a", "class"}, {{"x", "p"}, {"x", "p"}, {"y", "q"}});
  GroupingConfig config;
  config.single_tree = true;
  const GroupingResult grouped = group(table, config);
  REQUIRE(grouped.forest.size() == 1);

  const Rule rule = build_rule("p", grouped.forest, table);
  CHECK(rule.condition == Formula::atom("a", "x"));
  CHECK(rule.accuracy == Rational(1));
  CHECK(rule.coverage == Rational(1));

  CHECK_THROWS_AS(build_rule("missing", grouped.forest, table), taxmine::EvalError);
}

TEST_CASE("probabilistic filtering") {
  const DecisionTable table = fixture::headache_table();
  const GroupingResult grouped = headache_taxonomy(table);
  const RuleSet induced = induce_rules(grouped.forest, table, Rational(3, 4), Rational(1, 2));

  SUBCASE("the published thresholds keep the two crisp rules") {
    const RuleSet kept = filter_probabilistic(induced, Rational(3, 4), Rational(1, 2));
    REQUIRE(kept.rules.size() == 2);
    CHECK(kept.rules[0].conclusion == "common");
    CHECK(kept.rules[1].conclusion == "classic");
  }
  SUBCASE("zero thresholds are the identity") {
    const RuleSet kept = filter_probabilistic(induced, Rational(0), Rational(0));
    CHECK(kept.rules.size() == induced.rules.size());
  }
  SUBCASE("unit thresholds drop anything below perfect accuracy") {
    const RuleSet kept = filter_probabilistic(induced, Rational(1), Rational(1));
    REQUIRE(kept.rules.size() == 2);
    CHECK(kept.rules[0].conclusion == "common");
    // m.c.h.'s accuracy 3/7 and psycho's 2/7 fail the bound.
  }
  SUBCASE("filtering is idempotent and monotone") {
    testgen::Rng rng(31337);
    for (int round = 0; round < 25; ++round) {
      const Rational alpha(testgen::pick(rng, 0, 4), 4);
      const Rational kappa(testgen::pick(rng, 0, 4), 4);
      const RuleSet once = filter_probabilistic(induced, alpha, kappa);
      const RuleSet twice = filter_probabilistic(once, alpha, kappa);
      CHECK(once.rules.size() == twice.rules.size());

      const Rational higher = alpha + Rational(1, 4);
      if (higher <= Rational(1)) {
        CHECK(filter_probabilistic(induced, higher, kappa).rules.size() <= once.rules.size());
      }
    }
  }
}
