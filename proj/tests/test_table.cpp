#include <doctest.h>

#include <random>

#include "fixture.hpp"
#include "generators.hpp"
#include "taxmine/characterize.hpp"
#include "taxmine/errors.hpp"
#include "taxmine/table.hpp"

using taxmine::DecisionTable;
using taxmine::Extension;
using taxmine::Formula;
using taxmine::Rational;

namespace {

Extension ids(std::vector<taxmine::CaseId> values) { return Extension(std::move(values)); }

}  // namespace

TEST_CASE("csv ingestion builds observed-domain schemas") {
  const DecisionTable table = fixture::headache_table();
  CHECK(table.row_count() == 10);
  CHECK(table.schema().size() == 9);
  CHECK(table.condition_indices().size() == 8);
  CHECK(table.decision().name == "class");
  CHECK(table.decision().domain ==
        std::vector<std::string>{"m.c.h.", "common", "classic", "psycho", "i.m.l."});
  // Domains keep first-appearance order.
  const auto& loc = table.schema()[table.attribute_index("loc")];
  CHECK(loc.domain == std::vector<std::string>{"ocular", "whole", "lateral"});
  const auto& m1 = table.schema()[table.attribute_index("M1")];
  CHECK(m1.domain == std::vector<std::string>{"1", "0"});
}

TEST_CASE("csv ingestion edge cases") {
  SUBCASE("single row with explicit class column") {
    const DecisionTable table = DecisionTable::from_csv("a,b\nx,y\n", std::string("b"));
    CHECK(table.row_count() == 1);
    CHECK(table.schema()[0].domain == std::vector<std::string>{"x"});
    CHECK(table.schema()[1].domain == std::vector<std::string>{"y"});
    CHECK(table.decision().name == "b");
  }
  SUBCASE("duplicate header names") {
    CHECK_THROWS_AS(DecisionTable::from_csv("a,a\nx,y\n"), taxmine::SchemaError);
  }
  SUBCASE("ragged rows name the offending row") {
    try {
      DecisionTable::from_csv("a,b\nx\n");
      FAIL("expected ParseError");
    } catch (const taxmine::ParseError& error) {
      CHECK(std::string(error.what()).find("row 1") != std::string::npos);
    }
  }
  SUBCASE("header-only input is an empty table") {
    CHECK_THROWS_AS(DecisionTable::from_csv("a,b\n"), taxmine::EmptyTableError);
  }
  SUBCASE("id column supplies case ids") {
    const DecisionTable table = DecisionTable::from_csv("id,a,b\n7,x,y\n3,z,y\n");
    CHECK(table.universe() == ids({3, 7}));
    CHECK(table.condition_indices().size() == 1);
    CHECK_THROWS_AS(DecisionTable::from_csv("id,a,b\n7,x,y\n7,z,y\n"), taxmine::SchemaError);
    CHECK_THROWS_AS(DecisionTable::from_csv("id,a,b\nseven,x,y\n"), taxmine::ParseError);
  }
}

TEST_CASE("meaning follows the inductive semantics") {
  const DecisionTable table = fixture::headache_table();

  CHECK(meaning(Formula::atom("nat", "thr"), table) == ids({3, 4, 9}));
  CHECK(meaning(Formula::constant(true), table) == table.universe());
  CHECK(meaning(Formula::negation(Formula::atom("jolt", "1")), table) == ids({1, 2, 5, 10}));
  CHECK(meaning(Formula::conjunction({Formula::atom("nat", "thr"), Formula::atom("prod", "1")}),
                table) == ids({4}));

  CHECK_THROWS_AS(meaning(Formula::atom("nope", "1"), table), taxmine::EvalError);
  CHECK_THROWS_AS(meaning(Formula::atom("jolt", "2"), table), taxmine::EvalError);
}

TEST_CASE("negated jolt on the uncorrected published table") {
  // The published version of this table carries jolt = 0 in row 8, which
  // conflicts with its own characterization listing; the bundled fixture
  // fixes the cell. The uncorrected variant keeps the original reading.
  std::string csv = "loc,nat,his,prod,jolt,nau,M1,M2,class\n"
                    "ocular,per,per,0,0,0,1,1,m.c.h.\n"
                    "whole,per,per,0,0,0,1,1,m.c.h.\n"
                    "lateral,thr,par,0,1,1,0,0,common\n"
                    "lateral,thr,par,1,1,1,0,0,classic\n"
                    "ocular,per,per,0,0,0,1,1,psycho\n"
                    "ocular,per,subacute,0,1,1,0,0,i.m.l.\n"
                    "ocular,per,acute,0,1,1,0,0,psycho\n"
                    "whole,per,chronic,0,0,0,0,0,i.m.l.\n"
                    "lateral,thr,per,0,1,1,0,0,common\n"
                    "whole,per,per,0,0,0,1,1,m.c.h.\n";
  const DecisionTable table = DecisionTable::from_csv(csv);
  CHECK(meaning(Formula::negation(Formula::atom("jolt", "1")), table) == ids({1, 2, 5, 8, 10}));
}

TEST_CASE("accuracy and coverage") {
  const DecisionTable table = fixture::headache_table();

  CHECK(accuracy(Formula::atom("nat", "thr"), "common", table) == Rational(2, 3));
  CHECK(accuracy(Formula::constant(true), "m.c.h.", table) == Rational(3, 10));
  CHECK(accuracy(Formula::atom("prod", "1"), "classic", table) == Rational(1));

  CHECK(coverage(Formula::atom("prod", "1"), "classic", table) == Rational(1));
  CHECK(coverage(Formula::atom("nat", "thr"), "m.c.h.", table) == Rational(0));
  for (const std::string& label : table.decision().domain) {
    CHECK(coverage(Formula::constant(true), label, table) == Rational(1));
  }

  CHECK_THROWS_AS(accuracy(Formula::constant(false), "common", table), taxmine::UndefinedError);
  CHECK_THROWS_AS(coverage(Formula::constant(true), "nope", table), taxmine::EvalError);
}

TEST_CASE("attr_subset is pair containment") {
  const Formula a1 = Formula::atom("a", "1");
  const Formula b2 = Formula::atom("b", "2");
  const Formula c3 = Formula::atom("c", "3");

  CHECK(attr_subset(a1, Formula::conjunction({a1, b2})));
  CHECK_FALSE(attr_subset(Formula::conjunction({a1, c3}), Formula::conjunction({a1, b2})));
  CHECK(attr_subset(Formula::conjunction({a1, b2}), Formula::conjunction({a1, b2})));

  // Disjunction-atoms contribute their value set.
  const Formula a12 = Formula::disjunction({a1, Formula::atom("a", "2")});
  CHECK(attr_subset(a1, a12));
  CHECK_FALSE(attr_subset(a12, a1));

  CHECK_THROWS_AS(attr_subset(Formula::negation(a1), a1), taxmine::StructureError);
  CHECK_THROWS_AS(attr_subset(Formula::disjunction({a1, b2}), a1), taxmine::StructureError);
}

TEST_CASE("semantics laws hold on random tables") {
  testgen::Rng rng(20240811);
  for (int round = 0; round < 100; ++round) {
    const DecisionTable table = testgen::random_table(rng);
    const Formula f = testgen::random_formula(rng, table.schema(), 3);
    const Formula g = testgen::random_formula(rng, table.schema(), 3);

    const Extension fm = meaning(f, table);
    const Extension gm = meaning(g, table);
    CHECK(meaning(Formula::conjunction({f, g}), table) == Extension::intersection(fm, gm));
    CHECK(meaning(Formula::disjunction({f, g}), table) == Extension::set_union(fm, gm));
    CHECK(meaning(Formula::negation(f), table) == Extension::difference(table.universe(), fm));
    // De Morgan, extensionally.
    CHECK(meaning(Formula::negation(Formula::conjunction({f, g})), table) ==
          meaning(Formula::disjunction({Formula::negation(f), Formula::negation(g)}), table));
  }
}

TEST_CASE("accuracy and coverage agree on the overlap count") {
  testgen::Rng rng(7);
  for (int round = 0; round < 100; ++round) {
    const DecisionTable table = testgen::random_table(rng);
    const Formula f = testgen::random_formula(rng, table.schema(), 3);
    const Extension ext = meaning(f, table);
    if (ext.empty()) continue;
    const std::string label = table.decision().domain.front();
    const Extension cls = table.class_extension(label);
    const auto overlap = static_cast<std::int64_t>(Extension::intersection(ext, cls).size());
    CHECK(accuracy(f, label, table) * static_cast<std::int64_t>(ext.size()) == Rational(overlap));
    CHECK(coverage(f, label, table) * static_cast<std::int64_t>(cls.size()) == Rational(overlap));
  }
}
