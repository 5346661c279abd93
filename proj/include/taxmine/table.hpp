#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "taxmine/formula.hpp"
#include "taxmine/rational.hpp"

namespace taxmine {

using CaseId = std::int64_t;

/// One column of a decision table. Domains are ordered by first
/// appearance and never carry duplicates.
struct AttributeSchema {
  std::string name;
  std::vector<std::string> domain;
  bool is_decision = false;

  std::optional<std::size_t> domain_index(std::string_view value) const;
};

using Schema = std::vector<AttributeSchema>;

/// Set of case ids, kept sorted and duplicate-free.
class Extension {
 public:
  Extension() = default;
  explicit Extension(std::vector<CaseId> ids);

  static Extension intersection(const Extension& a, const Extension& b);
  static Extension set_union(const Extension& a, const Extension& b);
  static Extension difference(const Extension& a, const Extension& b);

  bool contains(CaseId id) const;
  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  const std::vector<CaseId>& ids() const { return ids_; }

  friend bool operator==(const Extension&, const Extension&) = default;

 private:
  std::vector<CaseId> ids_;
};

/// Immutable table of categorical cases with one decision attribute.
/// Cell values are stored as indices into the attribute domains.
class DecisionTable {
 public:
  /// Parses comma-separated text with a header row. An optional column
  /// named exactly "id" supplies integer case ids; otherwise ids are
  /// 1-based row positions. The class column defaults to the last
  /// non-id column.
  static DecisionTable from_csv(std::string_view text,
                                const std::optional<std::string>& class_column = std::nullopt);

  /// Builds a table whose domains are the observed values per column,
  /// in first-appearance order.
  static DecisionTable from_rows(const std::vector<std::string>& columns,
                                 const std::vector<std::vector<std::string>>& rows,
                                 const std::optional<std::string>& class_column = std::nullopt,
                                 std::vector<CaseId> ids = {});

  /// Builds a table against a declared schema; every cell must belong
  /// to its attribute's domain.
  static DecisionTable from_schema(Schema schema,
                                   const std::vector<std::vector<std::string>>& rows,
                                   std::vector<CaseId> ids = {});

  const Schema& schema() const { return schema_; }
  const AttributeSchema& decision() const { return schema_[decision_index_]; }
  std::size_t decision_index() const { return decision_index_; }
  std::vector<std::size_t> condition_indices() const;

  /// Index of a named attribute; throws EvalError when unknown.
  std::size_t attribute_index(std::string_view name) const;

  std::size_t row_count() const { return cells_.size(); }
  const Extension& universe() const { return universe_; }

  CaseId case_id(std::size_t row) const { return ids_[row]; }
  std::size_t row_of(CaseId id) const;
  std::size_t value_index(std::size_t row, std::size_t attr) const { return cells_[row][attr]; }
  const std::string& value(std::size_t row, std::size_t attr) const;

  /// Cases whose cell for `attr` equals the given domain value index.
  Extension rows_with(std::size_t attr, std::size_t value_idx) const;

  /// Cases of one decision class; throws EvalError on unknown labels.
  Extension class_extension(const std::string& label) const;

 private:
  DecisionTable(Schema schema, std::vector<std::vector<std::uint32_t>> cells,
                std::vector<CaseId> ids, std::size_t decision_index);

  Schema schema_;
  std::vector<std::vector<std::uint32_t>> cells_;
  std::vector<CaseId> ids_;
  std::unordered_map<CaseId, std::size_t> row_by_id_;
  Extension universe_;
  std::size_t decision_index_ = 0;
};

/// Set of cases satisfying a formula: descriptors match cells, logical
/// connectives act as set operations over the universe.
Extension meaning(const Formula& f, const DecisionTable& table);

/// |extension ∩ class| / |extension|. Throws UndefinedError when the
/// formula's extension is empty.
Rational accuracy(const Formula& f, const std::string& class_label, const DecisionTable& table);

/// |extension ∩ class| / |class|.
Rational coverage(const Formula& f, const std::string& class_label, const DecisionTable& table);

/// Whether the attribute-value pairs of `r1` are a subset of those of
/// `r2`. Both formulas must be conjunctions of atoms or single-attribute
/// disjunctions of atoms; anything else raises StructureError.
bool attr_subset(const Formula& r1, const Formula& r2);

}  // namespace taxmine
