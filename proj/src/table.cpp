#include "taxmine/table.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <utility>

#include "taxmine/errors.hpp"

namespace taxmine {

std::optional<std::size_t> AttributeSchema::domain_index(std::string_view value) const {
  for (std::size_t i = 0; i < domain.size(); ++i) {
    if (domain[i] == value) return i;
  }
  return std::nullopt;
}

Extension::Extension(std::vector<CaseId> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

Extension Extension::intersection(const Extension& a, const Extension& b) {
  Extension out;
  std::set_intersection(a.ids_.begin(), a.ids_.end(), b.ids_.begin(), b.ids_.end(),
                        std::back_inserter(out.ids_));
  return out;
}

Extension Extension::set_union(const Extension& a, const Extension& b) {
  Extension out;
  std::set_union(a.ids_.begin(), a.ids_.end(), b.ids_.begin(), b.ids_.end(),
                 std::back_inserter(out.ids_));
  return out;
}

Extension Extension::difference(const Extension& a, const Extension& b) {
  Extension out;
  std::set_difference(a.ids_.begin(), a.ids_.end(), b.ids_.begin(), b.ids_.end(),
                      std::back_inserter(out.ids_));
  return out;
}

bool Extension::contains(CaseId id) const {
  return std::binary_search(ids_.begin(), ids_.end(), id);
}

namespace {

std::vector<std::string> split_fields(std::string_view line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.emplace_back(line.substr(start));
      break;
    }
    fields.emplace_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  return fields;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (end == text.size()) break;
    start = end + 1;
  }
  // A trailing newline produces one empty final segment; drop it.
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

CaseId parse_case_id(const std::string& text, std::size_t row_number) {
  CaseId id = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), id);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ParseError("row " + std::to_string(row_number) + ": id '" + text +
                     "' is not an integer");
  }
  return id;
}

}  // namespace

DecisionTable::DecisionTable(Schema schema, std::vector<std::vector<std::uint32_t>> cells,
                             std::vector<CaseId> ids, std::size_t decision_index)
    : schema_(std::move(schema)),
      cells_(std::move(cells)),
      ids_(std::move(ids)),
      decision_index_(decision_index) {
  for (std::size_t row = 0; row < ids_.size(); ++row) {
    if (!row_by_id_.emplace(ids_[row], row).second) {
      throw SchemaError("duplicate case id " + std::to_string(ids_[row]));
    }
  }
  universe_ = Extension(ids_);
}

DecisionTable DecisionTable::from_schema(Schema schema,
                                         const std::vector<std::vector<std::string>>& rows,
                                         std::vector<CaseId> ids) {
  if (schema.empty()) throw SchemaError("schema has no attributes");
  std::size_t decision_count = 0;
  std::size_t decision_index = 0;
  std::set<std::string_view> names;
  for (std::size_t i = 0; i < schema.size(); ++i) {
    const AttributeSchema& attr = schema[i];
    if (!names.insert(attr.name).second) {
      throw SchemaError("duplicate attribute name '" + attr.name + "'");
    }
    if (attr.domain.empty()) {
      throw SchemaError("attribute '" + attr.name + "' has an empty domain");
    }
    std::set<std::string_view> values(attr.domain.begin(), attr.domain.end());
    if (values.size() != attr.domain.size()) {
      throw SchemaError("attribute '" + attr.name + "' has duplicate domain values");
    }
    if (attr.is_decision) {
      ++decision_count;
      decision_index = i;
    }
  }
  if (decision_count != 1) throw SchemaError("schema must have exactly one decision attribute");
  if (schema.size() < 2) throw SchemaError("table needs at least one condition attribute");
  if (rows.empty()) throw EmptyTableError("empty table: no data rows");

  std::vector<std::vector<std::uint32_t>> cells;
  cells.reserve(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != schema.size()) {
      throw ParseError("row " + std::to_string(r + 1) + ": expected " +
                       std::to_string(schema.size()) + " fields, got " +
                       std::to_string(rows[r].size()));
    }
    std::vector<std::uint32_t> row;
    row.reserve(schema.size());
    for (std::size_t a = 0; a < schema.size(); ++a) {
      const auto idx = schema[a].domain_index(rows[r][a]);
      if (!idx) {
        throw SchemaError("row " + std::to_string(r + 1) + ": value '" + rows[r][a] +
                          "' is outside the domain of '" + schema[a].name + "'");
      }
      row.push_back(static_cast<std::uint32_t>(*idx));
    }
    cells.push_back(std::move(row));
  }

  if (ids.empty()) {
    ids.resize(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) ids[r] = static_cast<CaseId>(r + 1);
  } else if (ids.size() != rows.size()) {
    throw SchemaError("id count does not match row count");
  }

  return DecisionTable(std::move(schema), std::move(cells), std::move(ids), decision_index);
}

DecisionTable DecisionTable::from_rows(const std::vector<std::string>& columns,
                                       const std::vector<std::vector<std::string>>& rows,
                                       const std::optional<std::string>& class_column,
                                       std::vector<CaseId> ids) {
  if (columns.empty()) throw SchemaError("table has no columns");
  {
    std::set<std::string_view> names(columns.begin(), columns.end());
    if (names.size() != columns.size()) throw SchemaError("duplicate header names");
  }
  if (rows.empty()) throw EmptyTableError("empty table: no data rows");

  std::string decision = class_column.value_or(columns.back());
  if (std::find(columns.begin(), columns.end(), decision) == columns.end()) {
    throw SchemaError("class column '" + decision + "' not found");
  }

  Schema schema;
  schema.reserve(columns.size());
  for (const std::string& name : columns) {
    schema.push_back(AttributeSchema{name, {}, name == decision});
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != columns.size()) {
      throw ParseError("row " + std::to_string(r + 1) + ": expected " +
                       std::to_string(columns.size()) + " fields, got " +
                       std::to_string(rows[r].size()));
    }
    for (std::size_t a = 0; a < columns.size(); ++a) {
      if (!schema[a].domain_index(rows[r][a])) schema[a].domain.push_back(rows[r][a]);
    }
  }
  return from_schema(std::move(schema), rows, std::move(ids));
}

DecisionTable DecisionTable::from_csv(std::string_view text,
                                      const std::optional<std::string>& class_column) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw ParseError("input has no header row");

  const std::vector<std::string> header = split_fields(lines.front());
  {
    std::set<std::string_view> names(header.begin(), header.end());
    if (names.size() != header.size()) throw SchemaError("duplicate header names");
  }

  std::optional<std::size_t> id_column;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == "id") id_column = i;
  }
  if (class_column && id_column && *class_column == "id") {
    throw SchemaError("the id column cannot be the class column");
  }

  std::vector<std::string> columns;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (id_column && i == *id_column) continue;
    columns.push_back(header[i]);
  }
  if (columns.empty()) throw SchemaError("table has no attribute columns");

  std::vector<std::vector<std::string>> rows;
  std::vector<CaseId> ids;
  for (std::size_t line = 1; line < lines.size(); ++line) {
    std::vector<std::string> fields = split_fields(lines[line]);
    if (fields.size() != header.size()) {
      throw ParseError("row " + std::to_string(line) + ": expected " +
                       std::to_string(header.size()) + " fields, got " +
                       std::to_string(fields.size()));
    }
    if (id_column) {
      ids.push_back(parse_case_id(fields[*id_column], line));
      fields.erase(fields.begin() + static_cast<std::ptrdiff_t>(*id_column));
    }
    rows.push_back(std::move(fields));
  }
  if (rows.empty()) throw EmptyTableError("empty table: no data rows");

  return from_rows(columns, rows, class_column, std::move(ids));
}

std::vector<std::size_t> DecisionTable::condition_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < schema_.size(); ++i) {
    if (!schema_[i].is_decision) out.push_back(i);
  }
  return out;
}

std::size_t DecisionTable::attribute_index(std::string_view name) const {
  for (std::size_t i = 0; i < schema_.size(); ++i) {
    if (schema_[i].name == name) return i;
  }
  throw EvalError("unknown attribute '" + std::string(name) + "'");
}

std::size_t DecisionTable::row_of(CaseId id) const {
  const auto it = row_by_id_.find(id);
  if (it == row_by_id_.end()) throw EvalError("unknown case id " + std::to_string(id));
  return it->second;
}

const std::string& DecisionTable::value(std::size_t row, std::size_t attr) const {
  return schema_[attr].domain[cells_[row][attr]];
}

Extension DecisionTable::rows_with(std::size_t attr, std::size_t value_idx) const {
  std::vector<CaseId> ids;
  for (std::size_t row = 0; row < cells_.size(); ++row) {
    if (cells_[row][attr] == value_idx) ids.push_back(ids_[row]);
  }
  return Extension(std::move(ids));
}

Extension DecisionTable::class_extension(const std::string& label) const {
  const auto idx = decision().domain_index(label);
  if (!idx) throw EvalError("unknown class '" + label + "'");
  return rows_with(decision_index_, *idx);
}

Extension meaning(const Formula& f, const DecisionTable& table) {
  switch (f.kind()) {
    case Formula::Kind::True:
      return table.universe();
    case Formula::Kind::False:
      return Extension{};
    case Formula::Kind::Atom: {
      const Descriptor& d = f.descriptor();
      const std::size_t attr = table.attribute_index(d.attribute);
      const auto value_idx = table.schema()[attr].domain_index(d.value);
      if (!value_idx) {
        throw EvalError("value '" + d.value + "' is outside the domain of '" + d.attribute + "'");
      }
      return table.rows_with(attr, *value_idx);
    }
    case Formula::Kind::Not:
      return Extension::difference(table.universe(), meaning(f.operand(), table));
    case Formula::Kind::And: {
      Extension out = table.universe();
      for (const Formula& part : f.operands()) {
        out = Extension::intersection(out, meaning(part, table));
      }
      return out;
    }
    case Formula::Kind::Or: {
      Extension out;
      for (const Formula& part : f.operands()) {
        out = Extension::set_union(out, meaning(part, table));
      }
      return out;
    }
  }
  throw EvalError("unreachable formula kind");
}

Rational accuracy(const Formula& f, const std::string& class_label, const DecisionTable& table) {
  const Extension ext = meaning(f, table);
  if (ext.empty()) throw UndefinedError("accuracy undefined: formula has an empty extension");
  const Extension cls = table.class_extension(class_label);
  const Extension both = Extension::intersection(ext, cls);
  return {static_cast<std::int64_t>(both.size()), static_cast<std::int64_t>(ext.size())};
}

Rational coverage(const Formula& f, const std::string& class_label, const DecisionTable& table) {
  const Extension cls = table.class_extension(class_label);
  const Extension both = Extension::intersection(meaning(f, table), cls);
  return {static_cast<std::int64_t>(both.size()), static_cast<std::int64_t>(cls.size())};
}

namespace {

using AttrValuePair = std::pair<std::string, std::string>;

void collect_pairs(const Formula& f, std::set<AttrValuePair>& out) {
  switch (f.kind()) {
    case Formula::Kind::True:
      return;  // empty conjunction
    case Formula::Kind::Atom:
      out.emplace(f.descriptor().attribute, f.descriptor().value);
      return;
    case Formula::Kind::Or: {
      std::string attribute;
      for (const Formula& part : f.operands()) {
        if (part.kind() != Formula::Kind::Atom) {
          throw StructureError("disjunction members must be atoms");
        }
        if (attribute.empty()) {
          attribute = part.descriptor().attribute;
        } else if (attribute != part.descriptor().attribute) {
          throw StructureError("disjunction spans more than one attribute");
        }
        out.emplace(part.descriptor().attribute, part.descriptor().value);
      }
      return;
    }
    case Formula::Kind::And:
      for (const Formula& part : f.operands()) collect_pairs(part, out);
      return;
    case Formula::Kind::False:
    case Formula::Kind::Not:
      throw StructureError("formula is not a conjunction of attribute-scoped atoms");
  }
}

}  // namespace

bool attr_subset(const Formula& r1, const Formula& r2) {
  std::set<AttrValuePair> first, second;
  collect_pairs(r1, first);
  collect_pairs(r2, second);
  return std::includes(second.begin(), second.end(), first.begin(), first.end());
}

}  // namespace taxmine
