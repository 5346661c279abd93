#pragma once

#include <stdexcept>

namespace taxmine {

/// Base class for every error raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input text (CSV rows, ratio strings).
struct ParseError : Error {
  using Error::Error;
};

/// Input with a header but no data rows.
struct EmptyTableError : ParseError {
  using ParseError::ParseError;
};

/// Violations of table structure: duplicate headers, cells outside a
/// declared domain, duplicate case ids.
struct SchemaError : Error {
  using Error::Error;
};

/// A formula or label refers to attributes, values or classes outside
/// the schema it is evaluated against.
struct EvalError : Error {
  using Error::Error;
};

/// A statistic has no defined value (empty extension, zero denominator).
struct UndefinedError : Error {
  using Error::Error;
};

/// A formula does not have the shape an operation requires.
struct StructureError : Error {
  using Error::Error;
};

/// Bad thresholds, unknown measure names, unusable paths.
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace taxmine
