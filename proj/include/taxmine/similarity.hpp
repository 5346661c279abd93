#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "taxmine/characterize.hpp"
#include "taxmine/rational.hpp"

namespace taxmine {

/// Two-way element-match table between characterization sets:
/// a = shared elements, b = only in the first, c = only in the second,
/// d = in the universe but in neither.
struct ContingencyCounts {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;
  std::int64_t d = 0;

  friend bool operator==(const ContingencyCounts&, const ContingencyCounts&) = default;
};

/// Counts element matches against an element universe. Every element of
/// either set must belong to the universe.
ContingencyCounts contingency(const CharacterizationSet& first, const CharacterizationSet& second,
                              std::span<const ValueDisjunction> universe);

enum class MeasureKind {
  matching,
  jaccard,
  chi2,
  point_correlation,
  kulczynski,
  ochiai,
  simpson,
  braun,
};

/// Evaluates one similarity coefficient on a contingency table. The
/// chi-square and point-correlation variants use N = a+b+c+d and
/// M = (a+b)(b+c)(c+d)(d+a). Throws UndefinedError, naming the measure,
/// when its denominator vanishes.
double measure(const ContingencyCounts& counts, MeasureKind kind);

const char* to_string(MeasureKind kind);
std::optional<MeasureKind> measure_from_name(std::string_view name);

/// [Braun, Simpson] pair: lo = a / max(|L1|, |L2|), hi = a / min(|L1|, |L2|).
struct IntervalSimilarity {
  Rational lo{0};
  Rational hi{0};

  std::string to_string() const;  // "[3/7, 1/2]"

  friend bool operator==(const IntervalSimilarity&, const IntervalSimilarity&) = default;
};

/// Interval similarity of two nonempty characterization sets; the
/// universe plays no role because d never enters Braun or Simpson.
IntervalSimilarity interval(const CharacterizationSet& first, const CharacterizationSet& second);

/// Total order on intervals: maxima first, minima break ties.
std::strong_ordering compare_intervals(const IntervalSimilarity& x, const IntervalSimilarity& y);

}  // namespace taxmine
