#include "taxmine/similarity.hpp"

#include <algorithm>
#include <cmath>

#include "taxmine/errors.hpp"

namespace taxmine {

namespace {

std::int64_t shared_count(const CharacterizationSet& first, const CharacterizationSet& second) {
  std::int64_t shared = 0;
  for (const ValueDisjunction& element : first.elements) {
    if (second.contains(element)) ++shared;
  }
  return shared;
}

double exact_ratio(std::int64_t num, std::int64_t den, const char* name) {
  if (den == 0) throw UndefinedError(std::string(name) + " undefined: zero denominator");
  return static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

ContingencyCounts contingency(const CharacterizationSet& first, const CharacterizationSet& second,
                              std::span<const ValueDisjunction> universe) {
  const auto in_universe = [&](const ValueDisjunction& element) {
    return std::find(universe.begin(), universe.end(), element) != universe.end();
  };
  for (const ValueDisjunction& element : first.elements) {
    if (!in_universe(element)) {
      throw StructureError("element " + element.to_string() + " is outside the universe");
    }
  }
  for (const ValueDisjunction& element : second.elements) {
    if (!in_universe(element)) {
      throw StructureError("element " + element.to_string() + " is outside the universe");
    }
  }

  ContingencyCounts counts;
  counts.a = shared_count(first, second);
  counts.b = static_cast<std::int64_t>(first.size()) - counts.a;
  counts.c = static_cast<std::int64_t>(second.size()) - counts.a;
  std::int64_t either = 0;
  for (const ValueDisjunction& element : universe) {
    if (first.contains(element) || second.contains(element)) ++either;
  }
  counts.d = static_cast<std::int64_t>(universe.size()) - either;
  return counts;
}

double measure(const ContingencyCounts& cc, MeasureKind kind) {
  const std::int64_t a = cc.a, b = cc.b, c = cc.c, d = cc.d;
  switch (kind) {
    case MeasureKind::matching:
      return static_cast<double>(a);
    case MeasureKind::jaccard:
      return exact_ratio(a, a + b + c, "jaccard");
    case MeasureKind::chi2: {
      const std::int64_t n = a + b + c + d;
      const std::int64_t m = (a + b) * (b + c) * (c + d) * (d + a);
      const std::int64_t det = a * d - b * c;
      return exact_ratio(n * det * det, m, "chi2");
    }
    case MeasureKind::point_correlation: {
      const std::int64_t m = (a + b) * (b + c) * (c + d) * (d + a);
      if (m == 0) throw UndefinedError("point_correlation undefined: zero denominator");
      return static_cast<double>(a * d - b * c) / std::sqrt(static_cast<double>(m));
    }
    case MeasureKind::kulczynski:
      // 1/2 (a/(a+b) + a/(a+c)) evaluated as one exact division.
      return exact_ratio(a * ((a + b) + (a + c)), 2 * (a + b) * (a + c), "kulczynski");
    case MeasureKind::ochiai: {
      const std::int64_t den = (a + b) * (a + c);
      if (den == 0) throw UndefinedError("ochiai undefined: zero denominator");
      return static_cast<double>(a) / std::sqrt(static_cast<double>(den));
    }
    case MeasureKind::simpson:
      return exact_ratio(a, std::min(a + b, a + c), "simpson");
    case MeasureKind::braun:
      return exact_ratio(a, std::max(a + b, a + c), "braun");
  }
  throw UndefinedError("unknown measure");
}

const char* to_string(MeasureKind kind) {
  switch (kind) {
    case MeasureKind::matching:
      return "matching";
    case MeasureKind::jaccard:
      return "jaccard";
    case MeasureKind::chi2:
      return "chi2";
    case MeasureKind::point_correlation:
      return "point_correlation";
    case MeasureKind::kulczynski:
      return "kulczynski";
    case MeasureKind::ochiai:
      return "ochiai";
    case MeasureKind::simpson:
      return "simpson";
    case MeasureKind::braun:
      return "braun";
  }
  return "unknown";
}

std::optional<MeasureKind> measure_from_name(std::string_view name) {
  for (const MeasureKind kind :
       {MeasureKind::matching, MeasureKind::jaccard, MeasureKind::chi2,
        MeasureKind::point_correlation, MeasureKind::kulczynski, MeasureKind::ochiai,
        MeasureKind::simpson, MeasureKind::braun}) {
    if (name == to_string(kind)) return kind;
  }
  return std::nullopt;
}

std::string IntervalSimilarity::to_string() const {
  return "[" + to_fraction_string(lo) + ", " + to_fraction_string(hi) + "]";
}

IntervalSimilarity interval(const CharacterizationSet& first, const CharacterizationSet& second) {
  if (first.empty() || second.empty()) {
    throw UndefinedError("interval similarity undefined for an empty characterization set");
  }
  const std::int64_t a = shared_count(first, second);
  const auto n1 = static_cast<std::int64_t>(first.size());
  const auto n2 = static_cast<std::int64_t>(second.size());
  return {Rational(a, std::max(n1, n2)), Rational(a, std::min(n1, n2))};
}

std::strong_ordering compare_intervals(const IntervalSimilarity& x, const IntervalSimilarity& y) {
  if (x.hi < y.hi) return std::strong_ordering::less;
  if (y.hi < x.hi) return std::strong_ordering::greater;
  if (x.lo < y.lo) return std::strong_ordering::less;
  if (y.lo < x.lo) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace taxmine
