#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace taxmine {

/// Exact ratio type used for accuracies, coverages and similarities.
/// Always kept in reduced form by boost::rational.
using Rational = boost::rational<std::int64_t>;

/// "3/4" for proper fractions, bare integer text otherwise ("0", "1").
std::string to_fraction_string(const Rational& r);

double to_double(const Rational& r);

/// Accepts "3/4", "0.75" or "1". Throws ConfigError on malformed text.
Rational parse_ratio(std::string_view text);

}  // namespace taxmine
