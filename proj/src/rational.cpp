#include "taxmine/rational.hpp"

#include <algorithm>
#include <charconv>
#include <cctype>

#include "taxmine/errors.hpp"

namespace taxmine {

namespace {

std::int64_t parse_int(std::string_view text) {
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ConfigError("cannot parse ratio component '" + std::string(text) + "'");
  }
  return value;
}

std::int64_t pow10(std::size_t exponent) {
  std::int64_t value = 1;
  for (std::size_t i = 0; i < exponent; ++i) value *= 10;
  return value;
}

}  // namespace

std::string to_fraction_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

double to_double(const Rational& r) { return boost::rational_cast<double>(r); }

Rational parse_ratio(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw ConfigError("empty ratio");

  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const std::int64_t num = parse_int(text.substr(0, slash));
    const std::int64_t den = parse_int(text.substr(slash + 1));
    if (den == 0) throw ConfigError("ratio '" + std::string(text) + "' has zero denominator");
    return {num, den};
  }

  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const std::string_view whole = text.substr(0, dot);
    const std::string_view frac = text.substr(dot + 1);
    if (frac.empty() || frac.size() > 15) {
      throw ConfigError("cannot parse ratio '" + std::string(text) + "'");
    }
    const std::int64_t integral = whole.empty() ? 0 : parse_int(whole);
    const std::int64_t scale = pow10(frac.size());
    return Rational(integral) + Rational(parse_int(frac), scale);
  }

  return Rational(parse_int(text));
}

}  // namespace taxmine
