// Exact rational arithmetic used throughout: weights, distances and matching
// values are kept as fractions end to end so that results like 31/72 are
// reproduced without tolerances.
#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>

namespace bbpmcs {

using Rational = boost::rational<long long>;

/// Renders `r` as "p/q", or just "p" when the denominator is 1.
std::string to_fraction_string(const Rational& r);

/// Fixed-point decimal rendering with `digits` fractional digits (truncation-free,
/// round-half-away-from-zero).
std::string to_decimal_string(const Rational& r, int digits = 6);

/// Parses "p", "p/q" or a decimal such as "0.25" into an exact rational.
/// Throws ParseError on malformed input or a zero denominator.
Rational parse_rational(const std::string& text);

}  // namespace bbpmcs
