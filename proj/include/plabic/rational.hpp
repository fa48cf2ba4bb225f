#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace plabic {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "p" or "p/q" with optional sign; q must be nonzero. Result is stored
// reduced with positive denominator (cpp_rational normalizes on construction).
Rational parse_rational(const std::string& text);

// Formats as "p" when the denominator is 1, else "p/q" reduced.
std::string format_rational(const Rational& value);

}  // namespace plabic
