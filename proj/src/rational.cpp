#include "plabic/rational.hpp"

#include <cctype>

#include "plabic/error.hpp"

namespace plabic {

namespace {

Integer parse_integer(const std::string& text) {
  if (text.empty()) throw ParseError("empty integer literal");
  std::size_t start = (text[0] == '+' || text[0] == '-') ? 1 : 0;
  if (start == text.size()) throw ParseError("bare sign in integer literal");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw ParseError("bad integer literal '" + text + "'");
    }
  }
  return Integer(text);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(text));
  const Integer num = parse_integer(text.substr(0, slash));
  const Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in '" + text + "'");
  return Rational(num, den);
}

std::string format_rational(const Rational& value) {
  const Integer num = boost::multiprecision::numerator(value);
  const Integer den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace plabic
