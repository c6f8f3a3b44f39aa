#include "helmlayer/numeric.hpp"

#include <cctype>
#include <cstdio>

namespace helmlayer {

ConditioningError::ConditioningError(std::string factor, double value)
    : std::runtime_error("conditioning: " + factor + " = " + format_scientific(value) +
                         " is below the floor while raised to a negative power"),
      factor_(std::move(factor)),
      value_(value) {}

namespace {

Integer parse_integer(std::string_view digits, bool allow_sign, std::string_view whole) {
  std::size_t start = 0;
  if (allow_sign && !digits.empty() && (digits[0] == '-' || digits[0] == '+')) start = 1;
  if (start == digits.size()) throw ParseError("malformed rational: '" + std::string(whole) + "'");
  for (std::size_t i = start; i < digits.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(digits[i])))
      throw ParseError("malformed rational: '" + std::string(whole) + "'");
  }
  std::string s(digits[0] == '+' ? digits.substr(1) : digits);
  return Integer(s);
}

}  // namespace

std::string format_scientific(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty rational");

  const auto slash = text.find('/');
  const Integer num = parse_integer(text.substr(0, slash), true, text);
  Integer den(1);
  if (slash != std::string_view::npos) {
    den = parse_integer(text.substr(slash + 1), false, text);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  }
  return Rational(num) / Rational(den);
}

std::string format_rational(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

Rational factorial(unsigned k) {
  Integer r(1);
  for (unsigned i = 2; i <= k; ++i) r *= i;
  return Rational(r);
}

Rational binomial(unsigned n, unsigned k) {
  if (k > n) return Rational(0);
  Integer r(1);
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return Rational(r);
}

}  // namespace helmlayer
