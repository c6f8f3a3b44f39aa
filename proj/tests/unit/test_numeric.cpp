#include <doctest.h>

#include "helmlayer/numeric.hpp"

using namespace helmlayer;

TEST_CASE("parse_rational canonicalizes") {
  CHECK(parse_rational("6/4") == Rational(3) / 2);
  CHECK(format_rational(parse_rational("6/4")) == "3/2");
  CHECK(format_rational(parse_rational("-10/5")) == "-2");
  CHECK(format_rational(parse_rational("+7")) == "7");
  CHECK(format_rational(parse_rational("  0/9 ")) == "0");
  CHECK(parse_rational("123456789012345678901234567890/3") == Rational(Integer("41152263004115226300411522630")));
}

TEST_CASE("parse_rational rejects malformed input") {
  for (const char* bad : {"", "1/0", "abc", "1.5", "1/-2", "1//2", "/3", "3/", "--1", "1e3", "0x10"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_rational(bad), ParseError);
  }
}

TEST_CASE("factorial and binomial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(20) == Rational(Integer("2432902008176640000")));
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(6, 0) == 1);
  CHECK(binomial(6, 6) == 1);
  CHECK(binomial(3, 5) == 0);
}

TEST_CASE("ipow and to_real") {
  CHECK(ipow(2.0, 10) == doctest::Approx(1024.0));
  CHECK(ipow(2.0, -2) == doctest::Approx(0.25));
  CHECK(ipow(3.0, 0) == 1.0);
  CHECK(to_real<double>(Rational(1) / 4) == 0.25);
  const HighPrecision third = to_real<HighPrecision>(Rational(1) / 3);
  CHECK(abs(third * 3 - 1) < HighPrecision("1e-95"));
}

TEST_CASE("format_scientific") {
  CHECK(format_scientific(1.5e-11) == "1.500e-11");
  CHECK(format_scientific(0.0) == "0.000e+00");
}
