#pragma once

// Scalar types shared by every module: exact rationals for coefficients,
// doubles for ordinary evaluation, and a 100-digit MPFR float for checks
// where kappa is small enough that double cancels catastrophically.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>

namespace helmlayer {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using HighPrecision =
    boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<100>,
                                  boost::multiprecision::et_off>;

/// Misuse of the algebra: mismatched modes/bases/dimensions, oscillator
/// multipliers, out-of-range axes.
class StructuralError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A negative power of an oscillator factor whose value is below the
/// configured floor.
class ConditioningError : public std::runtime_error {
 public:
  ConditioningError(std::string factor, double value);
  const std::string& factor() const noexcept { return factor_; }
  double value() const noexcept { return value_; }

 private:
  std::string factor_;
  double value_;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses "p", "-p" or "p/q" into a canonical rational. Rejects zero
/// denominators and anything that is not an integer ratio.
Rational parse_rational(std::string_view text);

/// "p/q" with q > 0, or "p" when q == 1.
std::string format_rational(const Rational& q);

/// Short scientific form ("1.234e-11") for diagnostics.
std::string format_scientific(double v);

Rational factorial(unsigned k);
Rational binomial(unsigned n, unsigned k);

template <typename Real>
Real to_real(const Rational& q) {
  if constexpr (std::is_same_v<Real, double>) {
    return q.convert_to<double>();
  } else {
    return Real(q);
  }
}

template <typename Real>
Real ipow(Real base, int exponent) {
  if (exponent < 0) return Real(1) / ipow(base, -exponent);
  Real result(1);
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

}  // namespace helmlayer
