#pragma once

#include "helmlayer/qpoly.hpp"

#include <string>

namespace helmlayer {

/// Plain-text form, e.g. "-y*cosh(lambda*y)/(lambda*sinh(lambda*a))".
/// The parameter is spelled "lambda" in hyperbolic mode and "mu" in
/// circular mode. Deterministic: follows the canonical term order.
std::string render_text(const QuasiPoly& q);

/// LaTeX markup using \frac, \sinh/\cosh (or \sin/\cos) and \lambda/\mu.
std::string render_latex(const QuasiPoly& q);

}  // namespace helmlayer
