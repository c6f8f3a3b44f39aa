#pragma once

#include "helmlayer/qpoly.hpp"

namespace helmlayer {

/// d/dx_axis, axis in [0, n).
QuasiPoly ddx(const QuasiPoly& q, std::size_t axis);
QuasiPoly ddy(const QuasiPoly& q);
/// d/dkappa. Oscillator arguments kappa*y and kappa*a contribute factors y
/// and a through the chain rule.
QuasiPoly ddkappa(const QuasiPoly& q);
QuasiPoly laplacian(const QuasiPoly& q);

/// One step of the kernel recurrence:
///   next = s * (2m - 1) * kappa^-1 * d/dkappa prev,
/// with s = -1 in hyperbolic mode and +1 in circular mode.
QuasiPoly kappa_recurrence_step(const QuasiPoly& prev, int m);

/// Applies (s / kappa) d/dkappa once, without the (2m - 1) factor.
QuasiPoly signed_kappa_operator(const QuasiPoly& q);

/// Laplacian(q) + nu * q with nu = sigma * kappa^2.
QuasiPoly helmholtz(const QuasiPoly& q);

}  // namespace helmlayer
