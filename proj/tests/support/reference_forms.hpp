#pragma once

// Hand transcriptions of the reference closed forms, written term by term.
// Nothing here calls the kernel generator or the solver, so comparisons
// against them are independent.
//
// Where a reference form is known to contain a typo, both the literal and the
// corrected transcription are kept and the test says which one it uses.

#include "fixtures.hpp"

#include <array>
#include <cmath>
#include <functional>
#include <string>

namespace helmlayer::testing::reference {

constexpr YOsc Sy = YOsc::Sy;
constexpr YOsc Cy = YOsc::Cy;

inline constexpr Mode H = Mode::Hyperbolic;
inline constexpr Mode C = Mode::Circular;
inline constexpr Basis SinhB = Basis::SinhDenominator;
inline constexpr Basis CoshB = Basis::CoshDenominator;

// ---- Dirichlet kernels, hyperbolic ----

inline QuasiPoly p0_dirichlet(Mode m) { return build(m, 1, SinhB, {term1(1, 0, {.oy = Sy, .sa = -1})}); }

inline QuasiPoly p2_dirichlet_hyperbolic() {
  return build(H, 1, SinhB,
               {term1(-1, 0, {.j = 1, .e = -1, .oy = Cy, .sa = -1}),
                term1(1, 0, {.e = -1, .p = 1, .oy = Sy, .sa = -2, .ca = 1})});
}

inline QuasiPoly p4_dirichlet_hyperbolic() {
  return build(H, 1, SinhB,
               {term1(-3, 0, {.j = 1, .e = -3, .oy = Cy, .sa = -1}),
                term1(3, 0, {.j = 2, .e = -2, .oy = Sy, .sa = -1}),
                term1(-6, 0, {.j = 1, .e = -2, .p = 1, .oy = Cy, .sa = -2, .ca = 1}),
                term1(3, 0, {.e = -3, .p = 1, .oy = Sy, .sa = -2, .ca = 1}),
                term1(6, 0, {.e = -2, .p = 2, .oy = Sy, .sa = -3, .ca = 2}),
                term1(-3, 0, {.e = -2, .p = 2, .oy = Sy, .sa = -1})});
}

/// u_2 = x^2 p_0 + p_2 for the Dirichlet problem; the circular display flips
/// the signs of the two correction terms.
inline QuasiPoly u2_dirichlet(Mode m) {
  const int s = m == H ? 1 : -1;
  return build(m, 1, SinhB,
               {term1(1, 2, {.oy = Sy, .sa = -1}),
                term1(-s, 0, {.j = 1, .e = -1, .oy = Cy, .sa = -1}),
                term1(s, 0, {.e = -1, .p = 1, .oy = Sy, .sa = -2, .ca = 1})});
}

// ---- Dirichlet-Neumann kernels, hyperbolic ----

inline QuasiPoly u0_dn_hyperbolic() {
  return build(H, 1, CoshB, {term1(1, 0, {.oy = Cy}), term1(-1, 0, {.oy = Sy, .sa = 1, .ca = -1})});
}

inline QuasiPoly u1_dn_hyperbolic() {
  return build(H, 1, CoshB, {term1(1, 1, {.oy = Cy}), term1(-1, 1, {.oy = Sy, .sa = 1, .ca = -1})});
}

/// The last reference term has cos^2 in the denominator; read as cosh^2.
inline QuasiPoly u2_dn_hyperbolic() {
  return build(H, 1, CoshB,
               {term1(1, 2, {.oy = Cy}),
                term1(-1, 2, {.oy = Sy, .sa = 1, .ca = -1}),
                term1(1, 0, {.j = 1, .e = -1, .oy = Cy, .sa = 1, .ca = -1}),
                term1(1, 0, {.e = -1, .p = 1, .oy = Sy}),
                term1(-1, 0, {.j = 1, .e = -1, .oy = Sy}),
                term1(-1, 0, {.e = -1, .p = 1, .oy = Sy, .sa = 2, .ca = -2})});
}

inline QuasiPoly q0_dn(Mode m) { return build(m, 1, CoshB, {term1(1, 0, {.e = -1, .oy = Sy, .ca = -1})}); }

inline QuasiPoly v1_dn_hyperbolic() { return build(H, 1, CoshB, {term1(1, 1, {.e = -1, .oy = Sy, .ca = -1})}); }

inline QuasiPoly v2_dn_hyperbolic() {
  return build(H, 1, CoshB,
               {term1(1, 2, {.e = -1, .oy = Sy, .ca = -1}),
                term1(-1, 0, {.j = 1, .e = -2, .oy = Cy, .ca = -1}),
                term1(1, 0, {.e = -3, .oy = Sy, .ca = -1}),
                term1(1, 0, {.e = -2, .p = 1, .oy = Sy, .sa = 1, .ca = -2})});
}

/// Circular v_2 exactly as given in the reference. It is not a solution: the x^2 term lacks
/// 1/mu and the y cos and sin/mu^3 terms carry the hyperbolic signs.
inline QuasiPoly v2_dn_circular_literal() {
  return build(C, 1, CoshB,
               {term1(1, 2, {.oy = Sy, .ca = -1}),
                term1(-1, 0, {.j = 1, .e = -2, .oy = Cy, .ca = -1}),
                term1(1, 0, {.e = -3, .oy = Sy, .ca = -1}),
                term1(1, 0, {.e = -2, .p = 1, .oy = Sy, .sa = 1, .ca = -2})});
}

/// Circular v_2 with the three defects repaired; its mu -> 0 limit is the
/// reference x^2 y - y^3/3 + a^2 y.
inline QuasiPoly v2_dn_circular_corrected() {
  return build(C, 1, CoshB,
               {term1(1, 2, {.e = -1, .oy = Sy, .ca = -1}),
                term1(1, 0, {.j = 1, .e = -2, .oy = Cy, .ca = -1}),
                term1(-1, 0, {.e = -3, .oy = Sy, .ca = -1}),
                term1(1, 0, {.e = -2, .p = 1, .oy = Sy, .sa = 1, .ca = -2})});
}

// ---- Example 1: particular solution in R^2 ----

/// 1/nu = s kappa^-2, 1/nu^2 = kappa^-4, 1/nu^3 = s kappa^-6 with s the
/// sign of nu.
inline QuasiPoly example1(Mode m, Basis b = SinhB) {
  const int s = nu_sign(m);
  return build(m, 2, b,
               {term(3 * s, {2, 1}, {.j = 2, .e = -2}), term(5 * s, {1, 2}, {.j = 1, .e = -2}),
                term(-6, {0, 1}, {.j = 2, .e = -4}), term(-10, {1, 0}, {.j = 1, .e = -4}),
                term(-6, {2, 1}, {.e = -4}), term(24 * s, {0, 1}, {.e = -6})});
}

// ---- Example 2: Dirichlet, P = x^2 y^2, hyperbolic ----

inline QuasiPoly example2_particular() {
  return build(H, 1, SinhB,
               {term1(-1, 2, {.j = 2, .e = -2}), term1(-2, 0, {.j = 2, .e = -4}), term1(-2, 2, {.e = -4}),
                term1(-8, 0, {.e = -6})});
}

/// The particular solution with the misprinted constant -8/lambda^4.
inline QuasiPoly example2_particular_misprint() {
  return build(H, 1, SinhB,
               {term1(-1, 2, {.j = 2, .e = -2}), term1(-2, 0, {.j = 2, .e = -4}), term1(-2, 2, {.e = -4}),
                term1(-8, 0, {.e = -4})});
}

inline QuasiPoly example2() {
  return build(
      H, 1, SinhB,
      {term1(-1, 2, {.j = 2, .e = -2}), term1(-2, 0, {.j = 2, .e = -4}), term1(-2, 2, {.e = -4}),
       term1(-8, 0, {.e = -6}),
       term1(1, 2, {.e = -2, .p = 2, .oy = Sy, .sa = -1}),
       term1(-1, 0, {.j = 1, .e = -3, .p = 2, .oy = Cy, .sa = -1}),
       term1(1, 0, {.e = -3, .p = 3, .oy = Sy, .sa = -2, .ca = 1}),
       // sinh(ly)(2x^2 + 2a^2 - 2x^2 cosh(la)) / (l^4 sinh(la))
       term1(2, 2, {.e = -4, .oy = Sy, .sa = -1}), term1(2, 0, {.e = -4, .p = 2, .oy = Sy, .sa = -1}),
       term1(-2, 2, {.e = -4, .oy = Sy, .sa = -1, .ca = 1}),
       // 2y cosh(ly)(cosh(la) - 1) / (l^5 sinh(la))
       term1(2, 0, {.j = 1, .e = -5, .oy = Cy, .sa = -1, .ca = 1}),
       term1(-2, 0, {.j = 1, .e = -5, .oy = Cy, .sa = -1}),
       // 2a sinh(ly) cosh(la)(1 - cosh(la)) / (l^5 sinh^2(la))
       term1(2, 0, {.e = -5, .p = 1, .oy = Sy, .sa = -2, .ca = 1}),
       term1(-2, 0, {.e = -5, .p = 1, .oy = Sy, .sa = -2, .ca = 2}),
       // 8 sinh(ly)(1 - cosh(la)) / (l^6 sinh(la))
       term1(8, 0, {.e = -6, .oy = Sy, .sa = -1}), term1(-8, 0, {.e = -6, .oy = Sy, .sa = -1, .ca = 1}),
       term1(2, 2, {.e = -4, .oy = Cy}),
       term1(2, 0, {.e = -5, .p = 1, .oy = Sy}), term1(-2, 0, {.j = 1, .e = -5, .oy = Sy}),
       term1(8, 0, {.e = -6, .oy = Cy})});
}

inline double example2_value(double x, double y, double l, double a) {
  const double S = std::sinh(l * a), Ca = std::cosh(l * a), sy = std::sinh(l * y), cy = std::cosh(l * y);
  const double l2 = l * l, l3 = l2 * l, l4 = l3 * l, l5 = l4 * l, l6 = l5 * l;
  const double x2 = x * x, a2 = a * a;
  return -x2 * y * y / l2 - 2 * y * y / l4 - 2 * x2 / l4 - 8 / l6 + a2 * x2 * sy / (l2 * S) -
         a2 * y * cy / (l3 * S) + a2 * a * sy * Ca / (l3 * S * S) + sy * (2 * x2 + 2 * a2 - 2 * x2 * Ca) / (l4 * S) +
         2 * y * cy * (Ca - 1) / (l5 * S) + 2 * a * sy * Ca * (1 - Ca) / (l5 * S * S) + 8 * sy * (1 - Ca) / (l6 * S) +
         2 * x2 * cy / l4 + 2 * (a - y) * sy / l5 + 8 * cy / l6;
}

// ---- Example 3: Dirichlet-Neumann, P = x^2 y^2, hyperbolic ----

inline QuasiPoly example3() {
  return build(H, 1, CoshB,
               {term1(-1, 2, {.j = 2, .e = -2}), term1(-2, 0, {.j = 2, .e = -4}), term1(-2, 2, {.e = -4}),
                term1(-8, 0, {.e = -6}),
                term1(2, 2, {.e = -4, .oy = Cy}),
                term1(-2, 2, {.e = -4, .oy = Sy, .sa = 1, .ca = -1}),
                term1(2, 0, {.j = 1, .e = -5, .oy = Cy, .sa = 1, .ca = -1}),
                term1(2, 0, {.e = -5, .p = 1, .oy = Sy}),
                term1(-2, 0, {.j = 1, .e = -5, .oy = Sy}),
                term1(-2, 0, {.e = -5, .p = 1, .oy = Sy, .sa = 2, .ca = -2}),
                // 8 cosh(l(a - y)) / (l^6 cosh(la)), expanded by hand
                term1(8, 0, {.e = -6, .oy = Cy}),
                term1(-8, 0, {.e = -6, .oy = Sy, .sa = 1, .ca = -1}),
                term1(2, 2, {.e = -3, .p = 1, .oy = Sy, .ca = -1}),
                term1(-2, 0, {.j = 1, .e = -4, .p = 1, .oy = Cy, .ca = -1}),
                term1(6, 0, {.e = -5, .p = 1, .oy = Sy, .ca = -1}),
                term1(2, 0, {.e = -4, .p = 2, .oy = Sy, .sa = 1, .ca = -2})});
}

inline double example3_value(double x, double y, double l, double a) {
  const double S = std::sinh(l * a), Ca = std::cosh(l * a), sy = std::sinh(l * y), cy = std::cosh(l * y);
  const double l2 = l * l, l3 = l2 * l, l4 = l3 * l, l5 = l4 * l, l6 = l5 * l;
  const double x2 = x * x;
  return -x2 * y * y / l2 - 2 * y * y / l4 - 2 * x2 / l4 - 8 / l6 + 2 * x2 * cy / l4 - 2 * x2 * S * sy / (l4 * Ca) +
         2 * y * S * cy / (l5 * Ca) + 2 * a * sy / l5 - 2 * y * sy / l5 - 2 * a * S * S * sy / (l5 * Ca * Ca) +
         8 * std::cosh(l * (a - y)) / (l6 * Ca) + 2 * a * x2 * sy / (l3 * Ca) - 2 * a * y * cy / (l4 * Ca) +
         6 * a * sy / (l5 * Ca) + 2 * a * a * S * sy / (l4 * Ca * Ca);
}

// ---- Example 4: Dirichlet-Neumann in R^3, P = x^(2,1,1) y^3, circular, a = 1 ----

inline QuasiPoly example4_unit_width() {
  const MultiIndex A{2, 1, 1};
  const MultiIndex B{0, 1, 1};
  return build(C, 3, CoshB,
               {term(1, A, {.j = 3, .e = -2}), term(-6, A, {.j = 1, .e = -4}),
                term(6, A, {.e = -5, .oy = Sy, .ca = -1}), term(-3, A, {.e = -3, .oy = Sy, .ca = -1}),
                term(-2, B, {.j = 3, .e = -4}), term(24, B, {.j = 1, .e = -6}),
                term(9, B, {.e = -5, .oy = Sy, .ca = -1}), term(-30, B, {.e = -7, .oy = Sy, .ca = -1}),
                term(6, B, {.j = 1, .e = -6, .oy = Cy, .ca = -1}), term(-3, B, {.j = 1, .e = -4, .oy = Cy, .ca = -1}),
                term(6, B, {.e = -6, .oy = Sy, .sa = 1, .ca = -2}),
                term(-3, B, {.e = -4, .oy = Sy, .sa = 1, .ca = -2})});
}

inline double example4_value(const std::array<double, 3>& x, double y, double mu) {
  const double sy = std::sin(mu * y), cy = std::cos(mu * y), s = std::sin(mu), c = std::cos(mu);
  const double m2 = mu * mu, m3 = m2 * mu, m4 = m3 * mu, m5 = m4 * mu, m6 = m5 * mu, m7 = m6 * mu;
  const double xa = x[0] * x[0] * x[1] * x[2];
  const double xb = x[1] * x[2];
  return (y * y * y / m2 - 6 * y / m4 + 6 * sy / (m5 * c) - 3 * sy / (m3 * c)) * xa +
         (-2 * y * y * y / m4 + 24 * y / m6 + 9 * sy / (m5 * c) - 30 * sy / (m7 * c) + 6 * y * cy / (m6 * c)) * xb +
         (-3 * y * cy / (m4 * c) + 6 * sy * s / (m6 * c * c) - 3 * sy * s / (m4 * c * c)) * xb;
}

// ---- small-kappa limits ----

struct LimitCase {
  std::string name;
  QuasiPoly u;
  QuasiPoly limit;
  /// Width to sample at; Example 4 is given for a = 1 only.
  double a = 1.0;
};

/// Plain polynomial in (x, y, a) in one dimension.
inline QuasiPoly limit1(Mode m, Basis b, std::vector<Term> terms) { return build(m, 1, b, std::move(terms)); }

inline Term lt(const Rational& c, int xk, int j, int p) { return term1(c, xk, {.j = j, .p = p}); }

inline QuasiPoly limit_example2() {
  return limit1(H, SinhB,
                {lt(R("1/12"), 2, 4, 0), lt(R("-1/12"), 2, 1, 3), lt(R("-1/180"), 0, 6, 0), lt(R("1/36"), 0, 3, 3),
                 lt(R("-1/45"), 0, 1, 5)});
}

inline QuasiPoly limit_example3() {
  return limit1(H, CoshB,
                {lt(R("1/12"), 2, 4, 0), lt(R("-1/3"), 2, 1, 3), lt(R("-1/180"), 0, 6, 0), lt(R("1/9"), 0, 3, 3),
                 lt(R("-3/10"), 0, 1, 5)});
}

inline QuasiPoly limit_example4() {
  const MultiIndex A{2, 1, 1};
  const MultiIndex B{0, 1, 1};
  return build(C, 3, CoshB,
               {term(R("1/20"), A, {.j = 5}), term(R("-1/4"), A, {.j = 1}), term(R("-1/420"), B, {.j = 7}),
                term(R("1/12"), B, {.j = 3}), term(R("-7/30"), B, {.j = 1})});
}

/// y/a, -y(y^2 - a^2)/(3a), y(3y^4 - 10y^2a^2 + 7a^4)/(15a).
inline QuasiPoly limit_p0(Mode m) { return limit1(m, SinhB, {lt(1, 0, 1, -1)}); }
inline QuasiPoly limit_p2(Mode m) { return limit1(m, SinhB, {lt(R("-1/3"), 0, 3, -1), lt(R("1/3"), 0, 1, 1)}); }
inline QuasiPoly limit_p4(Mode m) {
  return limit1(m, SinhB, {lt(R("1/5"), 0, 5, -1), lt(R("-2/3"), 0, 3, 1), lt(R("7/15"), 0, 1, 3)});
}
/// y(3x^2 - y^2 + a^2)/(3a).
inline QuasiPoly limit_u2_dirichlet(Mode m) {
  return limit1(m, SinhB, {lt(1, 2, 1, -1), lt(R("-1/3"), 0, 3, -1), lt(R("1/3"), 0, 1, 1)});
}
inline QuasiPoly limit_u2_dn(Mode m) { return limit1(m, CoshB, {lt(1, 2, 0, 0), lt(2, 0, 1, 1), lt(-1, 0, 2, 0)}); }
/// x^2 y - y^3/3 + a^2 y.
inline QuasiPoly limit_v2_dn(Mode m) {
  return limit1(m, CoshB, {lt(1, 2, 1, 0), lt(R("-1/3"), 0, 3, 0), lt(1, 0, 1, 2)});
}

}  // namespace helmlayer::testing::reference
