#include "helmlayer/calculus.hpp"

namespace helmlayer {

namespace {

// Derivative sign of the "C" oscillator: C' = +S (cosh) or -S (cos).
int cosine_sign(Mode m) { return m == Mode::Hyperbolic ? 1 : -1; }

}  // namespace

QuasiPoly ddx(const QuasiPoly& q, std::size_t axis) {
  if (axis >= q.dimension()) throw StructuralError("ddx: axis out of range");
  std::vector<Term> out;
  out.reserve(q.size());
  for (const Term& t : q.terms()) {
    const int k = t.mono.alpha[axis];
    if (k == 0) continue;
    Term r = t;
    r.coeff *= k;
    r.mono.alpha = t.mono.alpha.with(axis, k - 1);
    out.push_back(std::move(r));
  }
  return normalize(q.mode(), q.dimension(), q.basis(), std::move(out));
}

QuasiPoly ddy(const QuasiPoly& q) {
  const int cs = cosine_sign(q.mode());
  std::vector<Term> out;
  out.reserve(2 * q.size());
  for (const Term& t : q.terms()) {
    if (t.mono.j > 0) {
      Term r = t;
      r.coeff *= t.mono.j;
      --r.mono.j;
      out.push_back(std::move(r));
    }
    if (t.mono.oy != YOsc::One) {
      Term r = t;
      ++r.mono.e;
      if (t.mono.oy == YOsc::Sy) {
        r.mono.oy = YOsc::Cy;
      } else {
        r.mono.oy = YOsc::Sy;
        r.coeff *= cs;
      }
      out.push_back(std::move(r));
    }
  }
  return normalize(q.mode(), q.dimension(), q.basis(), std::move(out));
}

QuasiPoly ddkappa(const QuasiPoly& q) {
  const int cs = cosine_sign(q.mode());
  std::vector<Term> out;
  out.reserve(4 * q.size());
  for (const Term& t : q.terms()) {
    if (t.mono.e != 0) {
      Term r = t;
      r.coeff *= t.mono.e;
      --r.mono.e;
      out.push_back(std::move(r));
    }
    if (t.mono.oy != YOsc::One) {
      Term r = t;
      ++r.mono.j;
      if (t.mono.oy == YOsc::Sy) {
        r.mono.oy = YOsc::Cy;
      } else {
        r.mono.oy = YOsc::Sy;
        r.coeff *= cs;
      }
      out.push_back(std::move(r));
    }
    if (t.mono.sa != 0) {
      // d S(ka)^sa = sa * S^(sa-1) * a * C
      Term r = t;
      r.coeff *= t.mono.sa;
      --r.mono.sa;
      ++r.mono.ca;
      ++r.mono.p;
      out.push_back(std::move(r));
    }
    if (t.mono.ca != 0) {
      // d C(ka)^ca = ca * C^(ca-1) * (+/-) a * S
      Term r = t;
      r.coeff *= t.mono.ca * cs;
      --r.mono.ca;
      ++r.mono.sa;
      ++r.mono.p;
      out.push_back(std::move(r));
    }
  }
  return normalize(q.mode(), q.dimension(), q.basis(), std::move(out));
}

QuasiPoly laplacian(const QuasiPoly& q) {
  QuasiPoly sum = ddy(ddy(q));
  for (std::size_t i = 0; i < q.dimension(); ++i) sum = add(sum, ddx(ddx(q, i), i));
  return sum;
}

QuasiPoly signed_kappa_operator(const QuasiPoly& q) {
  const int s = q.mode() == Mode::Hyperbolic ? -1 : 1;
  return mul_plain(ddkappa(q), plain_term(Rational(s), MultiIndex(q.dimension()), 0, -1));
}

QuasiPoly kappa_recurrence_step(const QuasiPoly& prev, int m) {
  return scale(signed_kappa_operator(prev), Rational(2 * m - 1));
}

QuasiPoly helmholtz(const QuasiPoly& q) {
  const Term nu = plain_term(Rational(nu_sign(q.mode())), MultiIndex(q.dimension()), 0, 2);
  return add(laplacian(q), mul_plain(q, nu));
}

}  // namespace helmlayer
