#pragma once

// Small builders shared by the unit tests and the acceptance runner.

#include "helmlayer/kernels.hpp"
#include "helmlayer/qpoly.hpp"
#include "helmlayer/solver.hpp"

#include <cmath>
#include <random>
#include <vector>

namespace helmlayer::testing {

inline Rational R(const char* text) { return parse_rational(text); }
inline Rational R(long long v) { return Rational(v); }

struct Factors {
  int j = 0;
  int e = 0;
  int p = 0;
  YOsc oy = YOsc::One;
  int sa = 0;
  int ca = 0;
};

inline Term term(const Rational& c, MultiIndex alpha, Factors f = {}) {
  Term t;
  t.coeff = c;
  t.mono.alpha = std::move(alpha);
  t.mono.j = f.j;
  t.mono.e = f.e;
  t.mono.p = f.p;
  t.mono.oy = f.oy;
  t.mono.sa = f.sa;
  t.mono.ca = f.ca;
  return t;
}

/// One-dimensional shorthand: x^k.
inline Term term1(const Rational& c, int k, Factors f = {}) { return term(c, MultiIndex{k}, f); }

inline QuasiPoly build(Mode mode, std::size_t n, Basis basis, std::vector<Term> terms) {
  return normalize(mode, n, basis, std::move(terms));
}

/// Sets a = 1 by dropping every power of a (the oscillators keep their
/// symbolic kappa*a argument, evaluated later with a = 1).
inline QuasiPoly at_unit_width(const QuasiPoly& q) {
  std::vector<Term> terms(q.terms().begin(), q.terms().end());
  for (Term& t : terms) t.mono.p = 0;
  return normalize(q.mode(), q.dimension(), q.basis(), std::move(terms));
}

inline ProblemSpec make_spec(std::size_t n, Mode mode, Problem bc, Rational kappa, Rational a) {
  ProblemSpec spec;
  spec.n = n;
  spec.mode = mode;
  spec.bc = bc;
  spec.kappa = std::move(kappa);
  spec.a = std::move(a);
  return spec;
}

inline EvalPoint point(std::vector<double> x, double y, double kappa, double a) {
  return EvalPoint{std::move(x), y, kappa, a};
}

inline double relative_error(double got, double want, double scale) {
  const double s = std::max({std::abs(want), scale, 1e-300});
  return std::abs(got - want) / s;
}

/// Pseudo-random quasipolynomials for the property suites. Exponents are
/// kept small so evaluation stays well conditioned on the sampled points.
class QuasiPolyGenerator {
 public:
  explicit QuasiPolyGenerator(std::uint32_t seed) : rng_(seed) {}

  std::mt19937& rng() { return rng_; }

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  double uniform_real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  Rational coefficient() {
    const int num = uniform(-9, 9);
    const int den = uniform(1, 6);
    return Rational(num) / Rational(den);
  }

  Mode mode() { return uniform(0, 1) ? Mode::Circular : Mode::Hyperbolic; }
  Basis basis() { return uniform(0, 1) ? Basis::CoshDenominator : Basis::SinhDenominator; }

  Term random_term(std::size_t n, Basis basis, bool plain = false) {
    std::vector<int> alpha(n);
    for (int& k : alpha) k = uniform(0, 3);
    Factors f;
    f.j = uniform(0, 3);
    f.e = uniform(-4, 2);
    f.p = uniform(0, 2);
    if (!plain) {
      f.oy = static_cast<YOsc>(uniform(0, 2));
      // Only the free oscillator may carry a negative power.
      if (basis == Basis::SinhDenominator) {
        f.sa = uniform(-3, 2);
        f.ca = uniform(0, 3);
      } else {
        f.sa = uniform(0, 3);
        f.ca = uniform(-3, 2);
      }
    }
    return term(coefficient(), MultiIndex(std::move(alpha)), f);
  }

  QuasiPoly random(Mode mode, std::size_t n, Basis basis, int max_terms = 6, bool plain = false) {
    std::vector<Term> terms;
    const int count = uniform(0, max_terms);
    for (int i = 0; i < count; ++i) terms.push_back(random_term(n, basis, plain));
    return normalize(mode, n, basis, std::move(terms));
  }

  Term random_plain_term(std::size_t n) {
    std::vector<int> alpha(n);
    for (int& k : alpha) k = uniform(0, 2);
    return term(coefficient(), MultiIndex(std::move(alpha)), Factors{.j = uniform(0, 2), .e = uniform(-2, 2), .p = uniform(0, 1)});
  }

  MultiIndex multiindex(std::size_t n, int max_total) {
    std::vector<int> k(n, 0);
    const int total = uniform(0, max_total);
    for (int i = 0; i < total; ++i) ++k[static_cast<std::size_t>(uniform(0, static_cast<int>(n) - 1))];
    return MultiIndex(std::move(k));
  }

  /// kappa and a kept away from the circular eigenvalues of both problems.
  EvalPoint point(std::size_t n) {
    EvalPoint pt;
    pt.x.resize(n);
    for (double& v : pt.x) v = uniform_real(-1.0, 1.0);
    pt.a = uniform_real(0.5, 1.0);
    pt.kappa = uniform_real(0.5, 1.4);
    pt.y = uniform_real(0.05, 0.95) * pt.a;
    return pt;
  }

 private:
  std::mt19937 rng_;
};

}  // namespace helmlayer::testing
