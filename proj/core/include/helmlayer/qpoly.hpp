#pragma once

// Quasipolynomials in (x, y) with symbolic parameters kappa and a.
//
// Every value is a finite sum of terms
//
//   c * x^alpha * y^j * kappa^e * a^p * Y(kappa y) * S(kappa a)^sa * C(kappa a)^ca
//
// where c is an exact rational, Y is 1, S or C, and (S, C) is (sinh, cosh) in
// hyperbolic mode (nu = -kappa^2) or (sin, cos) in circular mode
// (nu = +kappa^2). A QuasiPoly is always held in canonical form; there is no
// way to observe an unnormalized one.

#include "helmlayer/numeric.hpp"

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace helmlayer {

enum class Mode : std::uint8_t { Hyperbolic, Circular };

/// Sign sigma in nu = sigma * kappa^2.
constexpr int nu_sign(Mode m) noexcept { return m == Mode::Hyperbolic ? -1 : 1; }

/// Which oscillator power is kept free in canonical form. With
/// SinhDenominator, C(kappa a)^2 is rewritten through the Pythagorean
/// identity so every term has ca in {0, 1}; CoshDenominator is the mirror.
enum class Basis : std::uint8_t { SinhDenominator, CoshDenominator };

enum class YOsc : std::uint8_t { One, Sy, Cy };

class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::size_t n) : exps_(n, 0) {}
  MultiIndex(std::initializer_list<int> exps);
  explicit MultiIndex(std::vector<int> exps);

  std::size_t size() const noexcept { return exps_.size(); }
  int operator[](std::size_t i) const { return exps_[i]; }
  int total() const noexcept;
  /// Componentwise floor(k_i / 2).
  MultiIndex half() const;
  bool dominated_by(const MultiIndex& other) const;
  const std::vector<int>& exponents() const noexcept { return exps_; }

  auto begin() const noexcept { return exps_.begin(); }
  auto end() const noexcept { return exps_.end(); }

  MultiIndex& operator+=(const MultiIndex& other);
  MultiIndex& operator-=(const MultiIndex& other);
  MultiIndex scaled(int factor) const;
  MultiIndex with(std::size_t i, int value) const;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend std::strong_ordering operator<=>(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<int> exps_;
};

inline MultiIndex operator+(MultiIndex a, const MultiIndex& b) { return a += b; }
inline MultiIndex operator-(MultiIndex a, const MultiIndex& b) { return a -= b; }

/// prod_i C(k_i, j_i)
Rational binomial(const MultiIndex& k, const MultiIndex& j);
/// prod_i k_i!
Rational factorial(const MultiIndex& k);

/// Visits every multiindex m with 0 <= m <= bound componentwise, in
/// lexicographic order.
template <typename Fn>
void for_each_dominated(const MultiIndex& bound, Fn&& fn) {
  std::vector<int> cur(bound.size(), 0);
  while (true) {
    fn(MultiIndex(cur));
    std::size_t i = cur.size();
    while (i > 0) {
      --i;
      if (cur[i] < bound[i]) {
        ++cur[i];
        break;
      }
      cur[i] = 0;
      if (i == 0) return;
    }
    if (cur.empty()) return;
  }
}

/// Everything in a term except its coefficient.
struct Monomial {
  MultiIndex alpha;
  int j = 0;
  int e = 0;
  int p = 0;
  YOsc oy = YOsc::One;
  int sa = 0;
  int ca = 0;

  bool is_plain() const noexcept { return oy == YOsc::One && sa == 0 && ca == 0; }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Canonical order: (|alpha|, alpha, j, e, p, oy, sa, ca).
  friend std::strong_ordering operator<=>(const Monomial& l, const Monomial& r);
};

struct Term {
  Rational coeff;
  Monomial mono;

  friend bool operator==(const Term&, const Term&) = default;
};

class QuasiPoly {
 public:
  /// The zero polynomial in n = 0 dimensions.
  QuasiPoly() = default;
  /// The zero polynomial.
  QuasiPoly(Mode mode, std::size_t n, Basis basis);

  Mode mode() const noexcept { return mode_; }
  std::size_t dimension() const noexcept { return n_; }
  Basis basis() const noexcept { return basis_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// No oscillators at all (kappa and a powers allowed).
  bool is_oscillator_free() const noexcept;
  /// No oscillators, no kappa and no a: a polynomial in (x, y) only.
  bool is_plain_polynomial() const noexcept;
  /// Largest y-oscillator degree over all terms (0 or 1 by construction).
  int y_oscillator_degree() const noexcept;

  friend bool operator==(const QuasiPoly&, const QuasiPoly&) = default;

 private:
  friend QuasiPoly normalize(Mode, std::size_t, Basis, std::vector<Term>);

  Mode mode_ = Mode::Hyperbolic;
  std::size_t n_ = 0;
  Basis basis_ = Basis::SinhDenominator;
  std::vector<Term> terms_;
};

/// Builds the canonical form of an arbitrary term list: Pythagorean
/// reduction for the basis, like-term merge, zero removal, sort.
/// Throws StructuralError on malformed terms (wrong alpha length, negative x
/// or y exponents, negative cosh/cos powers under SinhDenominator or
/// negative sinh/sin powers under CoshDenominator).
QuasiPoly normalize(Mode mode, std::size_t n, Basis basis, std::vector<Term> terms);
QuasiPoly normalize(const QuasiPoly& q);

/// A plain monomial c * x^alpha * y^j * kappa^e * a^p.
Term plain_term(Rational coeff, MultiIndex alpha, int j = 0, int e = 0, int p = 0);

QuasiPoly constant(Mode mode, std::size_t n, Basis basis, const Rational& c);

QuasiPoly add(const QuasiPoly& q1, const QuasiPoly& q2);
QuasiPoly subtract(const QuasiPoly& q1, const QuasiPoly& q2);
QuasiPoly negate(const QuasiPoly& q);
QuasiPoly scale(const QuasiPoly& q, const Rational& c);
/// Multiplies by a plain monomial. Oscillator-bearing multipliers are
/// rejected so the y-oscillator degree stays at most one.
QuasiPoly mul_plain(const QuasiPoly& q, const Term& t);
/// Multiplies by an oscillator-free expression, term by term.
QuasiPoly mul_plain(const QuasiPoly& q, const QuasiPoly& plain);
/// Same value, new mode/basis tag. Only valid for oscillator-free input.
QuasiPoly retag(const QuasiPoly& q, Mode mode, Basis basis);

inline QuasiPoly operator+(const QuasiPoly& l, const QuasiPoly& r) { return add(l, r); }
inline QuasiPoly operator-(const QuasiPoly& l, const QuasiPoly& r) { return subtract(l, r); }
inline QuasiPoly operator-(const QuasiPoly& q) { return negate(q); }
inline QuasiPoly operator*(const Rational& c, const QuasiPoly& q) { return scale(q, c); }

enum class YTarget : std::uint8_t { Zero, A };

/// Substitutes y = 0 or y = a.
QuasiPoly subst_y(const QuasiPoly& q, YTarget target);
/// Substitutes y := a - y, expanding powers binomially and oscillators by the
/// addition formulas.
QuasiPoly reflect_y(const QuasiPoly& q);

/// Splits q by x-exponent: q = sum_k coefficient_k * x^k, with each
/// coefficient carrying alpha = 0. Ordered by the canonical order on k.
std::vector<std::pair<MultiIndex, QuasiPoly>> split_by_x(const QuasiPoly& q);

template <typename Real>
struct BasicEvalPoint {
  std::vector<Real> x;
  Real y{};
  Real kappa{};
  Real a{};
};
using EvalPoint = BasicEvalPoint<double>;
using HighPrecisionPoint = BasicEvalPoint<HighPrecision>;

HighPrecisionPoint to_high_precision(const EvalPoint& pt);

struct EvalOptions {
  /// |S(kappa a)| or |C(kappa a)| below this while raised to a negative
  /// power raises ConditioningError.
  double conditioning_floor = 1e-12;
};

template <typename Real>
Real eval(const QuasiPoly& q, const BasicEvalPoint<Real>& pt, const EvalOptions& opts = {});

/// sum_t |term_t(pt)|: the scale against which relative errors of q are
/// measured.
template <typename Real>
Real magnitude(const QuasiPoly& q, const BasicEvalPoint<Real>& pt, const EvalOptions& opts = {});

extern template double eval<double>(const QuasiPoly&, const EvalPoint&, const EvalOptions&);
extern template HighPrecision eval<HighPrecision>(const QuasiPoly&, const HighPrecisionPoint&,
                                                  const EvalOptions&);
extern template double magnitude<double>(const QuasiPoly&, const EvalPoint&, const EvalOptions&);
extern template HighPrecision magnitude<HighPrecision>(const QuasiPoly&, const HighPrecisionPoint&,
                                                       const EvalOptions&);

std::string to_string(Mode m);
std::string to_string(Basis b);

}  // namespace helmlayer
