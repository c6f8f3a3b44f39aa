#include "helmlayer/qpoly.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace helmlayer {

// ---------------------------------------------------------------------------
// MultiIndex

MultiIndex::MultiIndex(std::initializer_list<int> exps) : MultiIndex(std::vector<int>(exps)) {}

MultiIndex::MultiIndex(std::vector<int> exps) : exps_(std::move(exps)) {
  for (int k : exps_) {
    if (k < 0) throw StructuralError("multiindex entries must be non-negative");
  }
}

int MultiIndex::total() const noexcept { return std::accumulate(exps_.begin(), exps_.end(), 0); }

MultiIndex MultiIndex::half() const {
  std::vector<int> h(exps_.size());
  std::transform(exps_.begin(), exps_.end(), h.begin(), [](int k) { return k / 2; });
  return MultiIndex(std::move(h));
}

bool MultiIndex::dominated_by(const MultiIndex& other) const {
  if (other.size() != size()) return false;
  for (std::size_t i = 0; i < size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

MultiIndex& MultiIndex::operator+=(const MultiIndex& other) {
  if (other.size() != size()) throw StructuralError("multiindex length mismatch");
  for (std::size_t i = 0; i < size(); ++i) exps_[i] += other.exps_[i];
  return *this;
}

MultiIndex& MultiIndex::operator-=(const MultiIndex& other) {
  if (other.size() != size()) throw StructuralError("multiindex length mismatch");
  for (std::size_t i = 0; i < size(); ++i) {
    exps_[i] -= other.exps_[i];
    if (exps_[i] < 0) throw StructuralError("multiindex difference is negative");
  }
  return *this;
}

MultiIndex MultiIndex::scaled(int factor) const {
  std::vector<int> s(exps_);
  for (int& k : s) k *= factor;
  return MultiIndex(std::move(s));
}

MultiIndex MultiIndex::with(std::size_t i, int value) const {
  std::vector<int> s(exps_);
  s.at(i) = value;
  return MultiIndex(std::move(s));
}

Rational binomial(const MultiIndex& k, const MultiIndex& j) {
  if (k.size() != j.size()) throw StructuralError("multiindex length mismatch");
  Rational r(1);
  for (std::size_t i = 0; i < k.size(); ++i) {
    r *= binomial(static_cast<unsigned>(k[i]), static_cast<unsigned>(j[i]));
  }
  return r;
}

Rational factorial(const MultiIndex& k) {
  Rational r(1);
  for (int ki : k) r *= factorial(static_cast<unsigned>(ki));
  return r;
}

// ---------------------------------------------------------------------------
// Monomial order

std::strong_ordering operator<=>(const Monomial& l, const Monomial& r) {
  if (auto c = l.alpha.total() <=> r.alpha.total(); c != 0) return c;
  if (auto c = l.alpha <=> r.alpha; c != 0) return c;
  if (auto c = l.j <=> r.j; c != 0) return c;
  if (auto c = l.e <=> r.e; c != 0) return c;
  if (auto c = l.p <=> r.p; c != 0) return c;
  if (auto c = l.oy <=> r.oy; c != 0) return c;
  if (auto c = l.sa <=> r.sa; c != 0) return c;
  return l.ca <=> r.ca;
}

// ---------------------------------------------------------------------------
// QuasiPoly

QuasiPoly::QuasiPoly(Mode mode, std::size_t n, Basis basis) : mode_(mode), n_(n), basis_(basis) {}

bool QuasiPoly::is_oscillator_free() const noexcept {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.mono.is_plain(); });
}

bool QuasiPoly::is_plain_polynomial() const noexcept {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) {
    return t.mono.is_plain() && t.mono.e == 0 && t.mono.p == 0;
  });
}

int QuasiPoly::y_oscillator_degree() const noexcept {
  int d = 0;
  for (const Term& t : terms_) d = std::max(d, t.mono.oy == YOsc::One ? 0 : 1);
  return d;
}

namespace {

void validate(const Monomial& m, std::size_t n, Basis basis) {
  if (m.alpha.size() != n) throw StructuralError("term alpha length does not match dimension");
  if (m.j < 0) throw StructuralError("negative y exponent");
  if (basis == Basis::SinhDenominator && m.ca < 0)
    throw StructuralError("negative C(kappa a) power is not representable in the sinh-denominator basis");
  if (basis == Basis::CoshDenominator && m.sa < 0)
    throw StructuralError("negative S(kappa a) power is not representable in the cosh-denominator basis");
}

void require_compatible(const QuasiPoly& l, const QuasiPoly& r) {
  if (l.mode() != r.mode()) throw StructuralError("mode mismatch");
  if (l.dimension() != r.dimension()) throw StructuralError("dimension mismatch");
  if (l.basis() != r.basis()) throw StructuralError("basis mismatch");
}

}  // namespace

QuasiPoly normalize(Mode mode, std::size_t n, Basis basis, std::vector<Term> terms) {
  std::map<Monomial, Rational> acc;
  auto push = [&acc](Monomial m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = acc.try_emplace(std::move(m), c);
    if (!inserted) it->second += c;
  };

  // Squared free factor = u + v * (squared reduced factor):
  //   SinhDenominator: C^2 = 1 + S^2 (hyperbolic), 1 - S^2 (circular)
  //   CoshDenominator: S^2 = C^2 - 1 (hyperbolic), 1 - C^2 (circular)
  const bool sinh_basis = basis == Basis::SinhDenominator;
  const int u = sinh_basis ? 1 : (mode == Mode::Hyperbolic ? -1 : 1);
  const int v = mode == Mode::Hyperbolic ? 1 : -1;

  for (Term& t : terms) {
    validate(t.mono, n, basis);
    if (t.coeff == 0) continue;
    int& reducible = sinh_basis ? t.mono.ca : t.mono.sa;
    if (reducible < 2) {
      push(std::move(t.mono), t.coeff);
      continue;
    }
    const int k = reducible / 2;
    reducible %= 2;
    for (int i = 0; i <= k; ++i) {
      Monomial m = t.mono;
      (sinh_basis ? m.sa : m.ca) += 2 * i;
      Rational c = t.coeff * binomial(static_cast<unsigned>(k), static_cast<unsigned>(i));
      if (((k - i) % 2 == 1) && u < 0) c = -c;
      if ((i % 2 == 1) && v < 0) c = -c;
      push(std::move(m), c);
    }
  }

  QuasiPoly out(mode, n, basis);
  out.terms_.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) out.terms_.push_back(Term{c, m});
  }
  return out;
}

QuasiPoly normalize(const QuasiPoly& q) {
  return normalize(q.mode(), q.dimension(), q.basis(),
                   std::vector<Term>(q.terms().begin(), q.terms().end()));
}

Term plain_term(Rational coeff, MultiIndex alpha, int j, int e, int p) {
  Term t;
  t.coeff = std::move(coeff);
  t.mono.alpha = std::move(alpha);
  t.mono.j = j;
  t.mono.e = e;
  t.mono.p = p;
  return t;
}

QuasiPoly constant(Mode mode, std::size_t n, Basis basis, const Rational& c) {
  return normalize(mode, n, basis, {plain_term(c, MultiIndex(n))});
}

QuasiPoly add(const QuasiPoly& q1, const QuasiPoly& q2) {
  require_compatible(q1, q2);
  std::vector<Term> all(q1.terms().begin(), q1.terms().end());
  all.insert(all.end(), q2.terms().begin(), q2.terms().end());
  return normalize(q1.mode(), q1.dimension(), q1.basis(), std::move(all));
}

QuasiPoly negate(const QuasiPoly& q) { return scale(q, Rational(-1)); }

QuasiPoly subtract(const QuasiPoly& q1, const QuasiPoly& q2) { return add(q1, negate(q2)); }

QuasiPoly scale(const QuasiPoly& q, const Rational& c) {
  std::vector<Term> out;
  if (c != 0) {
    out.assign(q.terms().begin(), q.terms().end());
    for (Term& t : out) t.coeff *= c;
  }
  return normalize(q.mode(), q.dimension(), q.basis(), std::move(out));
}

QuasiPoly mul_plain(const QuasiPoly& q, const Term& t) {
  if (!t.mono.is_plain()) throw StructuralError("mul_plain: multiplier carries an oscillator factor");
  if (t.mono.alpha.size() != q.dimension()) throw StructuralError("mul_plain: dimension mismatch");
  std::vector<Term> out;
  out.reserve(q.size());
  for (const Term& s : q.terms()) {
    Term r = s;
    r.coeff *= t.coeff;
    r.mono.alpha += t.mono.alpha;
    r.mono.j += t.mono.j;
    r.mono.e += t.mono.e;
    r.mono.p += t.mono.p;
    out.push_back(std::move(r));
  }
  return normalize(q.mode(), q.dimension(), q.basis(), std::move(out));
}

QuasiPoly mul_plain(const QuasiPoly& q, const QuasiPoly& plain) {
  if (!plain.is_oscillator_free()) throw StructuralError("mul_plain: multiplier carries an oscillator factor");
  require_compatible(q, plain);
  std::vector<Term> out;
  out.reserve(q.size() * plain.size());
  for (const Term& t : plain.terms()) {
    for (const Term& s : q.terms()) {
      Term r = s;
      r.coeff *= t.coeff;
      r.mono.alpha += t.mono.alpha;
      r.mono.j += t.mono.j;
      r.mono.e += t.mono.e;
      r.mono.p += t.mono.p;
      out.push_back(std::move(r));
    }
  }
  return normalize(q.mode(), q.dimension(), q.basis(), std::move(out));
}

QuasiPoly retag(const QuasiPoly& q, Mode mode, Basis basis) {
  if (!q.is_oscillator_free()) throw StructuralError("retag: expression carries oscillator factors");
  return normalize(mode, q.dimension(), basis, std::vector<Term>(q.terms().begin(), q.terms().end()));
}

QuasiPoly subst_y(const QuasiPoly& q, YTarget target) {
  std::vector<Term> out;
  out.reserve(q.size());
  for (const Term& s : q.terms()) {
    Term r = s;
    if (target == YTarget::Zero) {
      if (r.mono.j > 0 || r.mono.oy == YOsc::Sy) continue;
      r.mono.oy = YOsc::One;
    } else {
      r.mono.p += r.mono.j;
      r.mono.j = 0;
      if (r.mono.oy == YOsc::Sy) ++r.mono.sa;
      if (r.mono.oy == YOsc::Cy) ++r.mono.ca;
      r.mono.oy = YOsc::One;
    }
    out.push_back(std::move(r));
  }
  return normalize(q.mode(), q.dimension(), q.basis(), std::move(out));
}

QuasiPoly reflect_y(const QuasiPoly& q) {
  // S(k(a-y)) = Sa*Cy - Ca*Sy
  // C(k(a-y)) = Ca*Cy - Sa*Sy (hyperbolic), Ca*Cy + Sa*Sy (circular)
  const int cross_sign = q.mode() == Mode::Hyperbolic ? -1 : 1;
  std::vector<Term> out;
  for (const Term& s : q.terms()) {
    struct Piece {
      int sign;
      YOsc oy;
      int dsa;
      int dca;
    };
    std::vector<Piece> pieces;
    switch (s.mono.oy) {
      case YOsc::One: pieces = {{1, YOsc::One, 0, 0}}; break;
      case YOsc::Sy: pieces = {{1, YOsc::Cy, 1, 0}, {-1, YOsc::Sy, 0, 1}}; break;
      case YOsc::Cy: pieces = {{1, YOsc::Cy, 0, 1}, {cross_sign, YOsc::Sy, 1, 0}}; break;
    }
    // (a - y)^j = sum_i C(j,i) a^(j-i) (-y)^i
    for (int i = 0; i <= s.mono.j; ++i) {
      Rational c = s.coeff * binomial(static_cast<unsigned>(s.mono.j), static_cast<unsigned>(i));
      if (i % 2 == 1) c = -c;
      for (const Piece& pc : pieces) {
        Term r = s;
        r.coeff = pc.sign < 0 ? Rational(-c) : c;
        r.mono.j = i;
        r.mono.p += s.mono.j - i;
        r.mono.oy = pc.oy;
        r.mono.sa += pc.dsa;
        r.mono.ca += pc.dca;
        out.push_back(std::move(r));
      }
    }
  }
  return normalize(q.mode(), q.dimension(), q.basis(), std::move(out));
}

std::vector<std::pair<MultiIndex, QuasiPoly>> split_by_x(const QuasiPoly& q) {
  std::map<MultiIndex, std::vector<Term>> groups;
  const MultiIndex zero(q.dimension());
  for (const Term& t : q.terms()) {
    Term r = t;
    r.mono.alpha = zero;
    groups[t.mono.alpha].push_back(std::move(r));
  }
  std::vector<std::pair<MultiIndex, QuasiPoly>> out;
  out.reserve(groups.size());
  for (auto& [k, terms] : groups) {
    out.emplace_back(k, normalize(q.mode(), q.dimension(), q.basis(), std::move(terms)));
  }
  std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) {
    Monomial ml, mr;
    ml.alpha = l.first;
    mr.alpha = r.first;
    return ml < mr;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Evaluation

HighPrecisionPoint to_high_precision(const EvalPoint& pt) {
  HighPrecisionPoint hp;
  hp.x.reserve(pt.x.size());
  for (double xi : pt.x) hp.x.emplace_back(xi);
  hp.y = pt.y;
  hp.kappa = pt.kappa;
  hp.a = pt.a;
  return hp;
}

namespace {

template <typename Real>
struct Oscillators {
  Real sy, cy, sa, ca;
};

template <typename Real>
Oscillators<Real> oscillators(Mode mode, const BasicEvalPoint<Real>& pt) {
  using std::cos;
  using std::cosh;
  using std::sin;
  using std::sinh;
  const Real ky = pt.kappa * pt.y;
  const Real ka = pt.kappa * pt.a;
  if (mode == Mode::Hyperbolic) return {sinh(ky), cosh(ky), sinh(ka), cosh(ka)};
  return {sin(ky), cos(ky), sin(ka), cos(ka)};
}

template <typename Real>
void check_conditioning(const QuasiPoly& q, const Oscillators<Real>& osc, const EvalOptions& opts) {
  using std::abs;
  bool neg_sa = false, neg_ca = false;
  for (const Term& t : q.terms()) {
    neg_sa |= t.mono.sa < 0;
    neg_ca |= t.mono.ca < 0;
  }
  const bool hyp = q.mode() == Mode::Hyperbolic;
  if (neg_sa && abs(osc.sa) < Real(opts.conditioning_floor))
    throw ConditioningError(hyp ? "sinh(kappa*a)" : "sin(kappa*a)", static_cast<double>(osc.sa));
  if (neg_ca && abs(osc.ca) < Real(opts.conditioning_floor))
    throw ConditioningError(hyp ? "cosh(kappa*a)" : "cos(kappa*a)", static_cast<double>(osc.ca));
}

template <typename Real, typename Fold>
Real fold_terms(const QuasiPoly& q, const BasicEvalPoint<Real>& pt, const EvalOptions& opts, Fold fold) {
  if (pt.x.size() != q.dimension()) throw StructuralError("eval: point dimension mismatch");
  const Oscillators<Real> osc = oscillators(q.mode(), pt);
  check_conditioning(q, osc, opts);
  Real sum(0);
  for (const Term& t : q.terms()) {
    Real v = to_real<Real>(t.coeff);
    for (std::size_t i = 0; i < q.dimension(); ++i) {
      if (t.mono.alpha[i] != 0) v *= ipow(pt.x[i], t.mono.alpha[i]);
    }
    if (t.mono.j != 0) v *= ipow(pt.y, t.mono.j);
    if (t.mono.e != 0) v *= ipow(pt.kappa, t.mono.e);
    if (t.mono.p != 0) v *= ipow(pt.a, t.mono.p);
    if (t.mono.oy == YOsc::Sy) v *= osc.sy;
    if (t.mono.oy == YOsc::Cy) v *= osc.cy;
    if (t.mono.sa != 0) v *= ipow(osc.sa, t.mono.sa);
    if (t.mono.ca != 0) v *= ipow(osc.ca, t.mono.ca);
    sum += fold(v);
  }
  return sum;
}

}  // namespace

template <typename Real>
Real eval(const QuasiPoly& q, const BasicEvalPoint<Real>& pt, const EvalOptions& opts) {
  return fold_terms(q, pt, opts, [](const Real& v) { return v; });
}

template <typename Real>
Real magnitude(const QuasiPoly& q, const BasicEvalPoint<Real>& pt, const EvalOptions& opts) {
  return fold_terms(q, pt, opts, [](const Real& v) {
    using std::abs;
    return Real(abs(v));
  });
}

template double eval<double>(const QuasiPoly&, const EvalPoint&, const EvalOptions&);
template HighPrecision eval<HighPrecision>(const QuasiPoly&, const HighPrecisionPoint&, const EvalOptions&);
template double magnitude<double>(const QuasiPoly&, const EvalPoint&, const EvalOptions&);
template HighPrecision magnitude<HighPrecision>(const QuasiPoly&, const HighPrecisionPoint&,
                                                const EvalOptions&);

std::string to_string(Mode m) { return m == Mode::Hyperbolic ? "hyperbolic" : "circular"; }

std::string to_string(Basis b) {
  return b == Basis::SinhDenominator ? "sinh_denominator" : "cosh_denominator";
}

}  // namespace helmlayer
