#include "helmlayer/verify.hpp"

#include "helmlayer/calculus.hpp"

#include <boost/math/constants/constants.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

namespace helmlayer {

namespace {

constexpr double kPi = boost::math::constants::pi<double>();

QuasiPoly rhs_of(const ProblemSpec& spec) {
  return to_quasi(spec.P, spec.n, spec.mode, basis_for(spec.bc));
}

}  // namespace

QuasiPoly residual_symbolic(const QuasiPoly& u, const ProblemSpec& spec) {
  return subtract(helmholtz(u), rhs_of(spec));
}

std::pair<QuasiPoly, QuasiPoly> boundary_residuals(const QuasiPoly& u, const ProblemSpec& spec) {
  const Basis basis = basis_for(spec.bc);
  const QuasiPoly phi = to_quasi(spec.phi, spec.n, spec.mode, basis);
  const QuasiPoly psi = to_quasi(spec.psi, spec.n, spec.mode, basis);
  QuasiPoly bottom = subtract(subst_y(u, YTarget::Zero), phi);
  QuasiPoly top = spec.bc == Problem::Dirichlet ? subtract(subst_y(u, YTarget::A), psi)
                                                : subtract(subst_y(ddy(u), YTarget::A), psi);
  return {std::move(bottom), std::move(top)};
}

FdResidual helmholtz_residual_fd(const PointFunction& f, double nu, double rhs, const EvalPoint& pt,
                                 double h) {
  std::vector<double> x = pt.x;
  const double center = f(x, pt.y);
  // Second difference along one axis, one Richardson level (h, h/2).
  const auto second = [&](const std::function<double(double)>& along) {
    const auto central = [&](double s) { return (along(s) - 2.0 * center + along(-s)) / (s * s); };
    return (4.0 * central(h / 2.0) - central(h)) / 3.0;
  };
  FdResidual r;
  double lap = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double xi = x[i];
    const double d2 = second([&](double s) {
      x[i] = xi + s;
      const double v = f(x, pt.y);
      x[i] = xi;
      return v;
    });
    lap += d2;
    r.scale += std::abs(d2);
  }
  const double d2y = second([&](double s) { return f(x, pt.y + s); });
  lap += d2y;
  r.scale += std::abs(d2y) + std::abs(nu * center) + std::abs(rhs);
  r.absolute = std::abs(lap + nu * center - rhs);
  return r;
}

FdResidual residual_fd_detail(const QuasiPoly& u, const ProblemSpec& spec, const EvalPoint& pt, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("residual_fd: step must be positive");
  const QuasiPoly P = rhs_of(spec);
  const double nu = nu_sign(spec.mode) * pt.kappa * pt.kappa;
  const double rhs = eval(P, pt);
  // Evaluate at 100 digits so that cancellation between large terms is not
  // amplified by the 1/h^2 of the difference quotient.
  const HighPrecision kappa(pt.kappa), a(pt.a);
  const PointFunction f = [&](std::span<const double> x, double y) {
    HighPrecisionPoint hp;
    hp.x.assign(x.begin(), x.end());
    hp.y = HighPrecision(y);
    hp.kappa = kappa;
    hp.a = a;
    return static_cast<double>(eval(u, hp));
  };
  return helmholtz_residual_fd(f, nu, rhs, pt, h);
}

double residual_fd(const QuasiPoly& u, const ProblemSpec& spec, const EvalPoint& pt, double h) {
  return residual_fd_detail(u, spec, pt, h).absolute;
}

namespace fd {

double derivative(const std::function<double(double)>& f, double x0, double h) {
  const auto central = [&](double s) { return (f(x0 + s) - f(x0 - s)) / (2.0 * s); };
  return (4.0 * central(h / 2.0) - central(h)) / 3.0;
}

double second_derivative(const std::function<double(double)>& f, double x0, double h) {
  const double c = f(x0);
  const auto central = [&](double s) { return (f(x0 + s) - 2.0 * c + f(x0 - s)) / (s * s); };
  return (4.0 * central(h / 2.0) - central(h)) / 3.0;
}

}  // namespace fd

// ---------------------------------------------------------------------------
// Generating functions

template <typename Real>
Real generating_function(const KernelFamily& f, const Real& x, const Real& y, const Real& kappa,
                         const Real& a) {
  using std::cos;
  using std::cosh;
  using std::sin;
  using std::sinh;
  using std::sqrt;
  if (f.problem == Problem::Dirichlet && f.side == Side::QFamily)
    throw StructuralError("Dirichlet problem has no q-kernel family");

  // Hyperbolic: s^2 = x^2 + kappa^2. Circular: s^2 = kappa^2 - x^2; for
  // s^2 < 0 the circular ratios continue analytically into hyperbolic ones.
  const Real s2 = f.mode == Mode::Hyperbolic ? Real(x * x + kappa * kappa) : Real(kappa * kappa - x * x);
  if (s2 == 0) {
    if (f.problem == Problem::Dirichlet) return y / a;
    return f.side == Side::PFamily ? Real(1) : y;
  }
  const bool circular_fns = f.mode == Mode::Circular && s2 > 0;
  const Real s = sqrt(s2 > 0 ? s2 : Real(-s2));
  const auto S = [&](const Real& v) { return circular_fns ? Real(sin(v)) : Real(sinh(v)); };
  const auto C = [&](const Real& v) { return circular_fns ? Real(cos(v)) : Real(cosh(v)); };

  if (f.problem == Problem::Dirichlet) return S(y * s) / S(a * s);
  if (f.side == Side::PFamily) return C((a - y) * s) / C(a * s);
  return S(y * s) / (s * C(a * s));
}

template double generating_function<double>(const KernelFamily&, const double&, const double&, const double&,
                                            const double&);
template HighPrecision generating_function<HighPrecision>(const KernelFamily&, const HighPrecision&,
                                                          const HighPrecision&, const HighPrecision&,
                                                          const HighPrecision&);

SeriesEstimate series_oracle_p2m(const KernelFamily& f, int m, double kappa, double a, double y,
                                 double relative_noise_limit) {
  if (m < 0 || m > 3) throw std::invalid_argument("series_oracle_p2m: requires 0 <= m <= 3");
  using R = HighPrecision;
  const R rk(kappa), ra(a), ry(y);
  SeriesEstimate est;
  if (m == 0) {
    est.value = static_cast<double>(generating_function<R>(f, R(0), ry, rk, ra));
    return est;
  }

  // Distance from x = 0 to the nearest singularity of the generating
  // function bounds the usable step.
  const double wall = f.problem == Problem::Dirichlet ? kPi / a : kPi / (2.0 * a);
  const double radius = f.mode == Mode::Hyperbolic ? std::sqrt(wall * wall + kappa * kappa)
                                                   : std::sqrt(std::abs(wall * wall - kappa * kappa));
  const double h0 = radius / 4.0;

  const auto difference = [&](const R& h) {
    R sum(0);
    for (int k = 0; k <= 2 * m; ++k) {
      R term = to_real<R>(binomial(2 * m, k)) * generating_function<R>(f, R((m - k) * h), ry, rk, ra);
      sum += (k % 2 == 0) ? term : R(-term);
    }
    return R(sum / boost::multiprecision::pow(h, 2 * m));
  };

  constexpr int kLevels = 7;
  std::vector<std::vector<R>> table(kLevels);
  R h(h0);
  for (int i = 0; i < kLevels; ++i, h /= 2) {
    table[i].push_back(difference(h));
    R factor(4);
    for (int j = 1; j <= i; ++j, factor *= 4) {
      table[i].push_back((factor * table[i][j - 1] - table[i - 1][j - 1]) / (factor - 1));
    }
  }
  const R best = table[kLevels - 1][kLevels - 1];
  const R prev = table[kLevels - 2][kLevels - 2];
  const R signed_best = (m % 2 == 0) ? best : R(-best);
  est.value = static_cast<double>(signed_best);
  est.noise = static_cast<double>(abs(best - prev));
  const double scale = std::max(std::abs(est.value), std::numeric_limits<double>::min());
  if (est.noise > relative_noise_limit * scale) {
    est.noisy = true;
    est.diagnostic = "Richardson levels disagree by " + format_scientific(est.noise) + " (value " +
                     format_scientific(est.value) + ")";
  }
  return est;
}

// ---------------------------------------------------------------------------
// Small-kappa limits

LimitReport poisson_limit_check(const std::function<QuasiPoly(const Rational&)>& builder,
                                const QuasiPoly& limit_poly, std::span<const EvalPoint> pts,
                                const VerifyTolerances& tol) {
  if (!limit_poly.is_oscillator_free()) throw StructuralError("limit polynomial carries oscillators");
  for (const Term& t : limit_poly.terms()) {
    if (t.mono.e != 0) throw StructuralError("limit polynomial depends on kappa");
  }
  std::array<Rational, 3> kappas;
  std::array<QuasiPoly, 3> exprs;
  for (std::size_t i = 0; i < kappas.size(); ++i) {
    kappas[i] = parse_rational(kLimitKappas[i]);
    exprs[i] = builder(kappas[i]);
  }
  const HighPrecision noise_floor("1e-40");

  LimitReport report;
  report.passed = true;
  for (const EvalPoint& pt : pts) {
    LimitPoint lp;
    lp.point = pt;
    HighPrecisionPoint hp = to_high_precision(pt);
    const HighPrecision limit = eval(limit_poly, hp);
    lp.limit_value = static_cast<double>(limit);
    std::array<HighPrecision, 3> d;
    for (std::size_t i = 0; i < kappas.size(); ++i) {
      hp.kappa = to_real<HighPrecision>(kappas[i]);
      d[i] = abs(eval(exprs[i], hp) - limit);
      lp.discrepancy[i] = static_cast<double>(d[i]);
    }
    double order = std::numeric_limits<double>::infinity();
    bool any = false;
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
      if (d[i] <= noise_floor) continue;
      any = true;
      if (d[i + 1] <= noise_floor) continue;
      order = std::min(order, static_cast<double>(log10(d[i] / d[i + 1])));
    }
    lp.order = any ? order : std::numeric_limits<double>::quiet_NaN();
    const bool close = lp.discrepancy[2] <= tol.limit_absolute * (1.0 + std::abs(lp.limit_value));
    const bool rate = !any || order >= tol.limit_min_order;
    lp.passed = close && rate;
    report.passed = report.passed && lp.passed;
    report.points.push_back(std::move(lp));
  }
  return report;
}

LimitReport poisson_limit_check(const QuasiPoly& u, const QuasiPoly& limit_poly, std::span<const EvalPoint> pts,
                                const VerifyTolerances& tol) {
  return poisson_limit_check([&u](const Rational&) { return u; }, limit_poly, pts, tol);
}

// ---------------------------------------------------------------------------
// Nonuniqueness witnesses

double witness_b_squared(double mu, double a, Problem bc) {
  const double wall = bc == Problem::Dirichlet ? kPi / a : kPi / (2.0 * a);
  return mu * mu - wall * wall;
}

namespace {

void check_witness(const WitnessSpec& w) {
  if (!(w.a > 0.0) || !(w.mu > 0.0)) throw std::domain_error("witness: mu and a must be positive");
  const double b2 = witness_b_squared(w.mu, w.a, w.bc);
  const double slack = 1e-12 * std::max(1.0, w.mu * w.mu);
  if (b2 < -slack) throw std::domain_error("witness: mu is below the uniqueness threshold");
  double sum = 0.0;
  for (double bi : w.b) {
    if (bi < 0.0) throw std::domain_error("witness: b entries must be non-negative");
    sum += bi * bi;
  }
  if (std::abs(sum - std::max(b2, 0.0)) > slack)
    throw std::domain_error("witness: sum of b_i^2 does not match mu^2 minus the wall eigenvalue");
}

}  // namespace

WitnessSpec make_witness_spec(double mu, double a, Problem bc, std::span<const double> direction) {
  const double b2 = witness_b_squared(mu, a, bc);
  const double slack = 1e-12 * std::max(1.0, mu * mu);
  if (b2 < -slack) throw std::domain_error("witness: mu is below the uniqueness threshold");
  const double b = std::sqrt(std::max(b2, 0.0));
  double norm = 0.0;
  for (double d : direction) {
    if (d < 0.0) throw std::domain_error("witness: direction entries must be non-negative");
    norm += d * d;
  }
  norm = std::sqrt(norm);
  WitnessSpec w;
  w.mu = mu;
  w.a = a;
  w.bc = bc;
  w.b.resize(direction.size(), 0.0);
  if (norm > 0.0) {
    for (std::size_t i = 0; i < direction.size(); ++i) w.b[i] = b * direction[i] / norm;
  } else if (b > 0.0) {
    throw std::domain_error("witness: zero direction for a nonzero b");
  }
  return w;
}

Witness::Witness(WitnessSpec spec) : spec_(std::move(spec)) {
  check_witness(spec_);
  y_rate_ = spec_.bc == Problem::Dirichlet ? kPi / spec_.a : kPi / (2.0 * spec_.a);
}

double Witness::operator()(std::span<const double> x, double y) const {
  double v = std::sin(y_rate_ * y);
  for (std::size_t i = 0; i < spec_.b.size(); ++i) {
    if (spec_.b[i] > 0.0) v *= std::sin(spec_.b[i] * x[i]);
  }
  return v;
}

double Witness::dy(std::span<const double> x, double y) const {
  double v = y_rate_ * std::cos(y_rate_ * y);
  for (std::size_t i = 0; i < spec_.b.size(); ++i) {
    if (spec_.b[i] > 0.0) v *= std::sin(spec_.b[i] * x[i]);
  }
  return v;
}

std::string Witness::expression() const {
  std::ostringstream os;
  os.precision(12);
  const bool single = spec_.b.size() == 1;
  for (std::size_t i = 0; i < spec_.b.size(); ++i) {
    if (spec_.b[i] > 0.0) os << "sin(" << spec_.b[i] << "*x" << (single ? "" : std::to_string(i + 1)) << ")*";
  }
  os << "sin(pi*y/" << (spec_.bc == Problem::Dirichlet ? 1.0 : 2.0) * spec_.a << ")";
  return os.str();
}

WitnessReport nonuniqueness_witness(const WitnessSpec& w, const VerifyTolerances& tol, unsigned samples,
                                    std::uint32_t seed) {
  const Witness witness(w);
  WitnessReport report;
  report.expression = witness.expression();
  const PointFunction f = [&witness](std::span<const double> x, double y) { return witness(x, y); };
  const double nu = w.mu * w.mu;
  const auto points = random_points(w.b.size(), samples, w.mu, w.a, seed);
  for (const EvalPoint& pt : points) {
    const FdResidual r = helmholtz_residual_fd(f, nu, 0.0, pt, tol.fd_step);
    report.max_residual = std::max(report.max_residual, r.relative());
    report.max_bottom_trace = std::max(report.max_bottom_trace, std::abs(witness(pt.x, 0.0)));
    const double top = w.bc == Problem::Dirichlet ? witness(pt.x, w.a) : witness.dy(pt.x, w.a);
    report.max_top_trace = std::max(report.max_top_trace, std::abs(top));
  }
  report.passed = report.max_residual <= tol.witness_residual && report.max_bottom_trace <= tol.witness_trace &&
                  report.max_top_trace <= tol.witness_trace;
  return report;
}

// ---------------------------------------------------------------------------
// Point sets and end-to-end verification

std::vector<EvalPoint> random_points(std::size_t n, std::size_t count, double kappa, double a,
                                     std::uint32_t seed) {
  std::mt19937 gen(seed);
  std::uniform_real_distribution<double> ux(-1.0, 1.0);
  std::uniform_real_distribution<double> uy(0.05 * a, 0.95 * a);
  std::vector<EvalPoint> pts;
  pts.reserve(count);
  for (std::size_t c = 0; c < count; ++c) {
    EvalPoint pt;
    pt.x.resize(n);
    for (double& xi : pt.x) xi = ux(gen);
    pt.y = uy(gen);
    pt.kappa = kappa;
    pt.a = a;
    pts.push_back(std::move(pt));
  }
  return pts;
}

std::vector<EvalPoint> interior_grid(std::size_t n, std::size_t per_axis, double kappa, double a) {
  if (per_axis == 0) return {};
  const auto node = [per_axis](std::size_t i) {
    return per_axis == 1 ? 0.0 : -1.0 + 2.0 * static_cast<double>(i) / static_cast<double>(per_axis - 1);
  };
  std::vector<EvalPoint> pts;
  std::vector<std::size_t> idx(n + 1, 0);
  while (true) {
    EvalPoint pt;
    pt.x.resize(n);
    for (std::size_t i = 0; i < n; ++i) pt.x[i] = node(idx[i]);
    pt.y = a * static_cast<double>(idx[n] + 1) / static_cast<double>(per_axis + 1);
    pt.kappa = kappa;
    pt.a = a;
    pts.push_back(std::move(pt));
    std::size_t i = 0;
    while (i <= n && ++idx[i] == per_axis) idx[i++] = 0;
    if (i > n) break;
  }
  return pts;
}

bool VerificationReport::passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

VerificationReport verify_solution(const QuasiPoly& u, const ProblemSpec& spec, std::span<const EvalPoint> points,
                                   const VerifyTolerances& tol) {
  VerificationReport report;

  const QuasiPoly residual = residual_symbolic(u, spec);
  report.checks.push_back({"residual_symbolic", residual.is_zero(),
                           residual.is_zero() ? "exact zero" : std::to_string(residual.size()) + " surviving terms"});

  const auto [bottom, top] = boundary_residuals(u, spec);
  report.checks.push_back({"boundary_bottom", bottom.is_zero(),
                           bottom.is_zero() ? "exact" : std::to_string(bottom.size()) + " surviving terms"});
  report.checks.push_back({spec.bc == Problem::Dirichlet ? "boundary_top_value" : "boundary_top_derivative",
                           top.is_zero(), top.is_zero() ? "exact" : std::to_string(top.size()) + " surviving terms"});

  double worst = 0.0;
  for (const EvalPoint& pt : points) {
    worst = std::max(worst, residual_fd_detail(u, spec, pt, tol.fd_step).relative());
  }
  report.checks.push_back({"residual_fd", worst <= tol.fd_relative,
                           "max relative " + format_scientific(worst) + " over " + std::to_string(points.size()) +
                               " points (tolerance " + format_scientific(tol.fd_relative) + ")"});
  return report;
}

}  // namespace helmlayer
