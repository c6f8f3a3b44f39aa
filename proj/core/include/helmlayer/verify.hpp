#pragma once

// Verification engines that do not share code paths with the solver:
// finite-difference residuals on direct evaluation, numeric differentiation
// of the generating functions, small-kappa limit checks and explicit
// nonuniqueness witnesses.

#include "helmlayer/kernels.hpp"
#include "helmlayer/qpoly.hpp"
#include "helmlayer/solver.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace helmlayer {

/// Default tolerances for every check in this module.
struct VerifyTolerances {
  double fd_step = 1e-3;
  double fd_relative = 1e-5;
  double derivative_relative = 1e-6;
  double series_relative = 1e-5;
  double limit_absolute = 1e-6;
  double limit_min_order = 1.8;
  double witness_residual = 1e-5;
  double witness_trace = 1e-12;
};

/// laplacian(u) + sigma kappa^2 u - P in canonical form. Empty certifies the
/// PDE exactly.
QuasiPoly residual_symbolic(const QuasiPoly& u, const ProblemSpec& spec);

/// Data misfit at both walls: (u(.,0) - phi, u(.,a) - psi) for Dirichlet and
/// (u(.,0) - phi, u_y(.,a) - psi) for DN. Both empty when exact.
std::pair<QuasiPoly, QuasiPoly> boundary_residuals(const QuasiPoly& u, const ProblemSpec& spec);

struct FdResidual {
  double absolute = 0.0;
  /// |nu f| + |rhs| + sum_i |D_i^2 f|: the size of the individual terms.
  double scale = 0.0;
  double relative() const noexcept { return scale > 0.0 ? absolute / scale : absolute; }
};

using PointFunction = std::function<double(std::span<const double> x, double y)>;

/// Central-difference residual of Delta f + nu f - rhs at pt, with one
/// Richardson level (steps h and h/2) per axis.
FdResidual helmholtz_residual_fd(const PointFunction& f, double nu, double rhs, const EvalPoint& pt,
                                 double h);

/// Absolute FD residual of u against spec's P at pt (nu from pt.kappa). u is
/// evaluated at 100 digits and rounded to double before differencing.
double residual_fd(const QuasiPoly& u, const ProblemSpec& spec, const EvalPoint& pt, double h);
FdResidual residual_fd_detail(const QuasiPoly& u, const ProblemSpec& spec, const EvalPoint& pt,
                              double h);

namespace fd {

/// Central first derivative, one Richardson level (steps h and h/2).
double derivative(const std::function<double(double)>& f, double x0, double h);

/// Central second derivative, one Richardson level.
double second_derivative(const std::function<double(double)>& f, double x0, double h);

}  // namespace fd

/// Direct evaluation of the generating function of a kernel family
/// (L_1 for PFamily, K_1 for QFamily) at (x, y).
template <typename Real>
Real generating_function(const KernelFamily& f, const Real& x, const Real& y, const Real& kappa,
                         const Real& a);

struct SeriesEstimate {
  double value = 0.0;
  /// Difference between the last two Richardson levels.
  double noise = 0.0;
  bool noisy = false;
  std::string diagnostic;
};

/// (-1)^m d^2m/dx^2m of the generating function at x = 0, by central
/// differences with Richardson extrapolation, evaluated at 100 digits.
/// Requires 0 <= m <= 3.
SeriesEstimate series_oracle_p2m(const KernelFamily& f, int m, double kappa, double a, double y,
                                 double relative_noise_limit = 1e-8);

struct LimitPoint {
  EvalPoint point;
  double limit_value = 0.0;
  /// |u - limit| at kappa = 1e-2, 1e-3, 1e-4.
  std::array<double, 3> discrepancy{};
  /// Smallest observed log10 ratio of successive discrepancies; NaN when
  /// every discrepancy is below the noise floor.
  double order = 0.0;
  bool passed = false;
};

struct LimitReport {
  std::vector<LimitPoint> points;
  bool passed = false;
};

inline constexpr std::array<const char*, 3> kLimitKappas = {"1/100", "1/1000", "1/10000"};

/// Evaluates builder(kappa) at kappa in {1e-2, 1e-3, 1e-4} (100-digit
/// arithmetic) against the oscillator-free limit polynomial. A point passes
/// when the kappa = 1e-4 discrepancy is within limit_absolute * (1 + |limit|)
/// and the observed order is at least limit_min_order.
LimitReport poisson_limit_check(const std::function<QuasiPoly(const Rational&)>& builder,
                                const QuasiPoly& limit_poly, std::span<const EvalPoint> pts,
                                const VerifyTolerances& tol = {});
LimitReport poisson_limit_check(const QuasiPoly& u, const QuasiPoly& limit_poly,
                                std::span<const EvalPoint> pts, const VerifyTolerances& tol = {});

struct WitnessSpec {
  std::vector<double> b;
  double mu = 0.0;
  double a = 1.0;
  Problem bc = Problem::Dirichlet;
};

/// mu^2 - pi^2/a^2 (Dirichlet) or mu^2 - pi^2/(4a^2) (DN).
double witness_b_squared(double mu, double a, Problem bc);

/// Splits b = sqrt(witness_b_squared) along a non-negative direction.
/// Throws std::domain_error when mu is below the threshold.
WitnessSpec make_witness_spec(double mu, double a, Problem bc, std::span<const double> direction);

/// prod_{b_i > 0} sin(b_i x_i) * sin(pi y / a) (Dirichlet) or
/// ... * sin(pi y / (2a)) (DN). Lives outside the quasipolynomial algebra.
class Witness {
 public:
  explicit Witness(WitnessSpec spec);

  const WitnessSpec& spec() const noexcept { return spec_; }
  double operator()(std::span<const double> x, double y) const;
  double dy(std::span<const double> x, double y) const;
  std::string expression() const;

 private:
  WitnessSpec spec_;
  double y_rate_;
};

struct WitnessReport {
  std::string expression;
  double max_residual = 0.0;
  double max_bottom_trace = 0.0;
  double max_top_trace = 0.0;
  bool passed = false;
};

/// Checks the witness numerically at `samples` pseudo-random points.
/// Throws std::domain_error when mu is below the threshold or the b vector
/// does not satisfy sum b_i^2 = b^2.
WitnessReport nonuniqueness_witness(const WitnessSpec& w, const VerifyTolerances& tol = {},
                                    unsigned samples = 20, std::uint32_t seed = 7);

/// Points with x in [-1, 1]^n and y strictly inside (0, a), drawn from a
/// fixed-seed generator.
std::vector<EvalPoint> random_points(std::size_t n, std::size_t count, double kappa, double a,
                                     std::uint32_t seed);

/// Regular interior grid: `per_axis` nodes along each x_i in [-1, 1] and
/// along y in (0, a).
std::vector<EvalPoint> interior_grid(std::size_t n, std::size_t per_axis, double kappa, double a);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  bool passed() const noexcept;
};

/// Symbolic residual, exact boundary traces and the FD residual over
/// `points`.
VerificationReport verify_solution(const QuasiPoly& u, const ProblemSpec& spec,
                                   std::span<const EvalPoint> points, const VerifyTolerances& tol = {});

}  // namespace helmlayer
