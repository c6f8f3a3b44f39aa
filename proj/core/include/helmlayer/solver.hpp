#pragma once

#include "helmlayer/kernels.hpp"
#include "helmlayer/qpoly.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace helmlayer {

/// One monomial coeff * x^x * y^y of problem data.
struct PolyTerm {
  Rational coeff;
  MultiIndex x;
  int y = 0;

  friend bool operator==(const PolyTerm&, const PolyTerm&) = default;
};
using Polynomial = std::vector<PolyTerm>;

/// Lifts problem data into the algebra. Throws StructuralError on a
/// dimension mismatch or a negative y exponent.
QuasiPoly to_quasi(const Polynomial& poly, std::size_t n, Mode mode, Basis basis);

class ResonanceError : public std::runtime_error {
 public:
  ResonanceError(std::string factor, double value);
  double value() const noexcept { return value_; }

 private:
  double value_;
};

struct ProblemSpec {
  std::size_t n = 1;
  Rational a{1};
  Mode mode = Mode::Hyperbolic;
  Rational kappa{1};
  Problem bc = Problem::Dirichlet;
  Polynomial P;
  /// Value at y = 0.
  Polynomial phi;
  /// Value at y = a (Dirichlet) or normal derivative u_y at y = a (DN).
  Polynomial psi;
};

/// Throws StructuralError when a, kappa or the data violate the invariants.
void validate(const ProblemSpec& spec);

enum class Uniqueness : std::uint8_t { UniqueSlowGrowth, NotUnique };

struct UniquenessReport {
  Uniqueness verdict = Uniqueness::UniqueSlowGrowth;
  std::vector<std::string> notes;
};

struct Solution {
  QuasiPoly u;
  Uniqueness uniqueness = Uniqueness::UniqueSlowGrowth;
  std::vector<std::string> warnings;
  /// ũ and v with u = ũ + v.
  QuasiPoly particular;
  QuasiPoly homogeneous;
};

struct SolverOptions {
  double resonance_hard_floor = 1e-10;
  double resonance_soft_floor = 1e-6;
};

/// Uniqueness in the slow-growth class. Hyperbolic is always unique;
/// circular Dirichlet needs kappa*a < pi and circular DN 2*kappa*a < pi,
/// decided in exact arithmetic against a rational enclosure of pi.
UniquenessReport uniqueness_report(const ProblemSpec& spec);

enum class GuardStatus : std::uint8_t { Pass, Warning };

struct GuardResult {
  GuardStatus status = GuardStatus::Pass;
  std::string note;
};

/// Circular mode only: |sin(kappa a)| (Dirichlet) or |cos(kappa a)| (DN)
/// below the hard floor throws ResonanceError, below the soft floor warns.
GuardResult resonance_guard(const ProblemSpec& spec, const SolverOptions& opts = {});

/// u = ũ + v with ũ the polynomial particular solution and v the kernel
/// superposition matching the corrected boundary data.
Solution solve(const ProblemSpec& spec, const SolverOptions& opts = {});

/// ũ alone, in the spec's mode and basis.
QuasiPoly particular_solution(const ProblemSpec& spec);

std::string to_string(Uniqueness u);

}  // namespace helmlayer
