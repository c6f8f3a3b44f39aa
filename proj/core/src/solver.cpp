#include "helmlayer/solver.hpp"

#include "helmlayer/calculus.hpp"

#include <cmath>
#include <map>

namespace helmlayer {

namespace {

// Rational enclosure of pi.
const Rational kPiLower = parse_rational("314159265358979/100000000000000");
const Rational kPiUpper = parse_rational("314159265358980/100000000000000");

QuasiPoly superpose(const QuasiPoly& datum, Mode mode, std::size_t n, Basis basis,
                    const auto& kernel_for) {
  QuasiPoly v(mode, n, basis);
  for (const auto& [k, coeff] : split_by_x(datum)) {
    v = add(v, mul_plain(kernel_for(k), coeff));
  }
  return v;
}

}  // namespace

ResonanceError::ResonanceError(std::string factor, double value)
    : std::runtime_error("at/near eigenvalue: " + factor + " = " + format_scientific(value)),
      value_(value) {}

QuasiPoly to_quasi(const Polynomial& poly, std::size_t n, Mode mode, Basis basis) {
  std::vector<Term> terms;
  terms.reserve(poly.size());
  for (const PolyTerm& t : poly) {
    if (t.x.size() != n) throw StructuralError("polynomial exponent length does not match dimension");
    if (t.y < 0) throw StructuralError("negative y exponent in polynomial data");
    terms.push_back(plain_term(t.coeff, t.x, t.y));
  }
  return normalize(mode, n, basis, std::move(terms));
}

void validate(const ProblemSpec& spec) {
  if (spec.a <= 0) throw StructuralError("layer width a must be positive");
  if (spec.kappa <= 0) throw StructuralError("kappa must be positive");
  if (spec.n == 0) throw StructuralError("dimension must be at least 1");
  auto check = [&](const Polynomial& p, bool y_free, const char* name) {
    for (const PolyTerm& t : p) {
      if (t.x.size() != spec.n)
        throw StructuralError(std::string(name) + ": exponent length does not match dimension");
      if (t.y < 0 || (y_free && t.y != 0))
        throw StructuralError(std::string(name) + (y_free ? " must not depend on y" : ": negative y exponent"));
    }
  };
  check(spec.P, false, "P");
  check(spec.phi, true, "phi");
  check(spec.psi, true, "psi");
}

UniquenessReport uniqueness_report(const ProblemSpec& spec) {
  UniquenessReport report;
  if (spec.mode == Mode::Hyperbolic) return report;
  const Rational product = spec.kappa * spec.a * (spec.bc == Problem::Dirichlet ? 1 : 2);
  if (product < kPiLower) return report;
  report.verdict = Uniqueness::NotUnique;
  if (product < kPiUpper) {
    report.notes.push_back("uniqueness bound is indeterminate within the enclosure of pi; reporting not unique");
  }
  return report;
}

GuardResult resonance_guard(const ProblemSpec& spec, const SolverOptions& opts) {
  GuardResult result;
  if (spec.mode == Mode::Hyperbolic) return result;
  const double ka = (spec.kappa * spec.a).convert_to<double>();
  const bool dirichlet = spec.bc == Problem::Dirichlet;
  const double value = std::abs(dirichlet ? std::sin(ka) : std::cos(ka));
  const std::string factor = dirichlet ? "|sin(kappa*a)|" : "|cos(kappa*a)|";
  if (value < opts.resonance_hard_floor) throw ResonanceError(factor, value);
  if (value < opts.resonance_soft_floor) {
    result.status = GuardStatus::Warning;
    result.note = "near eigenvalue: " + factor + " = " + format_scientific(value) +
                  "; kernel coefficients are large";
  }
  return result;
}

QuasiPoly particular_solution(const ProblemSpec& spec) {
  const Basis basis = basis_for(spec.bc);
  return particular(to_quasi(spec.P, spec.n, spec.mode, basis), spec.mode);
}

Solution solve(const ProblemSpec& spec, const SolverOptions& opts) {
  validate(spec);
  const GuardResult guard = resonance_guard(spec, opts);
  const UniquenessReport uniq = uniqueness_report(spec);

  const std::size_t n = spec.n;
  const Mode mode = spec.mode;
  const Basis basis = basis_for(spec.bc);

  const QuasiPoly u_tilde = particular_solution(spec);
  const QuasiPoly phi = to_quasi(spec.phi, n, mode, basis);
  const QuasiPoly psi = to_quasi(spec.psi, n, mode, basis);

  const QuasiPoly bottom = subtract(phi, subst_y(u_tilde, YTarget::Zero));
  QuasiPoly v(mode, n, basis);
  if (spec.bc == Problem::Dirichlet) {
    const QuasiPoly top = subtract(psi, subst_y(u_tilde, YTarget::A));
    const KernelFamily top_family{Problem::Dirichlet, Side::PFamily, mode};
    v = add(superpose(bottom, mode, n, basis, [&](const MultiIndex& k) { return bottom_solution(mode, k); }),
            superpose(top, mode, n, basis,
                      [&](const MultiIndex& k) { return monomial_solution(top_family, k); }));
  } else {
    const QuasiPoly top = subtract(psi, subst_y(ddy(u_tilde), YTarget::A));
    const KernelFamily p_family{Problem::DirichletNeumann, Side::PFamily, mode};
    const KernelFamily q_family{Problem::DirichletNeumann, Side::QFamily, mode};
    v = add(superpose(bottom, mode, n, basis,
                      [&](const MultiIndex& k) { return monomial_solution(p_family, k); }),
            superpose(top, mode, n, basis,
                      [&](const MultiIndex& k) { return monomial_solution(q_family, k); }));
  }

  Solution sol;
  sol.u = add(u_tilde, v);
  sol.uniqueness = uniq.verdict;
  sol.warnings = uniq.notes;
  if (guard.status == GuardStatus::Warning) sol.warnings.push_back(guard.note);
  sol.particular = u_tilde;
  sol.homogeneous = v;

  for (const Term& t : sol.u.terms()) {
    if (t.mono.p < 0) throw StructuralError("internal: emitted solution carries a negative power of a");
  }
  return sol;
}

std::string to_string(Uniqueness u) {
  return u == Uniqueness::UniqueSlowGrowth ? "unique" : "not_unique";
}

}  // namespace helmlayer
