#pragma once

// Boundary kernels p_2m / q_2m and the monomial solutions built from them.
//
// Each family starts from a seed (the kernel for constant boundary data) and
// is generated by the recurrence
//
//   k_2m = s * (2m - 1) * (1/kappa) d/dkappa k_2m-2,   s = -1 (hyperbolic), +1 (circular).
//
// For a multiindex m the n-dimensional kernel is a rational multiple of the
// scalar kernel of order 2|m|.

#include "helmlayer/qpoly.hpp"

#include <cstdint>

namespace helmlayer {

enum class Problem : std::uint8_t { Dirichlet, DirichletNeumann };

/// PFamily carries the datum at y = 0 (DN) or at y = a (Dirichlet);
/// QFamily is the Neumann datum at y = a and exists only for DN.
enum class Side : std::uint8_t { PFamily, QFamily };

struct KernelFamily {
  Problem problem = Problem::Dirichlet;
  Side side = Side::PFamily;
  Mode mode = Mode::Hyperbolic;

  friend auto operator<=>(const KernelFamily&, const KernelFamily&) = default;
};

/// Dirichlet -> SinhDenominator, Dirichlet-Neumann -> CoshDenominator.
Basis basis_for(Problem problem) noexcept;

/// p_0 or q_0 in n dimensions (x-independent). Throws StructuralError for
/// a Dirichlet QFamily.
QuasiPoly seed(const KernelFamily& f, std::size_t n = 1);

/// p_2m / q_2m by the recurrence. Results are memoized per (family, n, m);
/// the cache is safe for concurrent use.
QuasiPoly p2m(const KernelFamily& f, int m, std::size_t n = 1);

/// (2m - 1)!! * (s/kappa d/dkappa)^m seed, built without the memo table.
/// Independent second route for p2m.
QuasiPoly p2m_closed_form(const KernelFamily& f, int m, std::size_t n = 1);

/// (2m)! |m|! / (|2m|! m!) with multiindex factorials taken as products.
Rational multiindex_scale(const MultiIndex& m);

/// Kernel for multiindex m: multiindex_scale(m) * p_2|m|, in n = m.size().
QuasiPoly multiindex_p(const KernelFamily& f, const MultiIndex& m);

/// u_k = sum_{m <= [k/2]} C(k, 2m) x^(k-2m) p_2m.
///   Dirichlet PFamily: u = 0 at y = 0, u = x^k at y = a.
///   DN PFamily:        u = x^k at y = 0, u_y = 0 at y = a.
///   DN QFamily:        u = 0 at y = 0, u_y = x^k at y = a.
QuasiPoly monomial_solution(const KernelFamily& f, const MultiIndex& k);

/// Dirichlet solution with u = x^k at y = 0 and u = 0 at y = a (the
/// reflection of monomial_solution).
QuasiPoly bottom_solution(Mode mode, const MultiIndex& k);

/// Polynomial ũ with laplacian(ũ) + nu ũ = P, nu = sigma kappa^2:
///   ũ = sum_{j >= 0} (-1)^j nu^-(j+1) Delta^j P.
/// P must be a plain polynomial in (x, y); the result is tagged with `mode`
/// and P's basis.
QuasiPoly particular(const QuasiPoly& P, Mode mode);

std::string to_string(Problem p);
std::string to_string(Side s);

}  // namespace helmlayer
