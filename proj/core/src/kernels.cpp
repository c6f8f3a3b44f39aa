#include "helmlayer/kernels.hpp"

#include "helmlayer/calculus.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <tuple>

namespace helmlayer {

Basis basis_for(Problem problem) noexcept {
  return problem == Problem::Dirichlet ? Basis::SinhDenominator : Basis::CoshDenominator;
}

namespace {

Term osc_term(int sign, std::size_t n, int e, YOsc oy, int sa, int ca) {
  Term t = plain_term(Rational(sign), MultiIndex(n), 0, e);
  t.mono.oy = oy;
  t.mono.sa = sa;
  t.mono.ca = ca;
  return t;
}

class KernelCache {
 public:
  using Key = std::tuple<KernelFamily, std::size_t, int>;

  std::shared_ptr<const QuasiPoly> find(const Key& key) const {
    std::shared_lock lock(mutex_);
    auto it = table_.find(key);
    return it == table_.end() ? nullptr : it->second;
  }

  // First writer wins; later inserts of the same key return the stored value.
  std::shared_ptr<const QuasiPoly> insert(const Key& key, QuasiPoly value) {
    std::unique_lock lock(mutex_);
    auto [it, inserted] = table_.try_emplace(key, nullptr);
    if (inserted) it->second = std::make_shared<const QuasiPoly>(std::move(value));
    return it->second;
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<Key, std::shared_ptr<const QuasiPoly>> table_;
};

KernelCache& cache() {
  static KernelCache instance;
  return instance;
}

}  // namespace

QuasiPoly seed(const KernelFamily& f, std::size_t n) {
  const Basis basis = basis_for(f.problem);
  if (f.problem == Problem::Dirichlet) {
    if (f.side == Side::QFamily) throw StructuralError("Dirichlet problem has no q-kernel family");
    // S(ky) / S(ka)
    return normalize(f.mode, n, basis, {osc_term(1, n, 0, YOsc::Sy, -1, 0)});
  }
  if (f.side == Side::PFamily) {
    // C(k(a-y)) / C(ka) = Cy -/+ Sa Ca^-1 Sy
    const int cross = f.mode == Mode::Hyperbolic ? -1 : 1;
    return normalize(f.mode, n, basis,
                     {osc_term(1, n, 0, YOsc::Cy, 0, 0), osc_term(cross, n, 0, YOsc::Sy, 1, -1)});
  }
  // S(ky) / (k C(ka))
  return normalize(f.mode, n, basis, {osc_term(1, n, -1, YOsc::Sy, 0, -1)});
}

QuasiPoly p2m(const KernelFamily& f, int m, std::size_t n) {
  if (m < 0) throw StructuralError("kernel order must be non-negative");
  const KernelCache::Key key{f, n, m};
  if (auto hit = cache().find(key)) return *hit;
  QuasiPoly value = m == 0 ? seed(f, n) : kappa_recurrence_step(p2m(f, m - 1, n), m);
  return *cache().insert(key, std::move(value));
}

QuasiPoly p2m_closed_form(const KernelFamily& f, int m, std::size_t n) {
  if (m < 0) throw StructuralError("kernel order must be non-negative");
  QuasiPoly q = seed(f, n);
  Rational double_factorial(1);
  for (int i = 1; i <= m; ++i) {
    q = signed_kappa_operator(q);
    double_factorial *= 2 * i - 1;
  }
  return scale(q, double_factorial);
}

Rational multiindex_scale(const MultiIndex& m) {
  const auto abs_m = static_cast<unsigned>(m.total());
  return factorial(m.scaled(2)) * factorial(abs_m) / (factorial(2 * abs_m) * factorial(m));
}

QuasiPoly multiindex_p(const KernelFamily& f, const MultiIndex& m) {
  return scale(p2m(f, m.total(), m.size()), multiindex_scale(m));
}

QuasiPoly monomial_solution(const KernelFamily& f, const MultiIndex& k) {
  const std::size_t n = k.size();
  QuasiPoly sum(f.mode, n, basis_for(f.problem));
  if (f.problem == Problem::Dirichlet && f.side == Side::QFamily)
    throw StructuralError("Dirichlet problem has no q-kernel family");
  for_each_dominated(k.half(), [&](const MultiIndex& m) {
    const MultiIndex two_m = m.scaled(2);
    const Rational c = binomial(k, two_m);
    sum = add(sum, mul_plain(multiindex_p(f, m), plain_term(c, k - two_m)));
  });
  return sum;
}

QuasiPoly bottom_solution(Mode mode, const MultiIndex& k) {
  return reflect_y(monomial_solution(KernelFamily{Problem::Dirichlet, Side::PFamily, mode}, k));
}

QuasiPoly particular(const QuasiPoly& P, Mode mode) {
  if (!P.is_plain_polynomial())
    throw StructuralError("particular: right-hand side must be a polynomial in (x, y)");
  const std::size_t n = P.dimension();
  const int sigma = nu_sign(mode);
  QuasiPoly lap = retag(P, mode, P.basis());
  QuasiPoly sum(mode, n, P.basis());
  // (-1)^j / nu^(j+1) = (-1)^j sigma^(j+1) kappa^(-2j-2)
  for (int j = 0; !lap.is_zero(); ++j) {
    int sign = (j % 2 == 0) ? 1 : -1;
    if (sigma < 0 && (j + 1) % 2 == 1) sign = -sign;
    sum = add(sum, mul_plain(lap, plain_term(Rational(sign), MultiIndex(n), 0, -2 * j - 2)));
    lap = laplacian(lap);
  }
  return sum;
}

std::string to_string(Problem p) { return p == Problem::Dirichlet ? "dirichlet" : "dirichlet_neumann"; }

std::string to_string(Side s) { return s == Side::PFamily ? "p" : "q"; }

}  // namespace helmlayer
