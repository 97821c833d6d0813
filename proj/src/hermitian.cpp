#include "starform/hermitian.hpp"

namespace starform {

SymbolSeries metric_eval(const StarProductSpec& spec, const std::vector<SymbolSeries>& s,
                         const std::vector<SymbolSeries>& s_prime) {
  require_weyl(spec, "metric_eval");
  if (s.size() != s_prime.size() || s.empty())
    throw std::invalid_argument("metric_eval: coefficient vectors must have equal rank");
  StarProductSpec base = spec.without_magnetic();
  SymbolSeries acc(spec.ctx.order, Symbol::zero(spec.ctx.dim, Globality::chart));
  for (size_t i = 0; i < s.size(); ++i) {
    SymbolSeries a = series_conj(quantum_coefficients(base, s[i]));
    SymbolSeries b = quantum_coefficients(base, s_prime[i]);
    acc = acc + star(base, a, b);
  }
  return acc;
}

UnitarityReport unitary_cocycle_check(const LineBundleData& bundle, const StarProductSpec& spec) {
  require_weyl(spec, "unitary_cocycle_check");
  UnitarityReport report;
  StarProductSpec base = spec.without_magnetic();
  for (const auto& [a, b] : bundle.cover().pairs()) {
    for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
      SymbolSeries phi = symbol_series(spec.ctx.order, bundle.transition_function(x, y));
      SymbolSeries prod = star(base, series_conj(phi), phi);
      SymbolSeries residual = prod - symbol_series(prod.order(), Symbol::one(spec.ctx.dim));
      if (!residual.is_zero()) {
        report.pass = false;
        report.failures.push_back({{x, y}, residual.lowest_order()});
      }
    }
  }
  return report;
}

MatrixSeries hermitian_sqrt(const StarProductSpec& spec, const MatrixSeries& h) {
  require_weyl(spec, "hermitian_sqrt");
  int k = h[0].size();
  int dim = h[0].dim();
  if (!(h[0] == MatrixSymbol::identity(k, dim)))
    throw std::invalid_argument("hermitian_sqrt: leading matrix must be the identity");
  if (!(series_adjoint(h) == h))
    throw std::invalid_argument("hermitian_sqrt: input is not Hermitian");
  MatrixSeries u(h.order(), MatrixSymbol(k, dim));
  u[0] = MatrixSymbol::identity(k, dim);
  TauScalar half(Rational(1, 2));
  for (int r = 1; r <= h.order(); ++r) {
    // (U* * U)_r with the unknown U_r still zero contributes U_r* + U_r.
    MatrixSeries partial = star(spec, series_adjoint(u), u).truncate(r);
    MatrixSymbol k_r = h[r] - partial[r];
    if (!(k_r.adjoint() == k_r))
      throw std::logic_error("hermitian_sqrt: defect matrix is not Hermitian");
    u[r] = k_r * half;
  }
  return u;
}

MatrixSeries orthonormalize_frame(const StarProductSpec& spec, const MatrixSeries& h) {
  return star_invert(spec, hermitian_sqrt(spec, h));
}

SymbolSeries theta_compatibility_residual(const StarProductSpec& weyl_spec,
                                          const LineBundleData& bundle, int patch,
                                          const SymbolSeries& s, const SymbolSeries& t,
                                          const SymbolSeries& z) {
  require_weyl(weyl_spec, "theta_compatibility_check");
  StarProductSpec base = weyl_spec.without_magnetic();
  OneForm a = bundle.potential(patch);
  FiberOpSeries strans = fiber_translation(base, a, +1);
  FiberOpSeries strans_inv = fiber_translation(base, a, -1);
  SymbolSeries s_hat = quantum_coefficients(base, s);
  SymbolSeries t_hat = quantum_coefficients(base, t);
  SymbolSeries z_hat = quantum_coefficients(base, z);
  // Theta_{s,t} as a local star'-endomorphism, acting through the twisted left
  // action: quantum coefficients S(Theta) *_W z_hat.
  SymbolSeries theta =
      apply_fiber_op(SymbolAlg{}, strans_inv, star(base, s_hat, series_conj(t_hat)));
  SymbolSeries lhs = star(base, apply_fiber_op(SymbolAlg{}, strans, theta), z_hat);
  // s . h(t, z): right module action on quantum coefficients.
  SymbolSeries rhs = star(base, s_hat, metric_eval(weyl_spec, t, z));
  return lhs - rhs;
}

double metric_positivity_value(const StarProductSpec& spec, const std::vector<SymbolSeries>& s) {
  SymbolSeries h = metric_eval(spec, s, s);
  int low = h.lowest_order();
  if (low < 0) return 0.0;  // zero section
  return h[low].torus_integral().to_complex().real();
}

}  // namespace starform
