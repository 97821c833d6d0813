#include "starform/reps.hpp"

namespace starform {

SymbolSeries rho_standard(const TruncationContext& ctx, const SymbolSeries& f,
                          const SymbolSeries& u) {
  int n = std::min({ctx.order, f.order(), u.order()});
  int dim = ctx.dim;
  SymbolSeries out(n, Symbol::zero(dim, Globality::chart));
  for (int c = 0; c <= n; ++c) {
    GaussianRational pref = i_pow(c);
    if (c % 2 == 1) pref = -pref;  // (-i)^c
    for (const auto& mu : multi_indices(dim, c)) {
      TauScalar scale(pref * GaussianRational(Rational(1) / multi_factorial(mu)));
      for (int r = 0; r + c <= n; ++r) {
        Symbol df = f[r];
        for (int i = 0; i < dim; ++i)
          for (int k = 0; k < mu[i]; ++k) df = df.dp(i);
        df = df.zero_section_restrict();
        if (df.is_zero()) continue;
        for (int s = 0; r + s + c <= n; ++s) {
          Symbol dg = u[s];
          for (int i = 0; i < dim; ++i)
            for (int k = 0; k < mu[i]; ++k) dg = dg.dq(i);
          out[r + s + c] += (df * dg) * scale;
        }
      }
    }
  }
  return out;
}

SymbolSeries rho_kappa(const StarProductSpec& spec, const SymbolSeries& f,
                       const SymbolSeries& u) {
  return rho_standard(spec.ctx, apply_N_kappa(spec.without_magnetic(), f), u);
}

TauSeries l2_inner(const SymbolSeries& u, const SymbolSeries& v) {
  int n = std::min(u.order(), v.order());
  TauSeries out(n, TauScalar());
  for (int r = 0; r <= n; ++r)
    for (int s = 0; r + s <= n; ++s) out[r + s] += (u[r].conj() * v[s]).torus_integral();
  return out;
}

TauSeries adjoint_residual(const StarProductSpec& spec, const SymbolSeries& f,
                           const SymbolSeries& u, const SymbolSeries& v) {
  TauSeries lhs = l2_inner(rho_kappa(spec, f, u), v);
  TauSeries rhs = l2_inner(u, rho_kappa(spec, series_conj(f), v));
  return lhs - rhs;
}

SymbolSeries eta_weyl_local(const StarProductSpec& weyl_spec, const LineBundleData& bundle,
                            int patch, const SymbolSeries& f, const SymbolSeries& sigma) {
  require_weyl(weyl_spec, "eta_weyl");
  StarProductSpec base = weyl_spec.without_magnetic();
  FiberOpSeries s = fiber_translation(base, bundle.potential(patch), +1);
  return rho_kappa(base, apply_fiber_op(SymbolAlg{}, s, f), sigma);
}

SymbolSeries rieffel_u_local(const StarProductSpec& weyl_spec, const SymbolSeries& s_patch,
                             const SymbolSeries& u) {
  require_weyl(weyl_spec, "rieffel_U");
  StarProductSpec base = weyl_spec.without_magnetic();
  return rho_kappa(base, quantum_coefficients(base, s_patch), u);
}

SymbolSeries rieffel_u_twisted(const StarProductSpec& weyl_spec, const LineBundleData& bundle,
                               int patch, const SymbolSeries& f, const SymbolSeries& s_patch,
                               const SymbolSeries& u) {
  require_weyl(weyl_spec, "rieffel_U");
  StarProductSpec base = weyl_spec.without_magnetic();
  FiberOpSeries s = fiber_translation(base, bundle.potential(patch), +1);
  SymbolSeries twisted =
      star(base, apply_fiber_op(SymbolAlg{}, s, f), quantum_coefficients(base, s_patch));
  return rho_kappa(base, twisted, u);
}

TauSeries rieffel_inner(const StarProductSpec& weyl_spec, const SymbolSeries& s,
                        const SymbolSeries& u, const SymbolSeries& t, const SymbolSeries& v) {
  SymbolSeries h = metric_eval(weyl_spec, s, t);
  return l2_inner(u, rho_kappa(weyl_spec.without_magnetic(), h, v));
}

double induction_positivity_value(
    const StarProductSpec& weyl_spec,
    const std::vector<std::pair<SymbolSeries, SymbolSeries>>& tensors) {
  if (tensors.empty()) return 0.0;
  int order = weyl_spec.ctx.order;
  TauSeries gram(order, TauScalar());
  for (const auto& [s, u] : tensors)
    for (const auto& [t, v] : tensors) gram = gram + rieffel_inner(weyl_spec, s, u, t, v);
  int low = gram.lowest_order();
  if (low < 0) return 0.0;
  return gram[low].to_complex().real();
}

}  // namespace starform
