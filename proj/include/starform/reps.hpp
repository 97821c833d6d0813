#pragma once

#include "starform/hermitian.hpp"

namespace starform {

using TauSeries = FormalSeries<TauScalar>;

// Standard-ordered representation on formal wave functions:
//   rho_S(f) u = sum_mu (-i lambda)^{|mu|}/mu! (d^mu_p f)|_{p=0} d^mu_q u.
SymbolSeries rho_standard(const TruncationContext& ctx, const SymbolSeries& f,
                          const SymbolSeries& u);

// rho_kappa(f) u = rho_S(N_kappa f) u; kappa = 1/2 is the Schroedinger
// representation rho_W.
SymbolSeries rho_kappa(const StarProductSpec& spec, const SymbolSeries& f, const SymbolSeries& u);

// L^2 inner product of global wave-function series (k = 0 Fourier mode of
// conj(u) v).
TauSeries l2_inner(const SymbolSeries& u, const SymbolSeries& v);

// <rho(f) u, v> - <u, rho(conj f) v>; zero exactly for kappa = 1/2.
TauSeries adjoint_residual(const StarProductSpec& spec, const SymbolSeries& f,
                           const SymbolSeries& u, const SymbolSeries& v);

// Local formula for the induced representation of the magnetic product on
// sections of L: eta_W(f) sigma_a = rho_W(e^{i delta_W[A_a]} f) sigma_a.
SymbolSeries eta_weyl_local(const StarProductSpec& weyl_spec, const LineBundleData& bundle,
                            int patch, const SymbolSeries& f, const SymbolSeries& sigma);

// Rieffel induction map on an elementary tensor, through patch-a data:
//   U(s (x) u) = rho_W(N^{-1} s_a) u.
SymbolSeries rieffel_u_local(const StarProductSpec& weyl_spec, const SymbolSeries& s_patch,
                             const SymbolSeries& u);

// U(rho(f) s (x) u) where rho is the S_a-twisted left action of the magnetic
// product on sections of pi^*L.
SymbolSeries rieffel_u_twisted(const StarProductSpec& weyl_spec, const LineBundleData& bundle,
                               int patch, const SymbolSeries& f, const SymbolSeries& s_patch,
                               const SymbolSeries& u);

// Rieffel inner product <s (x) u, t (x) v> = <u, rho_W(h(s,t)) v>.
TauSeries rieffel_inner(const StarProductSpec& weyl_spec, const SymbolSeries& s,
                        const SymbolSeries& u, const SymbolSeries& t, const SymbolSeries& v);

// Gram positivity of a list of elementary tensors: numeric value of the
// lowest nonvanishing lambda-order of sum_{ij} <t_i, t_j>.
double induction_positivity_value(const StarProductSpec& weyl_spec,
                                  const std::vector<std::pair<SymbolSeries, SymbolSeries>>& tensors);

}  // namespace starform
