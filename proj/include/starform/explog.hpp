#pragma once

#include <optional>

#include "starform/star.hpp"

namespace starform {

// Classical head H_0 = tau(n.q + z) of an exponentiable series; exp(H_0) is
// the trig monomial e_n.  The rule e^{tau z} = 1 (z integer) is applied here
// and only here.
struct ExponentiableHead {
  MultiIndex freq;    // n
  long long winding;  // z

  bool is_zero() const { return winding == 0 && mi_weight(freq) == 0; }
};

// Parses tau(n.q + z); empty symbol yields the zero head.
std::optional<ExponentiableHead> parse_head(const Symbol& h0);

Symbol head_symbol(const ExponentiableHead& head, int dim);

// Solves d/dt f = H * f, f(0) = 1, order by order; returns Exp(tH) at the
// given rational t.  Requires t*H_0 exponentiable.
SymbolSeries star_exp(const StarProductSpec& spec, const SymbolSeries& h,
                      const Rational& t = Rational(1));

// Star logarithm with explicit branch: the head becomes tau(n.q + z) where
// f_0 = e_n.  Exp(Ln(f)) = f to the truncation order.
SymbolSeries star_log(const StarProductSpec& spec, const SymbolSeries& f, long long branch = 0);

// a o_star b computed as Ln(Exp(a) * Exp(b)); heads add.
SymbolSeries bch_compose(const StarProductSpec& spec, const SymbolSeries& a,
                         const SymbolSeries& b);

// Independent evaluation of the Baker-Campbell-Hausdorff series as truncated
// commutator partial sums (Dynkin form); words up to length order+1
// contribute, since every star commutator raises the lambda-order.
SymbolSeries bch_direct(const StarProductSpec& spec, const SymbolSeries& a, const SymbolSeries& b);

// Max-over-orders residual of the defining equation d/dt Exp(tH) = H * Exp(tH)
// on the internal t-polynomial representation; identically zero for a correct
// kernel.  Exposed as the substitution oracle for tests.
bool star_exp_ode_residual_is_zero(const StarProductSpec& spec, const SymbolSeries& h);

}  // namespace starform
