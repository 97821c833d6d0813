#pragma once

#include <memory>
#include <optional>

#include "starform/combinatorics.hpp"
#include "starform/matrix_symbol.hpp"
#include "starform/series.hpp"
#include "starform/symbol.hpp"
#include "starform/tensors.hpp"
#include "starform/tpoly.hpp"

namespace starform {

// One-form on a chart: components A_i(q) as chart wave functions.
struct OneForm {
  std::vector<Symbol> comp;

  int dim() const { return static_cast<int>(comp.size()); }
  static OneForm zero(int dim) {
    return {std::vector<Symbol>(dim, Symbol::zero(dim, Globality::chart))};
  }
};

struct MagneticOps;

// Star-product selector: kappa-ordering plus an optional magnetic potential
// (the chart potential A_alpha of a line bundle; the induced product is the
// kappa-ordered product twisted by -lambda B).
struct StarProductSpec {
  TruncationContext ctx;
  Rational kappa = 0;
  std::optional<OneForm> magnetic;
  bool debug_flip_c1_sign = false;  // test fixture: breaks the C_1 sign
  mutable std::shared_ptr<const MagneticOps> magnetic_ops;  // lazily built S, S^{-1}

  static StarProductSpec standard(int order, int dim) { return {{order, dim}, 0, {}, false}; }
  static StarProductSpec weyl(int order, int dim) {
    return {{order, dim}, Rational(1, 2), {}, false};
  }
  static StarProductSpec kappa_ordered(int order, int dim, Rational k) {
    return {{order, dim}, std::move(k), {}, false};
  }

  StarProductSpec without_magnetic() const {
    StarProductSpec s = *this;
    s.magnetic.reset();
    s.magnetic_ops.reset();
    return s;
  }
};

struct MagneticOps {
  FiberOpSeries s;
  FiberOpSeries s_inv;
};

// ---------------------------------------------------------------------------
// Algebra contexts.  The star kernels are written once against this duck-typed
// interface; instantiations cover plain symbols, matrices of symbols, and the
// t-polynomial algebra with the shifted derivative used by star exponentials.

struct SymbolAlg {
  using V = Symbol;
  Symbol dq(int axis, const Symbol& s) const { return s.dq(axis); }
  Symbol dp(int axis, const Symbol& s) const { return s.dp(axis); }
  Symbol mul(const Symbol& a, const Symbol& b) const { return a * b; }
  Symbol mul_sym(const Symbol& f, const Symbol& a) const { return f * a; }
  Symbol smul(const TauScalar& t, const Symbol& a) const { return a * t; }
  Symbol zero(const Symbol& like) const { return Symbol::zero(like.dim(), like.globality()); }
};

struct MatrixAlg {
  using V = MatrixSymbol;
  MatrixSymbol dq(int axis, const MatrixSymbol& m) const { return m.dq(axis); }
  MatrixSymbol dp(int axis, const MatrixSymbol& m) const { return m.dp(axis); }
  MatrixSymbol mul(const MatrixSymbol& a, const MatrixSymbol& b) const { return a * b; }
  MatrixSymbol mul_sym(const Symbol& f, const MatrixSymbol& m) const {
    return m.map([&](const Symbol& s) { return f * s; });
  }
  MatrixSymbol smul(const TauScalar& t, const MatrixSymbol& m) const { return m * t; }
  MatrixSymbol zero(const MatrixSymbol& like) const {
    return MatrixSymbol(like.size(), like.dim());
  }
};

// Conjugation of the symbol algebra by e^{t H_0}, H_0 = tau(n.q + z):
// d/dq_i picks up the extra term t * tau * n_i.
struct ShiftedAlg {
  using V = TPoly;
  MultiIndex head;

  TPoly dq(int axis, const TPoly& u) const {
    TPoly r(u.dim(), Globality::chart);
    for (int j = 0; j <= u.tdeg(); ++j) r.set(j, u.coeff(j).dq(axis));
    if (head.at(axis) != 0) {
      TauScalar f = TauScalar::tau(1, GaussianRational(head[axis]));
      for (int j = 0; j <= u.tdeg(); ++j) r.set(j + 1, r.coeff_or_zero(j + 1) + u.coeff(j) * f);
    }
    return r;
  }
  TPoly dp(int axis, const TPoly& u) const {
    TPoly r(u.dim(), Globality::chart);
    for (int j = 0; j <= u.tdeg(); ++j) r.set(j, u.coeff(j).dp(axis));
    return r;
  }
  TPoly mul(const TPoly& a, const TPoly& b) const { return a * b; }
  TPoly mul_sym(const Symbol& f, const TPoly& u) const {
    TPoly r(u.dim(), Globality::chart);
    for (int j = 0; j <= u.tdeg(); ++j) r.set(j, f * u.coeff(j));
    return r;
  }
  TPoly smul(const TauScalar& t, const TPoly& u) const { return u * t; }
  TPoly zero(const TPoly& like) const { return TPoly(like.dim(), Globality::chart); }
};

// ---------------------------------------------------------------------------
// Kernels.

// Standard-ordered product on T*T^n with flat connection:
//   f *_S g = sum_c (-i lambda)^c sum_{|mu|=c} (1/mu!) (d^mu_p f)(d^mu_q g).
template <class A, class V = typename A::V>
FormalSeries<V> star_standard_kernel(const A& alg, const FormalSeries<V>& f,
                                     const FormalSeries<V>& g, int dim,
                                     bool flip_c1 = false) {
  int n = std::min(f.order(), g.order());
  FormalSeries<V> out(n, alg.zero(f[0]));
  for (int c = 0; c <= n; ++c) {
    GaussianRational pref = i_pow(c);
    if (c % 2 == 1) pref = -pref;  // (-i)^c
    if (c == 1 && flip_c1) pref = -pref;
    for (const auto& mu : multi_indices(dim, c)) {
      TauScalar scale(GaussianRational(Rational(1) / multi_factorial(mu)) * pref);
      // p-derivatives annihilate fast; evaluate them first and bail out
      // before touching the q-derivatives of g.
      std::vector<V> df;
      bool any = false;
      for (int r = 0; r + c <= n; ++r) {
        V a = f[r];
        for (int i = 0; i < dim; ++i)
          for (int k = 0; k < mu[i] && !a.is_zero(); ++k) a = alg.dp(i, a);
        any = any || !a.is_zero();
        df.push_back(std::move(a));
      }
      if (!any) continue;
      std::vector<V> dg;
      for (int s = 0; s + c <= n; ++s) {
        V b = g[s];
        for (int i = 0; i < dim; ++i)
          for (int k = 0; k < mu[i]; ++k) b = alg.dq(i, b);
        dg.push_back(std::move(b));
      }
      for (int r = 0; r + c <= n; ++r) {
        if (df[r].is_zero()) continue;
        for (int s = 0; r + s + c <= n; ++s) {
          if (dg[s].is_zero()) continue;
          out[r + s + c] += alg.smul(scale, alg.mul(df[r], dg[s]));
        }
      }
    }
  }
  return out;
}

// Flat Laplacian sum_k d^2/dp_k dq^k.
template <class A, class V = typename A::V>
V laplacian_of(const A& alg, const V& v, int dim) {
  V out = alg.zero(v);
  for (int k = 0; k < dim; ++k) out += alg.dp(k, alg.dq(k, v));
  return out;
}

inline Symbol laplacian(const Symbol& f) { return laplacian_of(SymbolAlg{}, f, f.dim()); }

// N_kappa^{sign} = exp(-sign * i * kappa * lambda * Delta).
template <class A, class V = typename A::V>
FormalSeries<V> apply_n_kappa(const A& alg, const FormalSeries<V>& f, int dim,
                              const Rational& kappa, int sign) {
  if (kappa == 0) return f;
  FormalSeries<V> out(f.order(), alg.zero(f[0]));
  GaussianRational base = -i_pow(1) * GaussianRational(kappa);
  if (sign < 0) base = -base;
  std::vector<V> lap = f.coeffs();  // Delta^j applied incrementally
  for (int j = 0; j <= f.order(); ++j) {
    TauScalar scale(gr_pow(base, j) * GaussianRational(Rational(1) / factorial(j)));
    for (int t = j; t <= f.order(); ++t) {
      if (lap[t - j].is_zero()) continue;
      out[t] += alg.smul(scale, lap[t - j]);
    }
    for (auto& v : lap) v = laplacian_of(alg, v, dim);
  }
  return out;
}

// Lambda-graded fiber operator applied to a series.
template <class A, class V = typename A::V>
FormalSeries<V> apply_fiber_op(const A& alg, const FiberOpSeries& op, const FormalSeries<V>& f) {
  FormalSeries<V> out(std::min(op.order(), f.order()), alg.zero(f[0]));
  for (int j = 0; j <= out.order(); ++j)
    for (const auto& term : op.grade(j))
      for (int t = j; t <= out.order(); ++t) {
        if (f[t - j].is_zero()) continue;
        V v = f[t - j];
        for (int i = 0; i < op.dim(); ++i)
          for (int k = 0; k < term.mu[i]; ++k) v = alg.dp(i, v);
        out[t] += alg.mul_sym(term.coeff, v);
      }
  return out;
}

// ---------------------------------------------------------------------------
// Fiber-translation machinery (section 4 operators).

// delta_kappa[A] = F( sum_s ((i k lambda)^{s+1} - (-i(1-k)lambda)^{s+1})/(s+1)! D^s A ).
FiberOpSeries delta_kappa_op(const StarProductSpec& spec, const OneForm& a);

// S = exp(i delta_kappa[A]), the quantized fiber translation by lambda A.
FiberOpSeries fiber_translation(const StarProductSpec& spec, const OneForm& a, int sign = +1);

// F(e^{c lambda D} u) with c a Gaussian-rational constant; the two Lemma-4.2
// multiplication operators use c = i kappa and c = -i(1-kappa).
FiberOpSeries lift_mult_op(const TruncationContext& ctx, const Symbol& u, GaussianRational c);

// ---------------------------------------------------------------------------
// Product dispatch.

template <class A, class V = typename A::V>
FormalSeries<V> star_product(const A& alg, const StarProductSpec& spec, const FormalSeries<V>& f,
                             const FormalSeries<V>& g) {
  int dim = spec.ctx.dim;
  if (!spec.magnetic) {
    if (spec.kappa == 0)
      return star_standard_kernel(alg, f, g, dim, spec.debug_flip_c1_sign);
    auto nf = apply_n_kappa(alg, f, dim, spec.kappa, +1);
    auto ng = apply_n_kappa(alg, g, dim, spec.kappa, +1);
    auto h = star_standard_kernel(alg, nf, ng, dim, spec.debug_flip_c1_sign);
    return apply_n_kappa(alg, h, dim, spec.kappa, -1);
  }
  StarProductSpec base = spec.without_magnetic();
  if (!spec.magnetic_ops)
    spec.magnetic_ops = std::make_shared<const MagneticOps>(
        MagneticOps{fiber_translation(base, *spec.magnetic, +1),
                    fiber_translation(base, *spec.magnetic, -1)});
  auto h = star_product(alg, base, apply_fiber_op(alg, spec.magnetic_ops->s, f),
                        apply_fiber_op(alg, spec.magnetic_ops->s, g));
  return apply_fiber_op(alg, spec.magnetic_ops->s_inv, h);
}

inline SymbolSeries star(const StarProductSpec& spec, const SymbolSeries& f,
                         const SymbolSeries& g) {
  return star_product(SymbolAlg{}, spec, f, g);
}
inline MatrixSeries star(const StarProductSpec& spec, const MatrixSeries& f,
                         const MatrixSeries& g) {
  return star_product(MatrixAlg{}, spec, f, g);
}

inline SymbolSeries star_standard(const TruncationContext& ctx, const SymbolSeries& f,
                                  const SymbolSeries& g) {
  return star_standard_kernel(SymbolAlg{}, f, g, ctx.dim);
}

inline SymbolSeries apply_N_kappa(const StarProductSpec& spec, const SymbolSeries& f) {
  return apply_n_kappa(SymbolAlg{}, f, spec.ctx.dim, spec.kappa, +1);
}
inline SymbolSeries apply_N_kappa_inv(const StarProductSpec& spec, const SymbolSeries& f) {
  return apply_n_kappa(SymbolAlg{}, f, spec.ctx.dim, spec.kappa, -1);
}

inline SymbolSeries star_commutator(const StarProductSpec& spec, const SymbolSeries& f,
                                    const SymbolSeries& g) {
  return star(spec, f, g) - star(spec, g, f);
}

// delta_kappa[A] f, lowest lambda-order >= 1.
inline SymbolSeries delta_kappa(const StarProductSpec& spec, const OneForm& a,
                                const SymbolSeries& f) {
  return apply_fiber_op(SymbolAlg{}, delta_kappa_op(spec, a), f);
}

// Poisson bracket {f,g} = sum_k d_q f d_p g - d_p f d_q g.
inline Symbol poisson(const Symbol& f, const Symbol& g) {
  Symbol out = Symbol::zero(f.dim(), Globality::chart);
  for (int k = 0; k < f.dim(); ++k) out += f.dq(k) * g.dp(k) - f.dp(k) * g.dq(k);
  return out;
}

// Star inverse: g with f * g = 1, requiring an invertible leading term.
template <class A, class V = typename A::V>
FormalSeries<V> star_invert(const A& alg, const StarProductSpec& spec, const FormalSeries<V>& f) {
  V lead_inv = invert_element(f[0]);
  FormalSeries<V> g(f.order(), alg.zero(f[0]));
  g[0] = lead_inv;
  for (int r = 1; r <= f.order(); ++r) {
    // (f * g)_r = 0 determines g_r through the pointwise product with f_0.
    auto partial = star_product(alg, spec, f, g).truncate(r);
    g[r] = -alg.mul(lead_inv, partial[r]);
  }
  return g;
}

inline SymbolSeries star_invert(const StarProductSpec& spec, const SymbolSeries& f) {
  return star_invert(SymbolAlg{}, spec, f);
}
inline MatrixSeries star_invert(const StarProductSpec& spec, const MatrixSeries& f) {
  return star_invert(MatrixAlg{}, spec, f);
}

}  // namespace starform
