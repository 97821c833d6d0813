#include "starform/explog.hpp"

namespace starform {

namespace {

bool tau_integer_multiple(const TauScalar& c, long long& out) {
  // c must be tau * (integer).
  if (c.is_zero()) {
    out = 0;
    return true;
  }
  if (c.degree() != 1 || !c.coeff(0).is_zero()) return false;
  const GaussianRational& g = c.coeff(1);
  if (g.im != 0 || !is_integer(g.re)) return false;
  out = to_long(g.re);
  return true;
}

using TPolySeries = FormalSeries<TPoly>;

TPolySeries embed(const SymbolSeries& f) {
  TPolySeries out(f.order(), TPoly(f[0].dim(), Globality::chart));
  for (int r = 0; r <= f.order(); ++r) out[r] = TPoly(f[r]);
  return out;
}

// H * (e^{tH_0} u) e^{-tH_0}: the left factor is preprocessed with the plain
// operators, the right/output path runs in the shifted algebra.
TPolySeries conj_lmul(const StarProductSpec& spec, const ExponentiableHead& head,
                      const SymbolSeries& h, const TPolySeries& u) {
  ShiftedAlg sh{head.freq};
  int dim = spec.ctx.dim;
  SymbolSeries hl = h;
  TPolySeries w = u;
  std::optional<FiberOpSeries> s_inv;
  if (spec.magnetic) {
    StarProductSpec base = spec.without_magnetic();
    FiberOpSeries s = fiber_translation(base, *spec.magnetic, +1);
    s_inv = fiber_translation(base, *spec.magnetic, -1);
    hl = apply_fiber_op(SymbolAlg{}, s, hl);
    w = apply_fiber_op(sh, s, w);
  }
  hl = apply_n_kappa(SymbolAlg{}, hl, dim, spec.kappa, +1);
  w = apply_n_kappa(sh, w, dim, spec.kappa, +1);
  TPolySeries out = star_standard_kernel(sh, embed(hl), w, dim, spec.debug_flip_c1_sign);
  out = apply_n_kappa(sh, out, dim, spec.kappa, -1);
  if (s_inv) out = apply_fiber_op(sh, *s_inv, out);
  return out;
}

struct ExpState {
  ExponentiableHead head;
  TPolySeries u;  // Exp(tH) = e^{tH_0} u(t)
};

// Runs the order-by-order integration.  In log mode, h is completed so that
// u_r(1) matches target_r; otherwise h is fixed input.
ExpState run_recursion(const StarProductSpec& spec, SymbolSeries& h, const ExponentiableHead& head,
                       const SymbolSeries* log_target) {
  int n = std::min(spec.ctx.order, h.order());
  int dim = spec.ctx.dim;
  ShiftedAlg sh{head.freq};
  Symbol h0 = h[0];
  TPolySeries u(n, TPoly(dim, Globality::chart));
  u[0] = TPoly(Symbol::one(dim, Globality::chart));
  for (int r = 1; r <= n; ++r) {
    TPolySeries v = conj_lmul(spec, head, h, u);
    for (int t = 0; t <= n; ++t) v[t] = v[t] - sh.mul_sym(h0, u[t]);
    TPoly ur = v[r].integrated();
    if (log_target) {
      Symbol target = (*log_target)[r];
      Symbol hr = target - ur.eval(1);
      h[r] = hr;
      TPoly lin(dim, Globality::chart);
      lin.set(1, hr);
      ur = ur + lin;
    }
    u[r] = ur;
  }
  return {head, std::move(u)};
}

SymbolSeries evaluate(const ExpState& st, const Rational& t, int dim) {
  MultiIndex tn(dim, 0);
  for (int i = 0; i < dim; ++i) {
    Rational v = t * st.head.freq[i];
    if (!is_integer(v)) throw std::domain_error("star_exp: t*head leaves the Fourier lattice");
    tn[i] = static_cast<int>(to_long(v));
  }
  if (!is_integer(t * Rational(st.head.winding)))
    throw std::domain_error("star_exp: t*winding is not integral");
  Symbol lead = Symbol::trig(tn);  // e^{t tau z} = 1 for the integral winding
  SymbolSeries out(st.u.order(), Symbol::zero(dim, Globality::chart));
  for (int r = 0; r <= out.order(); ++r) out[r] = lead * st.u[r].eval(t);
  return out;
}

}  // namespace

std::optional<ExponentiableHead> parse_head(const Symbol& h0) {
  int dim = h0.dim();
  ExponentiableHead head{MultiIndex(dim, 0), 0};
  for (const auto& [key, c] : h0.terms()) {
    if (mi_weight(key.ppow) != 0 || mi_weight(key.freq) != 0) return std::nullopt;
    long long m = 0;
    if (!tau_integer_multiple(c, m)) return std::nullopt;
    if (mi_weight(key.qpow) == 0) {
      head.winding = m;
      continue;
    }
    int axis = -1;
    for (int i = 0; i < dim; ++i) {
      if (key.qpow[i] == 1 && axis < 0)
        axis = i;
      else if (key.qpow[i] != 0)
        return std::nullopt;
    }
    head.freq[axis] = static_cast<int>(m);
  }
  return head;
}

Symbol head_symbol(const ExponentiableHead& head, int dim) {
  Symbol h = Symbol::zero(dim, Globality::chart);
  for (int i = 0; i < dim; ++i)
    if (head.freq[i] != 0)
      h += Symbol::q(i, dim) * TauScalar::tau(1, GaussianRational(head.freq[i]));
  if (head.winding != 0)
    h += Symbol::constant(TauScalar::tau(1, GaussianRational(head.winding)), dim,
                          Globality::chart);
  return h;
}

SymbolSeries star_exp(const StarProductSpec& spec, const SymbolSeries& h, const Rational& t) {
  auto head = parse_head(h[0]);
  if (!head) throw std::domain_error("star_exp: leading term is not an exponentiable head");
  SymbolSeries hc = h.truncate(std::min(spec.ctx.order, h.order()));
  ExpState st = run_recursion(spec, hc, *head, nullptr);
  return evaluate(st, t, spec.ctx.dim);
}

SymbolSeries star_log(const StarProductSpec& spec, const SymbolSeries& f, long long branch) {
  int dim = spec.ctx.dim;
  const Symbol& f0 = f[0];
  MultiIndex n(dim, 0);
  if (!(f0 == Symbol::one(dim))) {
    if (f0.terms().size() != 1) throw std::domain_error("star_log: head not of required form");
    const auto& [key, c] = *f0.terms().begin();
    if (mi_weight(key.qpow) != 0 || mi_weight(key.ppow) != 0 || !(c == TauScalar(1)))
      throw std::domain_error("star_log: head must be a unit trig monomial");
    n = key.freq;
  }
  ExponentiableHead head{n, branch};
  int order = std::min(spec.ctx.order, f.order());
  SymbolSeries h(order, Symbol::zero(dim, Globality::chart));
  h[0] = head_symbol(head, dim);
  // Targets: u_r(1) = e_{-n} f_r.
  SymbolSeries target(order, Symbol::zero(dim, Globality::chart));
  MultiIndex neg(dim, 0);
  for (int i = 0; i < dim; ++i) neg[i] = -n[i];
  Symbol em = Symbol::trig(neg);
  for (int r = 0; r <= order; ++r) target[r] = em * f[r];
  run_recursion(spec, h, head, &target);
  return h;
}

SymbolSeries bch_compose(const StarProductSpec& spec, const SymbolSeries& a,
                         const SymbolSeries& b) {
  auto ha = parse_head(a[0]);
  auto hb = parse_head(b[0]);
  if (!ha || !hb) throw std::domain_error("bch_compose: heads are not jointly exponentiable");
  SymbolSeries prod = star(spec, star_exp(spec, a), star_exp(spec, b));
  return star_log(spec, prod, ha->winding + hb->winding);
}

namespace {

void dynkin_sum(const StarProductSpec& spec, const std::vector<const SymbolSeries*>& word,
                int blocks, const Rational& block_factorials, const SymbolSeries& a,
                const SymbolSeries& b, int max_len, SymbolSeries& acc) {
  if (!word.empty()) {
    // Left-normed bracket [w_0, [w_1, [... w_{L-1}]]].
    SymbolSeries nest = *word.back();
    for (int i = static_cast<int>(word.size()) - 2; i >= 0; --i)
      nest = star_commutator(spec, *word[i], nest);
    Rational coeff = Rational(1) / (Rational(blocks) * Rational(static_cast<long>(word.size())) *
                                    block_factorials);
    if (blocks % 2 == 0) coeff = -coeff;
    acc = acc + nest.scaled(TauScalar(coeff));
  }
  if (static_cast<int>(word.size()) >= max_len) return;
  // Append one more block x^r y^s, r+s >= 1.
  int room = max_len - static_cast<int>(word.size());
  for (int r = 0; r <= room; ++r)
    for (int s = 0; r + s <= room; ++s) {
      if (r + s == 0) continue;
      std::vector<const SymbolSeries*> w = word;
      for (int k = 0; k < r; ++k) w.push_back(&a);
      for (int k = 0; k < s; ++k) w.push_back(&b);
      dynkin_sum(spec, w, blocks + 1, block_factorials * factorial(r) * factorial(s), a, b,
                 max_len, acc);
    }
}

}  // namespace

SymbolSeries bch_direct(const StarProductSpec& spec, const SymbolSeries& a,
                        const SymbolSeries& b) {
  int order = std::min({spec.ctx.order, a.order(), b.order()});
  SymbolSeries acc(order, Symbol::zero(spec.ctx.dim, Globality::chart));
  SymbolSeries at = a.truncate(order), bt = b.truncate(order);
  dynkin_sum(spec, {}, 0, Rational(1), at, bt, order + 1, acc);
  return acc;
}

bool star_exp_ode_residual_is_zero(const StarProductSpec& spec, const SymbolSeries& h) {
  auto head = parse_head(h[0]);
  if (!head) throw std::domain_error("star_exp: leading term is not an exponentiable head");
  SymbolSeries hc = h.truncate(std::min(spec.ctx.order, h.order()));
  ExpState st = run_recursion(spec, hc, *head, nullptr);
  // d/dt (e^{tH_0} u) = H * e^{tH_0} u  <=>  u' + H_0 u = conj_lmul(H, u).
  ShiftedAlg sh{head->freq};
  TPolySeries rhs = conj_lmul(spec, *head, hc, st.u);
  for (int r = 0; r <= st.u.order(); ++r) {
    TPoly du(spec.ctx.dim, Globality::chart);
    for (int j = 1; j <= st.u[r].tdeg(); ++j)
      du.set(j - 1, st.u[r].coeff(j) * TauScalar(Rational(j)));
    TPoly residual = du + sh.mul_sym(h[0], st.u[r]) - rhs[r];
    if (!residual.is_zero()) return false;
  }
  return true;
}

}  // namespace starform
