#include "starform/operator_series.hpp"

namespace starform {

std::vector<Symbol> OperatorSeries::probe_basis(int dim) {
  std::vector<Symbol> probes{Symbol::one(dim)};
  for (int i = 0; i < dim; ++i) {
    probes.push_back(Symbol::q(i, dim));
    probes.push_back(Symbol::p(i, dim));
    probes.push_back(Symbol::q(i, dim) * Symbol::p(i, dim));
    probes.push_back(Symbol::p(i, dim) * Symbol::p(i, dim));
    MultiIndex k(dim, 0);
    k[i] = 1;
    probes.push_back(Symbol::trig(k));
    probes.push_back(Symbol::trig(k) * Symbol::p(i, dim));
  }
  return probes;
}

namespace {

void require_grade0(const OperatorSeries& t, bool identity, const char* who) {
  for (const auto& s : OperatorSeries::probe_basis(t.dim())) {
    Symbol expect = identity ? s : Symbol::zero(s.dim(), s.globality());
    if (!(t.grade(0)(s) == expect)) throw std::domain_error(std::string(who) + ": grade-0 precondition violated");
  }
}

}  // namespace

OperatorSeries op_exp(const OperatorSeries& d) {
  require_grade0(d, false, "op_exp");
  int n = d.order();
  OperatorSeries acc = OperatorSeries::identity(n, d.dim());
  OperatorSeries pow = OperatorSeries::identity(n, d.dim());
  for (int k = 1; k <= n; ++k) {
    pow = pow.compose(d);
    acc = acc + pow.scaled(TauScalar(Rational(1) / factorial(k)));
  }
  return acc;
}

OperatorSeries op_log(const OperatorSeries& t) {
  require_grade0(t, true, "op_log");
  int n = t.order();
  OperatorSeries delta = t - OperatorSeries::identity(n, t.dim());
  OperatorSeries acc(n, t.dim());
  OperatorSeries pow = OperatorSeries::identity(n, t.dim());
  for (int k = 1; k <= n; ++k) {
    pow = pow.compose(delta);
    Rational c = Rational(1) / k;
    if (k % 2 == 0) c = -c;
    acc = acc + pow.scaled(TauScalar(c));
  }
  return acc;
}

OperatorSeries ad_op(const StarProductSpec& spec, const SymbolSeries& h) {
  int n = std::min(spec.ctx.order, h.order());
  OperatorSeries out(n, spec.ctx.dim);
  for (int r = 0; r <= n; ++r) {
    SymbolSeries hc = h.truncate(n);
    StarProductSpec sp = spec;
    out.set_grade(r, [sp, hc, r](const Symbol& s) {
      SymbolSeries fs = symbol_series(hc.order(), s);
      SymbolSeries c = star(sp, hc, fs) - star(sp, fs, hc);
      return c[r];
    });
  }
  return out;
}

OperatorSeries n_kappa_op(const StarProductSpec& spec, int sign) {
  OperatorSeries out(spec.ctx.order, spec.ctx.dim);
  GaussianRational base(Rational(0), sign > 0 ? -spec.kappa : spec.kappa);  // -sign*i*kappa
  for (int j = 0; j <= spec.ctx.order; ++j) {
    TauScalar scale(gr_pow(base, j) * GaussianRational(Rational(1) / factorial(j)));
    int dim = spec.ctx.dim;
    out.set_grade(j, [scale, j, dim](const Symbol& s) {
      Symbol v = s;
      for (int k = 0; k < j; ++k) v = laplacian(v);
      return v * scale;
    });
  }
  return out;
}

OperatorSeries to_operator_series(const FiberOpSeries& op) {
  OperatorSeries out(op.order(), op.dim());
  for (int r = 0; r <= op.order(); ++r) {
    std::vector<FiberOpSeries::Term> terms = op.grade(r);
    int dim = op.dim();
    out.set_grade(r, [terms, dim](const Symbol& s) {
      Symbol acc = Symbol::zero(s.dim(), s.globality());
      for (const auto& t : terms) {
        Symbol v = s;
        for (int i = 0; i < dim; ++i)
          for (int k = 0; k < t.mu[i]; ++k) v = v.dp(i);
        acc += t.coeff * v;
      }
      return acc;
    });
  }
  return out;
}

}  // namespace starform
