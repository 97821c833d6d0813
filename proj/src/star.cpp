#include "starform/star.hpp"

namespace starform {

FiberOpSeries delta_kappa_op(const StarProductSpec& spec, const OneForm& a) {
  int n = spec.ctx.order;
  int dim = spec.ctx.dim;
  if (a.dim() != dim) throw std::invalid_argument("delta_kappa: one-form dimension mismatch");
  FiberOpSeries op(n, dim);
  GaussianRational ik(Rational(0), spec.kappa);            // i*kappa
  GaussianRational mik(Rational(0), spec.kappa - 1);       // -i*(1-kappa)
  SymTensorField t = SymTensorField::from_one_form(a.comp);  // D^s A, starting at s=0
  for (int s = 0; s + 1 <= n; ++s) {
    if (t.is_zero()) break;
    GaussianRational c = (gr_pow(ik, s + 1) - gr_pow(mik, s + 1)) * GaussianRational(Rational(1) / factorial(s + 1));
    op.add_tensor(s + 1, t, TauScalar(c));
    t = t.derivative();
  }
  return op;
}

FiberOpSeries fiber_translation(const StarProductSpec& spec, const OneForm& a, int sign) {
  GaussianRational i = GaussianRational::i();
  if (sign < 0) i = -i;
  return delta_kappa_op(spec, a).scaled(TauScalar(i)).exp();
}

FiberOpSeries lift_mult_op(const TruncationContext& ctx, const Symbol& u, GaussianRational c) {
  FiberOpSeries op(ctx.order, ctx.dim);
  SymTensorField t = SymTensorField::from_function(u);
  for (int s = 0; s <= ctx.order; ++s) {
    if (t.is_zero()) break;
    op.add_tensor(s, t, TauScalar(gr_pow(c, s) * GaussianRational(Rational(1) / factorial(s))));
    t = t.derivative();
  }
  return op;
}

}  // namespace starform
