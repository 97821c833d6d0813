#include "starform/bundle.hpp"

namespace starform {

namespace {

// 2*pi as a TauScalar: tau/i = -i*tau.
TauScalar two_pi(const Rational& scale = Rational(1)) {
  return TauScalar::tau(1, GaussianRational(Rational(0), -scale));
}

}  // namespace

LineBundleData::LineBundleData(Rational charge, GoodCover cover)
    : cover_(std::move(cover)), charge_(std::move(charge)), has_transitions_(true) {
  if (cover_.dim() != 2)
    throw std::invalid_argument("LineBundleData: monopole bundles live on the T^2 cover");
  if (!is_integer(charge_))
    throw std::invalid_argument("LineBundleData: no line bundle exists for fractional charge");
  validate();
}

LineBundleData LineBundleData::field_only(FormalSeries<Rational> charges) {
  LineBundleData b(Rational(0), GoodCover(2));
  b.has_transitions_ = false;
  b.charge_ = charges[0];
  b.field_charges_ = std::move(charges);
  return b;
}

long LineBundleData::adjustment(int a, int b) const {
  auto it = adjustments_.find({a, b});
  return it == adjustments_.end() ? 0 : it->second;
}

void LineBundleData::set_adjustment(int a, int b, long value) {
  adjustments_[{a, b}] = value;
  adjustments_[{b, a}] = -value;
}

Symbol LineBundleData::transition_exponent(int a, int b) const {
  MultiIndex s = cover_.offset(a, b);
  Symbol c = Symbol::q(1, 2) * TauScalar(charge_ * s[0]);
  long n = adjustment(a, b);
  if (n != 0) c += Symbol::constant(TauScalar(Rational(n)), 2, Globality::chart);
  return c;
}

Symbol LineBundleData::transition_function(int a, int b) const {
  MultiIndex s = cover_.offset(a, b);
  Rational freq = charge_ * s[0];
  // e^{2 pi i (m s^x y + n)} = e^{tau m s^x y}; the integer part drops here.
  return Symbol::trig({0, static_cast<int>(to_long(freq))});
}

OneForm LineBundleData::potential(int) const {
  // A = 2 pi m x dy; the chart expression is patch-independent, the deck
  // offsets carry the difference between lifts.
  Symbol ax = Symbol::zero(2, Globality::chart);
  Symbol ay = Symbol::q(0, 2) * two_pi(charge_);
  return OneForm{{ax, ay}};
}

FormalSeries<TauScalar> LineBundleData::curvature_coefficient(int order) const {
  FormalSeries<TauScalar> b(order, TauScalar());
  if (has_transitions_) {
    b[0] = two_pi(charge_);
  } else {
    for (int r = 0; r <= std::min(order, field_charges_.order()); ++r)
      b[r] = two_pi(field_charges_[r]);
  }
  return b;
}

Symbol LineBundleData::to_chart(int a, int b, const Symbol& f, bool section) const {
  MultiIndex s = cover_.offset(a, b);
  MultiIndex minus(s.size());
  for (size_t i = 0; i < s.size(); ++i) minus[i] = -s[i];
  Symbol g = f.substitute_offset(minus);
  if (section) g = transition_function(a, b) * g;
  return g;
}

SymbolSeries LineBundleData::to_chart(int a, int b, const SymbolSeries& f, bool section) const {
  SymbolSeries out = f;
  for (int r = 0; r <= f.order(); ++r) out[r] = to_chart(a, b, f[r], section);
  return out;
}

StarProductSpec LineBundleData::magnetic_spec(int a, int order, const Rational& kappa) const {
  if (!has_transitions_)
    throw std::domain_error("magnetic_spec: field-only data has no bundle structure");
  StarProductSpec spec = StarProductSpec::kappa_ordered(order, 2, kappa);
  spec.magnetic = potential(a);
  return spec;
}

void LineBundleData::validate() const {
  // dA_a = B on every patch.
  for (int a = 0; a < cover_.patch_count(); ++a) {
    OneForm pa = potential(a);
    Symbol da = pa.comp[1].dq(0) - pa.comp[0].dq(1);
    if (!(da == Symbol::constant(two_pi(charge_), 2, Globality::chart)))
      throw std::logic_error("LineBundleData: dA != B");
  }
  // A_a - A_b = 2 pi dc_{ab} on every ordered overlap.
  for (const auto& [a, b] : cover_.pairs()) {
    for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
      OneForm ax = potential(x);
      OneForm ay = potential(y);
      Symbol c = transition_exponent(x, y);
      for (int i = 0; i < 2; ++i) {
        Symbol lhs = ax.comp[i] - to_chart(x, y, ay.comp[i]);
        Symbol rhs = c.dq(i) * two_pi();
        if (!(lhs == rhs)) throw std::logic_error("LineBundleData: A_a - A_b != 2 pi dc_ab");
      }
    }
  }
}

ClassicalCocycle verify_classical_cocycle(const LineBundleData& bundle) {
  const GoodCover& cover = bundle.cover();
  ClassicalCocycle out;
  for (const auto& [a, b, c] : cover.triples()) {
    Symbol sum = bundle.transition_exponent(a, b) +
                 bundle.to_chart(a, b, bundle.transition_exponent(b, c)) +
                 bundle.to_chart(a, c, bundle.transition_exponent(c, a));
    // The sum must be an integer constant.
    TermKey constant{MultiIndex(2, 0), MultiIndex(2, 0), MultiIndex(2, 0)};
    Symbol rest = sum - Symbol::constant(sum.coeff(constant), 2, Globality::chart);
    TauScalar value = sum.coeff(constant);
    if (!rest.is_zero() || value.degree() > 0 || value.coeff(0).im != 0 ||
        !is_integer(value.coeff(0).re))
      throw std::logic_error("classical cocycle violated on triple (" + std::to_string(a) + "," +
                             std::to_string(b) + "," + std::to_string(c) + ")");
    out.triples.push_back({a, b, c});
    out.values.push_back(value.coeff(0).re);
  }
  return out;
}

DiracReport dirac_check(const FormalSeries<TauScalar>& b_coefficient) {
  DiracReport report;
  for (int r = 0; r <= b_coefficient.order(); ++r) {
    const TauScalar& c = b_coefficient[r];
    Rational charge = 0;
    if (!c.is_zero()) {
      // Constant-coefficient closed two-form: c must be 2 pi q = -i tau q.
      if (c.degree() != 1 || !c.coeff(0).is_zero() || c.coeff(1).re != 0)
        throw std::domain_error("dirac_check: B is not a real constant multiple of dx^dy");
      charge = -c.coeff(1).im;
    }
    report.charges.push_back(charge);
    if (!is_integer(charge)) report.integral = false;
  }
  return report;
}

}  // namespace starform
