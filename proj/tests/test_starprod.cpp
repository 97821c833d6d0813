#include <doctest.h>

#include "starform/bundle.hpp"
#include "starform/operator_series.hpp"
#include "starform/random_symbols.hpp"

using namespace starform;

namespace {

const TauScalar kI = TauScalar::i();
const TauScalar kTau = TauScalar::tau();

SymbolSeries lift(int order, Symbol s) { return symbol_series(order, std::move(s)); }

Symbol e1(int dim = 1) {
  MultiIndex k(dim, 0);
  k[0] = 1;
  return Symbol::trig(k);
}

}  // namespace

TEST_CASE("standard product basics") {
  TruncationContext ctx{2, 1};
  Symbol p = Symbol::p(0, 1);
  SUBCASE("unital") {
    SymbolGen gen(1, 1);
    SymbolSeries g = gen.series(2);
    CHECK(star_standard(ctx, lift(2, Symbol::one(1)), g) == g);
    CHECK(star_standard(ctx, g, lift(2, Symbol::one(1))) == g);
  }
  SUBCASE("vertical lifts multiply pointwise from the left") {
    SymbolGen gen(2, 1);
    Symbol u = gen.wave();
    SymbolSeries f = gen.series(2);
    SymbolSeries lhs = star_standard(ctx, lift(2, u), f);
    for (int r = 0; r <= 2; ++r) CHECK(lhs[r] == u * f[r]);
  }
  SUBCASE("p * e_1 acquires the first-order derivative term") {
    SymbolSeries r = star_standard(ctx, lift(2, p), lift(2, e1()));
    CHECK(r[0] == p * e1());
    CHECK(r[1] == -(e1() * kI * kTau));
    CHECK(r[2].is_zero());
  }
}

TEST_CASE("laplacian") {
  CHECK(laplacian(e1()).is_zero());  // no p-dependence
  Symbol qp = Symbol::q(0, 1) * Symbol::p(0, 1);
  CHECK(laplacian(qp) == Symbol::one(1, Globality::chart));
  CHECK(laplacian(Symbol::p(0, 1) * e1()) == e1() * kTau);
}

TEST_CASE("N_kappa") {
  StarProductSpec weyl = StarProductSpec::weyl(2, 1);
  SUBCASE("kills vertical lifts") {
    SymbolGen gen(3, 1);
    SymbolSeries u = gen.wave_series(2);
    CHECK(apply_N_kappa(weyl, u) == u);
  }
  SUBCASE("qp picks up the half term") {
    Symbol qp = Symbol::q(0, 1) * Symbol::p(0, 1);
    SymbolSeries r = apply_N_kappa(weyl, lift(2, qp));
    CHECK(r[0] == qp);
    CHECK(r[1] == Symbol::constant(-(kI * TauScalar(Rational(1, 2))), 1, Globality::chart));
    CHECK(r[2].is_zero());
  }
  SUBCASE("kappa = 0 is the identity") {
    SymbolGen gen(4, 1);
    SymbolSeries f = gen.series(2);
    CHECK(apply_N_kappa(StarProductSpec::standard(2, 1), f) == f);
  }
  SUBCASE("round trip") {
    SymbolGen gen(5, 2);
    StarProductSpec spec = StarProductSpec::kappa_ordered(3, 2, Rational(2, 5));
    SymbolSeries f = gen.series(3);
    CHECK(apply_N_kappa_inv(spec, apply_N_kappa(spec, f)) == f);
  }
}

TEST_CASE("kappa products") {
  SUBCASE("vertical lifts stay undeformed") {
    for (Rational k : {Rational(0), Rational(1, 3), Rational(1, 2), Rational(1)}) {
      StarProductSpec spec = StarProductSpec::kappa_ordered(3, 1, k);
      SymbolGen gen(6, 1);
      Symbol u = gen.wave(), v = gen.wave();
      SymbolSeries prod = star(spec, lift(3, u), lift(3, v));
      CHECK(prod == lift(3, u * v));
    }
  }
  SUBCASE("canonical commutator in the Weyl product") {
    StarProductSpec weyl = StarProductSpec::weyl(2, 1);
    SymbolSeries q = lift(2, Symbol::q(0, 1)), p = lift(2, Symbol::p(0, 1));
    SymbolSeries comm = star_commutator(weyl, q, p);
    CHECK(comm[0].is_zero());
    CHECK(comm[1] == Symbol::constant(kI, 1, Globality::chart));  // [q,p] = i lambda
    CHECK(comm[2].is_zero());
  }
  SUBCASE("semiclassical conditions") {
    SymbolGen gen(7, 2);
    for (Rational k : {Rational(0), Rational(1, 3), Rational(1, 2)}) {
      StarProductSpec spec = StarProductSpec::kappa_ordered(2, 2, k);
      for (int t = 0; t < 20; ++t) {
        SymbolSeries f = gen.series(2), g = gen.series(2);
        SymbolSeries fg = star(spec, f, g);
        CHECK(fg[0] == f[0] * g[0]);
        CHECK(fg[1] - star(spec, g, f)[1] == poisson(f[0], g[0]) * kI);
      }
    }
  }
}

TEST_CASE("associativity across products") {
  SymbolGen gen(8, 2);
  std::vector<StarProductSpec> specs = {
      StarProductSpec::standard(3, 2),
      StarProductSpec::weyl(3, 2),
      StarProductSpec::kappa_ordered(3, 2, Rational(1, 3)),
      StarProductSpec::kappa_ordered(3, 2, Rational(1)),
  };
  LineBundleData bundle(1, build_torus_cover(2));
  specs.push_back(bundle.magnetic_spec(0, 3, Rational(1, 2)));
  for (const auto& spec : specs) {
    for (int t = 0; t < 8; ++t) {
      SymbolSeries f = gen.series(3), g = gen.series(3), h = gen.series(3);
      CHECK(star(spec, star(spec, f, g), h) == star(spec, f, star(spec, g, h)));
    }
  }
}

TEST_CASE("hermitian property") {
  SymbolGen gen(9, 1);
  StarProductSpec weyl = StarProductSpec::weyl(3, 1);
  for (int t = 0; t < 20; ++t) {
    SymbolSeries f = gen.series(3), g = gen.series(3);
    CHECK(series_conj(star(weyl, f, g)) == star(weyl, series_conj(g), series_conj(f)));
  }
  // Standard order is not Hermitian: p *_S e_1 is the recorded witness.
  StarProductSpec std_spec = StarProductSpec::standard(2, 1);
  SymbolSeries f = lift(2, Symbol::p(0, 1)), g = lift(2, e1());
  CHECK(!(series_conj(star(std_spec, f, g)) ==
          star(std_spec, series_conj(g), series_conj(f))));
}

TEST_CASE("lemma 4.2 multiplication operators") {
  // pi^*u *_k f = F(e^{i k lambda D} u) f and f *_k pi^*u = F(e^{-i(1-k) lambda D} u) f.
  SymbolGen gen(10, 2);
  for (Rational k : {Rational(0), Rational(1, 3), Rational(1, 2)}) {
    StarProductSpec spec = StarProductSpec::kappa_ordered(3, 2, k);
    for (int t = 0; t < 10; ++t) {
      Symbol u = gen.wave();
      SymbolSeries f = gen.series(3);
      FiberOpSeries left = lift_mult_op(spec.ctx, u, GaussianRational(Rational(0), k));
      FiberOpSeries right = lift_mult_op(spec.ctx, u, GaussianRational(Rational(0), k - 1));
      CHECK(star(spec, lift(3, u), f) == apply_fiber_op(SymbolAlg{}, left, f));
      CHECK(star(spec, f, lift(3, u)) == apply_fiber_op(SymbolAlg{}, right, f));
    }
  }
}

TEST_CASE("symmetric tensor fields") {
  SUBCASE("derivative of a function is its differential") {
    Symbol u = Symbol::q(0, 2) * Symbol::q(0, 2);  // x^2
    SymTensorField du = SymTensorField::from_function(u).derivative();
    CHECK(du.component(MultiIndex{1, 0}) == Symbol::q(0, 2) * TauScalar(2));
    CHECK(du.component(MultiIndex{0, 1}).is_zero());
  }
  SUBCASE("constant one-form has vanishing derivative") {
    OneForm dq{{Symbol::one(2, Globality::chart), Symbol::zero(2, Globality::chart)}};
    CHECK(SymTensorField::from_one_form(dq.comp).derivative().is_zero());
  }
  SUBCASE("D(x dy) has slot component 1/2") {
    OneForm xdy{{Symbol::zero(2, Globality::chart), Symbol::q(0, 2)}};
    SymTensorField d = SymTensorField::from_one_form(xdy.comp).derivative();
    CHECK(d.component(MultiIndex{1, 1}) == Symbol::one(2, Globality::chart));
    CHECK(d.slot_component(MultiIndex{1, 1}) ==
          Symbol::one(2, Globality::chart) * TauScalar(Rational(1, 2)));
  }
  SUBCASE("fiber insertion") {
    Symbol u = Symbol::q(0, 1);
    SymTensorField du = SymTensorField::from_function(u).derivative();
    CHECK(fiber_insert(du, Symbol::p(0, 1)) == Symbol::one(1, Globality::chart));
    SymbolGen gen(16, 1);
    CHECK(fiber_insert(du, gen.wave()).is_zero());
    OneForm xdy{{Symbol::zero(2, Globality::chart), Symbol::q(0, 2)}};
    Symbol py2 = Symbol::p(1, 2) * Symbol::p(1, 2);
    CHECK(fiber_insert(SymTensorField::from_one_form(xdy.comp), py2) ==
          Symbol::q(0, 2) * Symbol::p(1, 2) * TauScalar(2));
  }
}

TEST_CASE("delta_kappa") {
  SUBCASE("exact one-forms reproduce the commutator") {
    SymbolGen gen(17, 2);
    for (Rational k : {Rational(0), Rational(1, 2), Rational(1, 3)}) {
      StarProductSpec spec = StarProductSpec::kappa_ordered(3, 2, k);
      for (int t = 0; t < 8; ++t) {
        Symbol u = gen.chart_symbol(2, 1, 0).zero_section_restrict();
        OneForm du{{u.dq(0), u.dq(1)}};
        SymbolSeries f = gen.series(3);
        SymbolSeries lhs = delta_kappa(spec, du, f);
        SymbolSeries rhs = star_commutator(spec, lift(3, u), f);
        CHECK(lhs == rhs);
      }
    }
  }
  SUBCASE("kills vertical lifts") {
    StarProductSpec spec = StarProductSpec::weyl(3, 2);
    LineBundleData bundle(1, build_torus_cover(2));
    SymbolGen gen(18, 2);
    CHECK(delta_kappa(spec, bundle.potential(0), lift(3, gen.wave())).is_zero());
  }
  SUBCASE("first order is i lambda a(q) on p") {
    StarProductSpec spec = StarProductSpec::weyl(2, 1);
    Symbol a = e1();
    OneForm adq{{a}};
    SymbolSeries r = delta_kappa(spec, adq, lift(2, Symbol::p(0, 1)));
    CHECK(r[0].is_zero());
    CHECK(r[1] == a * kI);
    CHECK(r[2].is_zero());
  }
}

TEST_CASE("fiber translation operator") {
  StarProductSpec spec = StarProductSpec::weyl(3, 2);
  LineBundleData bundle(1, build_torus_cover(2));
  OneForm a = bundle.potential(0);
  SUBCASE("fixes vertical lifts") {
    SymbolGen gen(19, 2);
    FiberOpSeries s = fiber_translation(spec, a, +1);
    SymbolSeries u = gen.wave_series(3);
    CHECK(apply_fiber_op(SymbolAlg{}, s, u) == u);
  }
  SUBCASE("zero potential gives the identity") {
    SymbolGen gen(20, 2);
    FiberOpSeries s = fiber_translation(spec, OneForm::zero(2), +1);
    SymbolSeries f = gen.series(3);
    CHECK(apply_fiber_op(SymbolAlg{}, s, f) == f);
  }
  SUBCASE("first-order shift of p") {
    // A = a(q) dq on T^1, S(p) = p + i (i lambda a) + O(lambda^2) = p - lambda a.
    StarProductSpec s1 = StarProductSpec::weyl(2, 1);
    Symbol a1 = e1();
    FiberOpSeries s = fiber_translation(s1, OneForm{{a1}}, +1);
    SymbolSeries r = apply_fiber_op(SymbolAlg{}, s, lift(2, Symbol::p(0, 1)));
    CHECK(r[0] == Symbol::p(0, 1));
    CHECK(r[1] == -a1);
    SymbolGen gen(21, 1);
    FiberOpSeries sinv = fiber_translation(s1, OneForm{{a1}}, -1);
    SymbolSeries f = gen.series(2, true);
    CHECK(apply_fiber_op(SymbolAlg{}, sinv, apply_fiber_op(SymbolAlg{}, s, f)) == f);
  }
}

TEST_CASE("magnetic star product") {
  LineBundleData bundle(2, build_torus_cover(2));
  StarProductSpec spec = bundle.magnetic_spec(0, 3, Rational(1, 2));
  SymbolGen gen(22, 2);
  SUBCASE("unital and B=0 degeneration") {
    SymbolSeries f = gen.series(3);
    CHECK(star(spec, lift(3, Symbol::one(2)), f) == f);
    LineBundleData trivial(0, build_torus_cover(2));
    StarProductSpec spec0 = trivial.magnetic_spec(0, 3, Rational(1, 2));
    SymbolSeries g = gen.series(3);
    CHECK(star(spec0, f, g) == star(spec0.without_magnetic(), f, g));
  }
  SUBCASE("momentum commutator sees the field") {
    // Oracle: direct S-conjugation expansion gives [p_x, p_y]' = lambda^2 tau m.
    SymbolSeries px = lift(3, Symbol::p(0, 2)), py = lift(3, Symbol::p(1, 2));
    SymbolSeries comm = star_commutator(spec, px, py);
    CHECK(comm[0].is_zero());
    CHECK(comm[1].is_zero());
    CHECK(comm[2] == Symbol::constant(kTau * TauScalar(2), 2, Globality::chart));
    SymbolSeries qx = lift(3, Symbol::q(0, 2));
    SymbolSeries c2 = star_commutator(spec, qx, py);
    CHECK(c2[1].is_zero());  // [x, p_y] has no first-order term
    SymbolSeries c3 = star_commutator(spec, qx, px);
    CHECK(c3[1] == Symbol::constant(kI, 2, Globality::chart));  // [q,p] untouched
  }
  SUBCASE("patch independence after offset transport") {
    // Beta-route computed in beta-chart coordinates and transported back;
    // patches 0 and 2 wrap in x, so the potentials genuinely differ.
    int a = 0, b = 2;
    StarProductSpec spec_b = bundle.magnetic_spec(b, 3, Rational(1, 2));
    for (int t = 0; t < 6; ++t) {
      SymbolSeries f = gen.series(3, true), g = gen.series(3, true);
      SymbolSeries fb = bundle.to_chart(b, a, f), gb = bundle.to_chart(b, a, g);
      SymbolSeries via_b = bundle.to_chart(a, b, star(spec_b, fb, gb));
      CHECK(star(spec, f, g) == via_b);
    }
  }
  SUBCASE("conjugation by the transition function equals the S-ratio") {
    // phi *_k f *_k phi^{-1} = e^{i delta[A_a]} e^{-i delta[A_b]} f with A_b
    // expressed in the a-chart.
    int a = 0, b = 2;
    StarProductSpec base = StarProductSpec::weyl(3, 2);
    Symbol phi = bundle.transition_function(a, b);
    OneForm pa = bundle.potential(a);
    OneForm pb = bundle.potential(b);
    OneForm pb_in_a{{bundle.to_chart(a, b, pb.comp[0]), bundle.to_chart(a, b, pb.comp[1])}};
    FiberOpSeries sa = fiber_translation(base, pa, +1);
    FiberOpSeries sb_inv = fiber_translation(base, pb_in_a, -1);
    for (int t = 0; t < 6; ++t) {
      SymbolSeries f = gen.series(3, true);
      SymbolSeries lhs =
          star(base, star(base, lift(3, phi), f), lift(3, bundle.transition_function(b, a)));
      SymbolSeries rhs = apply_fiber_op(SymbolAlg{}, sa, apply_fiber_op(SymbolAlg{}, sb_inv, f));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("star inverse") {
  StarProductSpec weyl = StarProductSpec::weyl(3, 1);
  SymbolGen gen(26, 1);
  for (int t = 0; t < 10; ++t) {
    SymbolSeries f(3, Symbol::zero(1));
    f[0] = e1();
    for (int r = 1; r <= 3; ++r) f[r] = gen.global_symbol();
    SymbolSeries g = star_invert(weyl, f);
    CHECK(star(weyl, f, g) == lift(3, Symbol::one(1)));
  }
}

TEST_CASE("operator series exp and log") {
  SUBCASE("exp of zero and log of identity") {
    OperatorSeries zero(3, 1);
    OperatorSeries id = OperatorSeries::identity(3, 1);
    SymbolGen gen(23, 1);
    SymbolSeries f = gen.series(3);
    CHECK(op_exp(zero).apply(f) == f);
    for (const auto& probe : OperatorSeries::probe_basis(1))
      CHECK(op_log(id).grade(2)(probe).is_zero());
  }
  SUBCASE("log inverts exp on a graded laplacian") {
    OperatorSeries d(3, 1);
    d.set_grade(1, [](const Symbol& s) { return laplacian(s); });
    OperatorSeries l = op_log(op_exp(d));
    for (const auto& probe : OperatorSeries::probe_basis(1)) {
      CHECK(l.grade(1)(probe) == laplacian(probe));
      CHECK(l.grade(2)(probe).is_zero());
      CHECK(l.grade(3)(probe).is_zero());
    }
  }
  SUBCASE("preconditions are probed") {
    OperatorSeries id = OperatorSeries::identity(3, 1);
    CHECK_THROWS_AS(op_exp(id), std::domain_error);
    OperatorSeries zero(3, 1);
    CHECK_THROWS_AS(op_log(zero), std::domain_error);
  }
}

TEST_CASE("derivations, automorphisms and ad") {
  StarProductSpec weyl = StarProductSpec::weyl(3, 1);
  SymbolGen gen(25, 1);
  SUBCASE("exp(ad H) matches the nested-commutator sum") {
    SymbolSeries h = gen.series(3);
    OperatorSeries ad = ad_op(weyl, h);
    SymbolSeries f = gen.series(3);
    SymbolSeries lhs = op_exp(ad).apply(f);
    SymbolSeries acc = f, cur = f;
    Rational fact = 1;
    for (int k = 1; k <= 3; ++k) {
      cur = star_commutator(weyl, h, cur);
      fact *= k;
      acc = acc + cur.scaled(TauScalar(Rational(1) / fact));
    }
    CHECK(lhs == acc);
  }
  SUBCASE("exp of a star derivation is an automorphism, and log returns one") {
    SymbolSeries h = gen.series(3);
    OperatorSeries t = op_exp(ad_op(weyl, h));
    for (int k = 0; k < 5; ++k) {
      SymbolSeries f = gen.series(3), g = gen.series(3);
      CHECK(t.apply(star(weyl, f, g)) == star(weyl, t.apply(f), t.apply(g)));
      OperatorSeries d = op_log(t);
      SymbolSeries residual = d.apply(star(weyl, f, g)) - star(weyl, d.apply(f), g) -
                              star(weyl, f, d.apply(g));
      CHECK(residual.is_zero());
    }
  }
  SUBCASE("vector-field derivations of the pointwise product") {
    // D = lambda q d/dp exponentiates to an automorphism of the commutative
    // algebra; feeding the log back reproduces a derivation.
    OperatorSeries d(3, 1);
    d.set_grade(1, [](const Symbol& s) { return Symbol::q(0, 1) * s.dp(0); });
    OperatorSeries t = op_exp(d);
    auto pointwise = [](const SymbolSeries& f, const SymbolSeries& g) {
      SymbolSeries out(std::min(f.order(), g.order()), Symbol::zero(f[0].dim(), Globality::chart));
      for (int r = 0; r <= out.order(); ++r)
        for (int s = 0; r + s <= out.order(); ++s) out[r + s] += f[r] * g[s];
      return out;
    };
    for (int k = 0; k < 5; ++k) {
      SymbolSeries f = gen.series(3, true), g = gen.series(3, true);
      CHECK(t.apply(pointwise(f, g)) == pointwise(t.apply(f), t.apply(g)));
      OperatorSeries l = op_log(t);
      SymbolSeries residual =
          l.apply(pointwise(f, g)) - pointwise(l.apply(f), g) - pointwise(f, l.apply(g));
      CHECK(residual.is_zero());
    }
  }
}

TEST_CASE("sign-flip fixture breaks the bracket convention") {
  StarProductSpec bugged = StarProductSpec::weyl(2, 1);
  bugged.debug_flip_c1_sign = true;
  SymbolSeries q = lift(2, Symbol::q(0, 1)), p = lift(2, Symbol::p(0, 1));
  SymbolSeries comm = star_commutator(bugged, q, p);
  CHECK(!(comm[1] == Symbol::constant(kI, 1, Globality::chart)));
}
