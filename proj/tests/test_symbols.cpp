#include <doctest.h>

#include "starform/matrix_symbol.hpp"
#include "starform/random_symbols.hpp"

using namespace starform;

namespace {

Symbol e(int k0) { return Symbol::trig({k0}); }

}  // namespace

TEST_CASE("pointwise products merge frequencies") {
  CHECK(e(1) * e(-1) == Symbol::one(1));
  Symbol q = Symbol::q(0, 1), p = Symbol::p(0, 1);
  CHECK(q * p == p * q);
  Symbol one_plus = Symbol::one(1) + e(1);
  CHECK(one_plus * one_plus == Symbol::one(1) + e(1) * TauScalar(2) + e(2));
}

TEST_CASE("partial derivatives") {
  CHECK(e(1).dq(0) == e(1) * TauScalar::tau());
  Symbol p = Symbol::p(0, 1);
  CHECK((p * p).dp(0) == p * TauScalar(2));
  Symbol q = Symbol::q(0, 1);
  CHECK((q * e(1)).dq(0) == e(1) + q * e(1) * TauScalar::tau());  // product rule
  SUBCASE("leibniz on random symbols, both axes") {
    SymbolGen gen(11, 2);
    for (int t = 0; t < 40; ++t) {
      Symbol f = gen.chart_symbol(), g = gen.chart_symbol();
      for (int axis = 0; axis < 2; ++axis) {
        CHECK((f * g).dq(axis) == f.dq(axis) * g + f * g.dq(axis));
        CHECK((f * g).dp(axis) == f.dp(axis) * g + f * g.dp(axis));
      }
    }
  }
  SUBCASE("mixed partials commute") {
    SymbolGen gen(12, 2);
    for (int t = 0; t < 40; ++t) {
      Symbol f = gen.chart_symbol();
      CHECK(f.dq(0).dp(0) == f.dp(0).dq(0));
      CHECK(f.dq(1).dp(0) == f.dp(0).dq(1));
    }
  }
}

TEST_CASE("conjugation is an involutive antilinear homomorphism") {
  CHECK(e(1).conj() == e(-1));
  Symbol ip = Symbol::p(0, 1) * TauScalar::i();
  CHECK(ip.conj() == -ip);
  SymbolGen gen(13, 2);
  for (int t = 0; t < 40; ++t) {
    Symbol f = gen.chart_symbol(), g = gen.chart_symbol();
    CHECK(f.conj().conj() == f);
    CHECK((f * g).conj() == f.conj() * g.conj());
    CHECK((f + g).conj() == f.conj() + g.conj());
  }
}

TEST_CASE("offset substitution") {
  Symbol q = Symbol::q(0, 1);
  CHECK(q.substitute_offset({1}) == q + Symbol::one(1, Globality::chart));
  CHECK(e(1).substitute_offset({1}) == e(1));  // periodicity
  Symbol q2 = q * q;
  CHECK(q2.substitute_offset({-1}) ==
        q2 - q * TauScalar(2) + Symbol::one(1, Globality::chart));
  SUBCASE("composition with the inverse shift is the identity") {
    SymbolGen gen(14, 2);
    for (int t = 0; t < 30; ++t) {
      Symbol f = gen.chart_symbol();
      CHECK(f.substitute_offset({2, -1}).substitute_offset({-2, 1}) == f);
    }
  }
}

TEST_CASE("zero section and vertical lift") {
  Symbol p = Symbol::p(0, 1);
  CHECK(p.zero_section_restrict().is_zero());
  CHECK((e(1) + p * e(2)).zero_section_restrict() == e(1));
  CHECK(Symbol::one(1).zero_section_restrict() == Symbol::one(1));
}

TEST_CASE("torus integral extracts the constant Fourier mode") {
  CHECK(e(1).torus_integral() == TauScalar());
  CHECK(Symbol::one(1).torus_integral() == TauScalar(1));
  Symbol u = Symbol::one(1) * TauScalar(3) + e(1) * TauScalar(2) + e(-1) * TauScalar(2);
  CHECK(u.torus_integral() == TauScalar(3));
  CHECK_THROWS_AS(Symbol::q(0, 1).torus_integral(), std::domain_error);
  CHECK_THROWS_AS(Symbol::p(0, 1).torus_integral(), std::domain_error);
  SUBCASE("integral of conj(u) u is nonnegative") {
    SymbolGen gen(15, 2);
    for (int t = 0; t < 40; ++t) {
      Symbol u2 = gen.wave();
      double v = (u2.conj() * u2).torus_integral().to_complex().real();
      double im = (u2.conj() * u2).torus_integral().to_complex().imag();
      CHECK(v >= 0.0);
      CHECK(im == doctest::Approx(0.0));
    }
  }
}

TEST_CASE("globality bookkeeping") {
  CHECK_THROWS_AS(Symbol::one(1).add_term(
                      TermKey{MultiIndex{0}, MultiIndex{1}, MultiIndex{0}}, TauScalar(1)),
                  std::invalid_argument);
  Symbol chart = Symbol::q(0, 1) * e(1);
  CHECK(chart.globality() == Globality::chart);
  CHECK((chart * e(1)).globality() == Globality::chart);
  CHECK(e(1).globality() == Globality::global);
}

TEST_CASE("canonical rendering") {
  Symbol s = Symbol::q(0, 2) * Symbol::p(1, 2) * TauScalar::tau() + Symbol::trig({1, 0});
  CHECK(s.str() == "[(1+0i)tau] q0 p1 + [(1+0i)] e(1,0)");
  CHECK(Symbol::zero(1).str() == "0");
}

TEST_CASE("matrix symbols") {
  MatrixSymbol a = MatrixSymbol::identity(2, 1);
  a.at(0, 1) = Symbol::p(0, 1) * TauScalar::i();
  MatrixSymbol b = a * a;
  CHECK(b.at(0, 1) == Symbol::p(0, 1) * TauScalar::i() * TauScalar(2));
  MatrixSymbol adj = a.adjoint();
  CHECK(adj.at(1, 0) == -(Symbol::p(0, 1) * TauScalar::i()));
  CHECK(adj.adjoint() == a);
}
