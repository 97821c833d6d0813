#include <doctest.h>

#include <numbers>
#include <random>

#include "starform/symbol.hpp"

using namespace starform;

namespace {

TauScalar random_tau(std::mt19937_64& rng) {
  auto r = [&]() { return Rational(static_cast<int>(rng() % 7) - 3, 1 + static_cast<int>(rng() % 3)); };
  TauScalar t;
  int deg = static_cast<int>(rng() % 3);
  for (int d = 0; d <= deg; ++d) t += TauScalar::tau(d, GaussianRational(r(), r()));
  return t;
}

}  // namespace

TEST_CASE("gaussian rational arithmetic and conjugation") {
  GaussianRational i = GaussianRational::i();
  CHECK(i * i == GaussianRational(-1));
  CHECK(i.conj() == -i);
  GaussianRational z(Rational(2, 3), Rational(-1, 2));
  CHECK(z * z.inverse() == GaussianRational(1));
  CHECK(z.conj().conj() == z);
}

TEST_CASE("tau scalar basics") {
  TauScalar tau = TauScalar::tau();
  CHECK(tau.conj() == -tau);                       // 2 pi i is purely imaginary
  CHECK(tau * tau == TauScalar::tau(2));           // formal multiplication
  TauScalar it = TauScalar::i() * tau;
  CHECK(it.conj() == it);                          // double sign flip
  CHECK(TauScalar(Rational(2)).inverse() == TauScalar(Rational(1, 2)));
  CHECK_THROWS_AS(tau.inverse(), std::domain_error);
}

TEST_CASE("tau scalar ring axioms on random triples") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    TauScalar a = random_tau(rng), b = random_tau(rng), c = random_tau(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a.conj().conj() == a);
    CHECK((a * b).conj() == a.conj() * b.conj());
  }
}

TEST_CASE("numeric evaluation of tau") {
  CHECK(TauScalar::tau().to_complex().imag() == doctest::Approx(2 * std::numbers::pi));
  CHECK(TauScalar(Rational(1)).to_complex().real() == doctest::Approx(1.0));
  // Oracle: square of 2 pi computed independently.
  double two_pi_sq = -(2 * std::numbers::pi) * (2 * std::numbers::pi);
  CHECK(TauScalar::tau(2).to_complex().real() == doctest::Approx(two_pi_sq));
  CHECK(TauScalar::tau(2).to_complex().real() == doctest::Approx(-39.478417604357432));
}

TEST_CASE("formal series arithmetic") {
  using S = FormalSeries<TauScalar>;
  S one = series_constant(2, TauScalar(1));
  S lam(2, TauScalar());
  lam[1] = TauScalar(1);
  CHECK((one + lam) * (one - lam) == one - lam * lam);
  SUBCASE("identity") {
    S f(2, TauScalar());
    f[0] = TauScalar(Rational(1, 3));
    f[2] = TauScalar::tau();
    CHECK(one * f == f);
  }
  SUBCASE("truncation drops the overflow") {
    S l1 = lam.truncate(1);
    CHECK((l1 * l1).is_zero());
    CHECK((l1 * l1).order() == 1);
  }
  SUBCASE("order follows the shorter operand") {
    CHECK((one.truncate(1) + lam).order() == 1);
  }
}

TEST_CASE("series inversion") {
  using S = FormalSeries<TauScalar>;
  S one = series_constant(2, TauScalar(1));
  S f = one;
  f[1] = TauScalar(1);
  S g = series_invert(f);
  CHECK(g[0] == TauScalar(1));
  CHECK(g[1] == TauScalar(-1));
  CHECK(g[2] == TauScalar(1));  // geometric series
  CHECK(series_invert(one) == one);
  CHECK(series_invert(series_constant(2, TauScalar(2)))[0] == TauScalar(Rational(1, 2)));

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    S u(3, TauScalar());
    u[0] = TauScalar(Rational(1 + static_cast<int>(rng() % 3)));
    for (int r = 1; r <= 3; ++r) u[r] = random_tau(rng);
    CHECK(series_invert(u) * u == series_constant(3, TauScalar(1)));
  }
  S bad = series_constant(1, TauScalar::tau());
  CHECK_THROWS_AS(series_invert(bad), std::domain_error);
}
