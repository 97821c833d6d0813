#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <complex>
#include <stdexcept>
#include <string>

namespace starform {

// Exact rational numbers on arbitrary-precision integers (GMP-backed); the
// canonical reduced form (gcd 1, positive denominator) is kept automatically.
using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline long to_long(const Rational& r) {
  if (!is_integer(r)) throw std::domain_error("to_long: not an integer");
  return numerator(r).convert_to<long>();
}

inline double to_double(const Rational& r) { return r.template convert_to<double>(); }

std::string to_string(const Rational& r);

// Element of Q(i).
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)) {}
  GaussianRational(long r) : re(r) {}
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return re == 0 && im == 0; }

  GaussianRational operator-() const { return {-re, -im}; }
  GaussianRational operator+(const GaussianRational& o) const { return {re + o.re, im + o.im}; }
  GaussianRational operator-(const GaussianRational& o) const { return {re - o.re, im - o.im}; }
  GaussianRational operator*(const GaussianRational& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }

  GaussianRational conj() const { return {re, -im}; }

  GaussianRational inverse() const {
    Rational n = re * re + im * im;
    if (n == 0) throw std::domain_error("GaussianRational: division by zero");
    return {re / n, -im / n};
  }

  bool operator==(const GaussianRational& o) const = default;

  std::complex<double> to_complex() const { return {to_double(re), to_double(im)}; }
};

std::string to_string(const GaussianRational& z);

}  // namespace starform
