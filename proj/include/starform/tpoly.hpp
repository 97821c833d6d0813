#pragma once

#include <vector>

#include "starform/symbol.hpp"

namespace starform {

// Polynomial in a formal evolution parameter t with Symbol coefficients.
// Used by the star-exponential recursion, where Exp(tH) is represented as
// e^{tH_0} times one of these.
class TPoly {
 public:
  explicit TPoly(Symbol constant) : c_{std::move(constant)} {}
  TPoly(int dim, Globality g) : c_{Symbol::zero(dim, g)} {}

  int dim() const { return c_.front().dim(); }
  int tdeg() const { return static_cast<int>(c_.size()) - 1; }
  const Symbol& coeff(int j) const {
    if (j < 0 || j > tdeg()) throw std::out_of_range("TPoly::coeff");
    return c_[j];
  }
  Symbol coeff_or_zero(int j) const {
    return (j >= 0 && j <= tdeg()) ? c_[j] : Symbol::zero(dim(), Globality::chart);
  }
  void set(int j, Symbol s) {
    if (j > tdeg()) c_.resize(j + 1, Symbol::zero(dim(), Globality::chart));
    c_[j] = std::move(s);
    trim();
  }

  TPoly operator-() const {
    TPoly r = *this;
    for (auto& s : r.c_) s = -s;
    return r;
  }
  TPoly& operator+=(const TPoly& o) {
    if (tdeg() < o.tdeg()) c_.resize(o.tdeg() + 1, Symbol::zero(dim(), Globality::chart));
    for (int j = 0; j <= o.tdeg(); ++j) c_[j] += o.c_[j];
    trim();
    return *this;
  }
  TPoly operator+(const TPoly& o) const {
    TPoly r = *this;
    r += o;
    return r;
  }
  TPoly operator-(const TPoly& o) const { return *this + (-o); }
  TPoly operator*(const TPoly& o) const {
    TPoly r(dim(), Globality::chart);
    for (int a = 0; a <= tdeg(); ++a)
      for (int b = 0; b <= o.tdeg(); ++b) r.set(a + b, r.coeff_or_zero(a + b) + c_[a] * o.c_[b]);
    return r;
  }
  TPoly operator*(const TauScalar& s) const {
    TPoly r = *this;
    for (auto& x : r.c_) x = x * s;
    r.trim();
    return r;
  }

  bool is_zero() const {
    for (const auto& s : c_)
      if (!s.is_zero()) return false;
    return true;
  }
  bool operator==(const TPoly& o) const = default;

  // Definite integral from 0 to t.
  TPoly integrated() const {
    TPoly r(dim(), Globality::chart);
    for (int j = 0; j <= tdeg(); ++j)
      r.set(j + 1, c_[j] * TauScalar(Rational(1, j + 1)));
    return r;
  }

  Symbol eval(const Rational& t) const {
    Symbol acc = Symbol::zero(dim(), Globality::chart);
    Rational tp = 1;
    for (int j = 0; j <= tdeg(); ++j) {
      acc += c_[j] * TauScalar(tp);
      tp *= t;
    }
    return acc;
  }

 private:
  void trim() {
    while (c_.size() > 1 && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<Symbol> c_;  // index = power of t
};

inline TPoly operator*(const TauScalar& s, const TPoly& p) { return p * s; }

}  // namespace starform
