#pragma once

#include <boost/container/small_vector.hpp>

#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include "starform/rational.hpp"

namespace starform {

// Polynomial in the formal constant tau = 2*pi*i with GaussianRational
// coefficients.  Conjugation sends tau to -tau and i to -i.  The identity
// e^{tau z} = 1 (z integer) is never applied here; exponentiation sites own
// that rule.
class TauScalar {
 public:
  TauScalar() = default;
  TauScalar(GaussianRational c) { coeffs_.push_back(std::move(c)); trim(); }
  TauScalar(Rational r) : TauScalar(GaussianRational(std::move(r))) {}
  TauScalar(long r) : TauScalar(GaussianRational(r)) {}

  static TauScalar i() { return TauScalar(GaussianRational::i()); }
  // c * tau^d
  static TauScalar tau(int degree = 1, GaussianRational c = GaussianRational(1)) {
    TauScalar t;
    t.coeffs_.assign(degree + 1, GaussianRational{});
    t.coeffs_[degree] = std::move(c);
    t.trim();
    return t;
  }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  // Coefficient of tau^d (zero beyond stored degree).
  const GaussianRational& coeff(int d) const {
    static const GaussianRational kZero{};
    if (d < 0 || d > degree()) return kZero;
    return coeffs_[d];
  }

  TauScalar operator-() const {
    TauScalar r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }
  TauScalar operator+(const TauScalar& o) const {
    TauScalar r;
    r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()));
    for (size_t d = 0; d < r.coeffs_.size(); ++d) r.coeffs_[d] = coeff(d) + o.coeff(d);
    r.trim();
    return r;
  }
  TauScalar operator-(const TauScalar& o) const { return *this + (-o); }
  TauScalar& operator+=(const TauScalar& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t d = 0; d < o.coeffs_.size(); ++d) coeffs_[d] += o.coeffs_[d];
    trim();
    return *this;
  }
  TauScalar& operator-=(const TauScalar& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t d = 0; d < o.coeffs_.size(); ++d) coeffs_[d] -= o.coeffs_[d];
    trim();
    return *this;
  }
  TauScalar operator*(const TauScalar& o) const {
    if (is_zero() || o.is_zero()) return {};
    TauScalar r;
    r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, GaussianRational{});
    for (size_t a = 0; a < coeffs_.size(); ++a)
      for (size_t b = 0; b < o.coeffs_.size(); ++b) r.coeffs_[a + b] += coeffs_[a] * o.coeffs_[b];
    r.trim();
    return r;
  }
  TauScalar& operator*=(const TauScalar& o) { return *this = *this * o; }

  TauScalar conj() const {
    TauScalar r = *this;
    for (size_t d = 0; d < r.coeffs_.size(); ++d) {
      r.coeffs_[d] = r.coeffs_[d].conj();
      if (d % 2 == 1) r.coeffs_[d] = -r.coeffs_[d];
    }
    r.trim();
    return r;
  }

  bool is_unit() const { return degree() == 0 && !coeffs_[0].is_zero(); }

  TauScalar inverse() const {
    if (!is_unit()) throw std::domain_error("TauScalar: only tau-degree-0 units are invertible");
    return TauScalar(coeffs_[0].inverse());
  }

  bool operator==(const TauScalar& o) const = default;

  // Substitutes tau = 2*pi*i.
  std::complex<double> to_complex() const {
    std::complex<double> tau(0.0, 2.0 * std::numbers::pi);
    std::complex<double> acc(0.0, 0.0);
    for (int d = degree(); d >= 0; --d) acc = acc * tau + coeffs_[d].to_complex();
    return acc;
  }

  std::string str() const;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  boost::container::small_vector<GaussianRational, 2> coeffs_;  // index = tau-degree
};

inline TauScalar operator*(const Rational& a, const TauScalar& b) { return TauScalar(a) * b; }

std::string to_string(const TauScalar& t);

}  // namespace starform
