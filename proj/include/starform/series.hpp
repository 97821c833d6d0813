#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace starform {

// Shared truncation data for one computation session.
struct TruncationContext {
  int order = 2;  // N >= 0
  int dim = 1;    // torus dimension n >= 1

  bool operator==(const TruncationContext&) const = default;
};

// Lambda-truncated power series over a coefficient ring R.  Index r holds the
// coefficient of lambda^r; orders beyond the truncation are never stored.
// Binary operations produce order = min of the operand orders.
template <class R>
class FormalSeries {
 public:
  FormalSeries() = default;
  FormalSeries(int order, R zero) : c_(order + 1, zero) {
    if (order < 0) throw std::invalid_argument("FormalSeries: negative order");
  }
  explicit FormalSeries(std::vector<R> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("FormalSeries: empty coefficient list");
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const R& operator[](int r) const { return c_.at(r); }
  R& operator[](int r) { return c_.at(r); }
  const std::vector<R>& coeffs() const { return c_; }

  FormalSeries truncate(int order) const {
    FormalSeries r = *this;
    if (order < r.order()) r.c_.resize(order + 1);
    return r;
  }

  FormalSeries operator-() const {
    FormalSeries r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  FormalSeries operator+(const FormalSeries& o) const {
    FormalSeries r = truncate(std::min(order(), o.order()));
    for (int t = 0; t <= r.order(); ++t) r.c_[t] = c_[t] + o.c_[t];
    return r;
  }
  FormalSeries operator-(const FormalSeries& o) const { return *this + (-o); }

  // Truncated Cauchy product with the plain ring multiplication.
  FormalSeries operator*(const FormalSeries& o) const {
    int n = std::min(order(), o.order());
    FormalSeries r = truncate(n);
    for (int t = 0; t <= n; ++t) {
      R acc = c_[0] * o.c_[t];
      for (int s = 1; s <= t; ++s) acc = acc + c_[s] * o.c_[t - s];
      r.c_[t] = acc;
    }
    return r;
  }

  template <class S>
  FormalSeries scaled(const S& s) const {
    FormalSeries r = *this;
    for (auto& x : r.c_) x = x * s;
    return r;
  }

  // Multiplication by lambda^k (drops overflowing coefficients).
  FormalSeries shifted(int k) const {
    FormalSeries r = *this;
    for (int t = r.order(); t >= 0; --t) r.c_[t] = (t >= k) ? c_[t - k] : zero_like(c_[0]);
    return r;
  }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const R& x) { return x.is_zero(); });
  }
  bool operator==(const FormalSeries& o) const { return c_ == o.c_; }

  int lowest_order() const {
    for (int t = 0; t <= order(); ++t)
      if (!c_[t].is_zero()) return t;
    return -1;  // identically zero
  }

 private:
  std::vector<R> c_;
};

// zero_like/one_like hooks let FormalSeries build neutral elements for rings
// whose zero needs shape data (symbols carry a dimension).
template <class R>
R zero_like(const R& x) {
  return x - x;
}

template <class R>
FormalSeries<R> series_constant(int order, R value) {
  FormalSeries<R> s(order, zero_like(value));
  s[0] = value;
  return s;
}

// Inverse for the plain Cauchy product; requires f_0 invertible in R via an
// ADL-found invert_element overload.
template <class R>
FormalSeries<R> series_invert(const FormalSeries<R>& f) {
  R g0 = invert_element(f[0]);
  FormalSeries<R> g(f.order(), zero_like(g0));
  g[0] = g0;
  for (int t = 1; t <= f.order(); ++t) {
    R acc = zero_like(g0);
    for (int s = 1; s <= t; ++s) acc = acc + f[s] * g[t - s];
    g[t] = -(g0 * acc);
  }
  return g;
}

}  // namespace starform
