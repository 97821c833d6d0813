#pragma once

#include <vector>

#include "starform/symbol.hpp"

namespace starform {

// Square matrix of symbols; models local endomorphism matrices of a rank-k
// deformed bundle.
class MatrixSymbol {
 public:
  MatrixSymbol() = default;
  MatrixSymbol(int size, int dim, Globality g = Globality::global)
      : size_(size), e_(size * size, Symbol::zero(dim, g)) {
    if (size < 1) throw std::invalid_argument("MatrixSymbol: size must be >= 1");
  }

  static MatrixSymbol identity(int size, int dim) {
    MatrixSymbol m(size, dim);
    for (int i = 0; i < size; ++i) m.at(i, i) = Symbol::one(dim);
    return m;
  }

  int size() const { return size_; }
  int dim() const { return e_.front().dim(); }
  Symbol& at(int i, int j) { return e_.at(i * size_ + j); }
  const Symbol& at(int i, int j) const { return e_.at(i * size_ + j); }

  MatrixSymbol operator-() const {
    MatrixSymbol r = *this;
    for (auto& s : r.e_) s = -s;
    return r;
  }
  MatrixSymbol& operator+=(const MatrixSymbol& o) {
    check(o);
    for (size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
    return *this;
  }
  MatrixSymbol operator+(const MatrixSymbol& o) const {
    MatrixSymbol r = *this;
    r += o;
    return r;
  }
  MatrixSymbol operator-(const MatrixSymbol& o) const { return *this + (-o); }
  MatrixSymbol operator*(const MatrixSymbol& o) const {
    check(o);
    MatrixSymbol r(size_, dim());
    for (int i = 0; i < size_; ++i)
      for (int j = 0; j < size_; ++j) {
        Symbol acc = Symbol::zero(dim());
        for (int k = 0; k < size_; ++k) acc += at(i, k) * o.at(k, j);
        r.at(i, j) = acc;
      }
    return r;
  }
  MatrixSymbol operator*(const TauScalar& s) const {
    MatrixSymbol r = *this;
    for (auto& x : r.e_) x = x * s;
    return r;
  }

  // Conjugate transpose: the *-involution of the matrix algebra.
  MatrixSymbol adjoint() const {
    MatrixSymbol r(size_, dim());
    for (int i = 0; i < size_; ++i)
      for (int j = 0; j < size_; ++j) r.at(i, j) = at(j, i).conj();
    return r;
  }

  MatrixSymbol dq(int axis) const { return map([&](const Symbol& s) { return s.dq(axis); }); }
  MatrixSymbol dp(int axis) const { return map([&](const Symbol& s) { return s.dp(axis); }); }

  template <class F>
  MatrixSymbol map(F&& f) const {
    MatrixSymbol r = *this;
    for (auto& s : r.e_) s = f(s);
    return r;
  }

  bool is_zero() const {
    for (const auto& s : e_)
      if (!s.is_zero()) return false;
    return true;
  }
  bool operator==(const MatrixSymbol& o) const { return size_ == o.size_ && e_ == o.e_; }

 private:
  void check(const MatrixSymbol& o) const {
    if (size_ != o.size_ || dim() != o.dim())
      throw std::invalid_argument("MatrixSymbol: shape mismatch");
  }

  int size_ = 1;
  std::vector<Symbol> e_{Symbol::zero(1)};
};

inline MatrixSymbol operator*(const TauScalar& s, const MatrixSymbol& m) { return m * s; }

inline MatrixSymbol invert_element(const MatrixSymbol& m) {
  // Only needed for series with identity leading matrix.
  if (!(m == MatrixSymbol::identity(m.size(), m.dim())))
    throw std::domain_error("MatrixSymbol: only the identity leading matrix is invertible here");
  return m;
}

using MatrixSeries = FormalSeries<MatrixSymbol>;

inline MatrixSeries series_adjoint(const MatrixSeries& f) {
  MatrixSeries out = f;
  for (int r = 0; r <= f.order(); ++r) out[r] = f[r].adjoint();
  return out;
}

}  // namespace starform
