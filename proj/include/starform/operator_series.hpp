#pragma once

#include <functional>

#include "starform/star.hpp"

namespace starform {

// Lambda-graded series of linear maps on symbols, stored lazily as callables.
// Grade-0 structure (zero / identity) cannot be inspected on a function, so
// the exp/log preconditions are validated by probing a small symbol basis.
class OperatorSeries {
 public:
  using LinOp = std::function<Symbol(const Symbol&)>;

  OperatorSeries(int order, int dim) : dim_(dim) {
    grades_.assign(order + 1, [dim](const Symbol& s) { return Symbol::zero(s.dim(), s.globality()); });
  }

  static OperatorSeries identity(int order, int dim) {
    OperatorSeries t(order, dim);
    t.grades_[0] = [](const Symbol& s) { return s; };
    return t;
  }

  int order() const { return static_cast<int>(grades_.size()) - 1; }
  int dim() const { return dim_; }
  const LinOp& grade(int r) const { return grades_.at(r); }
  void set_grade(int r, LinOp op) { grades_.at(r) = std::move(op); }

  SymbolSeries apply(const SymbolSeries& f) const {
    SymbolSeries out(std::min(order(), f.order()), Symbol::zero(f[0].dim(), f[0].globality()));
    for (int r = 0; r <= out.order(); ++r)
      for (int j = 0; j <= r; ++j) out[r] += grades_[j](f[r - j]);
    return out;
  }

  OperatorSeries compose(const OperatorSeries& o) const {
    OperatorSeries out(std::min(order(), o.order()), dim_);
    for (int r = 0; r <= out.order(); ++r) {
      std::vector<std::pair<LinOp, LinOp>> parts;
      for (int a = 0; a <= r; ++a) parts.emplace_back(grades_[a], o.grades_[r - a]);
      out.grades_[r] = [parts](const Symbol& s) {
        Symbol acc = Symbol::zero(s.dim(), s.globality());
        for (const auto& [f, g] : parts) acc += f(g(s));
        return acc;
      };
    }
    return out;
  }

  OperatorSeries operator+(const OperatorSeries& o) const {
    OperatorSeries out(std::min(order(), o.order()), dim_);
    for (int r = 0; r <= out.order(); ++r) {
      LinOp a = grades_[r], b = o.grades_[r];
      out.grades_[r] = [a, b](const Symbol& s) { return a(s) + b(s); };
    }
    return out;
  }
  OperatorSeries operator-() const {
    OperatorSeries out(order(), dim_);
    for (int r = 0; r <= order(); ++r) {
      LinOp a = grades_[r];
      out.grades_[r] = [a](const Symbol& s) { return -a(s); };
    }
    return out;
  }
  OperatorSeries operator-(const OperatorSeries& o) const { return *this + (-o); }

  OperatorSeries scaled(const TauScalar& c) const {
    OperatorSeries out(order(), dim_);
    for (int r = 0; r <= order(); ++r) {
      LinOp a = grades_[r];
      out.grades_[r] = [a, c](const Symbol& s) { return a(s) * c; };
    }
    return out;
  }

  // Probe basis used to validate grade-0 preconditions.
  static std::vector<Symbol> probe_basis(int dim);

 private:
  int dim_;
  std::vector<LinOp> grades_;
};

// exp(D) for an operator series with vanishing grade-0 part.
OperatorSeries op_exp(const OperatorSeries& d);

// log(T) for an operator series with identity grade-0 part; inverse of op_exp
// to the truncation order.
OperatorSeries op_log(const OperatorSeries& t);

// ad(H) = [H, .]_star as an operator series; its grade-0 part vanishes because
// the star commutator raises the lambda-order.
OperatorSeries ad_op(const StarProductSpec& spec, const SymbolSeries& h);

// N_kappa^{sign} as an operator series.
OperatorSeries n_kappa_op(const StarProductSpec& spec, int sign = +1);

// Wraps a fiber operator series (e.g. the quantized fiber translation S_alpha).
OperatorSeries to_operator_series(const FiberOpSeries& op);

// S_alpha^{(kappa), sign} as an operator series.
inline OperatorSeries fiber_translation_op(const StarProductSpec& spec, const OneForm& a,
                                           int sign = +1) {
  return to_operator_series(fiber_translation(spec, a, sign));
}

}  // namespace starform
