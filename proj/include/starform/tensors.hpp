#pragma once

#include <map>
#include <vector>

#include "starform/combinatorics.hpp"
#include "starform/symbol.hpp"

namespace starform {

// Symmetric covariant tensor field on a chart, stored in the monomial
// convention: T corresponds to the polynomial T(q, xi) = sum_mu T_mu(q) xi^mu
// with |mu| = degree.  Slot components carry the extra mu!/|mu|! factor.
class SymTensorField {
 public:
  SymTensorField(int degree, int dim) : degree_(degree), dim_(dim) {}

  static SymTensorField from_function(const Symbol& u) {
    SymTensorField t(0, u.dim());
    t.set(MultiIndex(u.dim(), 0), u);
    return t;
  }
  static SymTensorField from_one_form(const std::vector<Symbol>& components) {
    SymTensorField t(1, static_cast<int>(components.size()));
    for (int i = 0; i < t.dim_; ++i) {
      MultiIndex mu(t.dim_, 0);
      mu[i] = 1;
      t.set(mu, components[i]);
    }
    return t;
  }

  int degree() const { return degree_; }
  int dim() const { return dim_; }
  const std::map<MultiIndex, Symbol>& components() const { return comp_; }

  void set(MultiIndex mu, Symbol value) {
    if (mi_weight(mu) != degree_) throw std::invalid_argument("SymTensorField: weight mismatch");
    if (value.is_zero())
      comp_.erase(mu);
    else
      comp_.insert_or_assign(std::move(mu), std::move(value));
  }

  Symbol component(const MultiIndex& mu) const {
    auto it = comp_.find(mu);
    return it == comp_.end() ? Symbol::zero(dim_, Globality::chart) : it->second;
  }

  // Tensor-slot component: divides out the monomial multiplicity.
  Symbol slot_component(const MultiIndex& slots_as_multi_index) const {
    Rational w = multi_factorial(slots_as_multi_index) / factorial(degree_);
    return component(slots_as_multi_index) * TauScalar(w);
  }

  // Symmetrized derivative D: (DT)(q, xi) = sum_i xi_i d/dq_i T(q, xi).
  SymTensorField derivative() const {
    SymTensorField out(degree_ + 1, dim_);
    for (const auto& [mu, val] : comp_)
      for (int i = 0; i < dim_; ++i) {
        Symbol d = val.dq(i);
        if (d.is_zero()) continue;
        MultiIndex nu = mu;
        nu[i] += 1;
        out.set(nu, out.component(nu) + d);
      }
    return out;
  }

  bool is_zero() const { return comp_.empty(); }

 private:
  int degree_;
  int dim_;
  std::map<MultiIndex, Symbol> comp_;
};

// F(T) f = sum_mu T_mu(q) d^{|mu|} f / dp^mu, extended multiplicatively: the
// composition of two such operators stays in the class.
inline Symbol fiber_insert(const SymTensorField& t, const Symbol& f) {
  Symbol out = Symbol::zero(f.dim(), f.globality());
  for (const auto& [mu, val] : t.components()) {
    Symbol d = f;
    for (int i = 0; i < t.dim(); ++i)
      for (int k = 0; k < mu[i]; ++k) d = d.dp(i);
    out += val * d;
  }
  return out;
}

// Lambda-graded series of fiber-insertion operators.  Grade r is a finite sum
// of coeff(q) * d^mu/dp^mu generators; these commute, so exponentials live in
// the same class.
class FiberOpSeries {
 public:
  struct Term {
    MultiIndex mu;
    Symbol coeff;
  };

  FiberOpSeries(int order, int dim) : dim_(dim), grades_(order + 1) {}

  static FiberOpSeries identity(int order, int dim) {
    FiberOpSeries s(order, dim);
    s.grades_[0].push_back({MultiIndex(dim, 0), Symbol::one(dim)});
    return s;
  }

  int order() const { return static_cast<int>(grades_.size()) - 1; }
  int dim() const { return dim_; }
  const std::vector<Term>& grade(int r) const { return grades_.at(r); }

  void add(int grade, MultiIndex mu, Symbol coeff) {
    if (coeff.is_zero()) return;
    grades_.at(grade).push_back({std::move(mu), std::move(coeff)});
  }
  void add_tensor(int grade, const SymTensorField& t, const TauScalar& scale) {
    for (const auto& [mu, val] : t.components()) add(grade, mu, val * scale);
  }

  bool grade0_is_zero() const { return grades_[0].empty(); }

  FiberOpSeries scaled(const TauScalar& s) const {
    FiberOpSeries r = *this;
    for (auto& g : r.grades_)
      for (auto& t : g) t.coeff = t.coeff * s;
    return r;
  }

  FiberOpSeries operator+(const FiberOpSeries& o) const {
    FiberOpSeries r(std::min(order(), o.order()), dim_);
    for (int g = 0; g <= r.order(); ++g) {
      r.grades_[g] = grades_[g];
      r.grades_[g].insert(r.grades_[g].end(), o.grades_[g].begin(), o.grades_[g].end());
    }
    return r;
  }

  // Composition; commutative since all generators commute.
  FiberOpSeries operator*(const FiberOpSeries& o) const {
    FiberOpSeries r(std::min(order(), o.order()), dim_);
    for (int a = 0; a <= r.order(); ++a)
      for (int b = 0; a + b <= r.order(); ++b)
        for (const auto& s : grades_[a])
          for (const auto& t : o.grades_[b]) {
            MultiIndex mu(dim_);
            for (int i = 0; i < dim_; ++i) mu[i] = s.mu[i] + t.mu[i];
            r.add(a + b, std::move(mu), s.coeff * t.coeff);
          }
    return r;
  }

  // exp of a series with vanishing grade 0.
  FiberOpSeries exp() const {
    if (!grade0_is_zero())
      throw std::domain_error("FiberOpSeries::exp: grade-0 part must vanish");
    FiberOpSeries acc = identity(order(), dim_);
    FiberOpSeries pow = identity(order(), dim_);
    for (int k = 1; k <= order(); ++k) {
      pow = pow * (*this);
      acc = acc + pow.scaled(TauScalar(Rational(1) / factorial(k)));
    }
    return acc;
  }

 private:
  int dim_;
  std::vector<std::vector<Term>> grades_;
};

}  // namespace starform
