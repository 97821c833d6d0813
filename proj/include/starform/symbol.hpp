#pragma once

#include <boost/container/small_vector.hpp>

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "starform/series.hpp"
#include "starform/tau.hpp"

namespace starform {

using MultiIndex = boost::container::small_vector<int, 4>;

inline int mi_weight(const MultiIndex& m) {
  int w = 0;
  for (int x : m) w += x;
  return w;
}

// One basis monomial q^beta p^alpha e^{tau k.q} on a chart of T*T^n.
struct TermKey {
  MultiIndex freq;  // k
  MultiIndex qpow;  // beta
  MultiIndex ppow;  // alpha

  bool operator==(const TermKey& o) const {
    return freq == o.freq && qpow == o.qpow && ppow == o.ppow;
  }
  bool operator<(const TermKey& o) const {
    if (freq != o.freq)
      return std::lexicographical_compare(freq.begin(), freq.end(), o.freq.begin(), o.freq.end());
    if (qpow != o.qpow)
      return std::lexicographical_compare(qpow.begin(), qpow.end(), o.qpow.begin(), o.qpow.end());
    return std::lexicographical_compare(ppow.begin(), ppow.end(), o.ppow.begin(), o.ppow.end());
  }
};

enum class Globality { global, chart };

// Exact symbol: finite TauScalar-combination of TermKey monomials.  Global
// symbols live on T*T^n itself and must not contain q-polynomials; chart
// symbols may.  The flag is metadata and does not enter equality.
class Symbol {
 public:
  Symbol() = default;
  Symbol(int dim, Globality g) : dim_(dim), glob_(g) {
    if (dim < 1) throw std::invalid_argument("Symbol: dimension must be >= 1");
  }

  static Symbol zero(int dim, Globality g = Globality::global) { return Symbol(dim, g); }
  static Symbol constant(TauScalar c, int dim, Globality g = Globality::global) {
    Symbol s(dim, g);
    s.add_term(TermKey{MultiIndex(dim, 0), MultiIndex(dim, 0), MultiIndex(dim, 0)}, std::move(c));
    return s;
  }
  static Symbol one(int dim, Globality g = Globality::global) {
    return constant(TauScalar(1), dim, g);
  }
  static Symbol q(int axis, int dim) {
    Symbol s(dim, Globality::chart);
    MultiIndex beta(dim, 0);
    beta.at(axis) = 1;
    s.add_term(TermKey{MultiIndex(dim, 0), beta, MultiIndex(dim, 0)}, TauScalar(1));
    return s;
  }
  static Symbol p(int axis, int dim) {
    Symbol s(dim, Globality::global);
    MultiIndex alpha(dim, 0);
    alpha.at(axis) = 1;
    s.add_term(TermKey{MultiIndex(dim, 0), MultiIndex(dim, 0), alpha}, TauScalar(1));
    return s;
  }
  // e^{tau k.q}
  static Symbol trig(MultiIndex k) {
    int dim = static_cast<int>(k.size());
    Symbol s(dim, Globality::global);
    s.add_term(TermKey{std::move(k), MultiIndex(dim, 0), MultiIndex(dim, 0)}, TauScalar(1));
    return s;
  }
  static Symbol monomial(TermKey key, TauScalar c, Globality g = Globality::chart) {
    Symbol s(static_cast<int>(key.freq.size()), g);
    s.add_term(std::move(key), std::move(c));
    return s;
  }

  int dim() const { return dim_; }
  Globality globality() const { return glob_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<TermKey, TauScalar>& terms() const { return terms_; }

  TauScalar coeff(const TermKey& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? TauScalar() : it->second;
  }

  void add_term(TermKey key, TauScalar c) {
    if (static_cast<int>(key.freq.size()) != dim_ || static_cast<int>(key.qpow.size()) != dim_ ||
        static_cast<int>(key.ppow.size()) != dim_)
      throw std::invalid_argument("Symbol: term dimension mismatch");
    if (glob_ == Globality::global && mi_weight(key.qpow) != 0)
      throw std::invalid_argument("Symbol: q-polynomials are not defined globally");
    if (c.is_zero()) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(std::move(key), std::move(c));
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Symbol operator-() const {
    Symbol r = *this;
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
  }
  Symbol& operator+=(const Symbol& o) {
    check_dim(o);
    glob_ = combine(glob_, o.glob_);
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  Symbol& operator-=(const Symbol& o) {
    check_dim(o);
    glob_ = combine(glob_, o.glob_);
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  Symbol operator+(const Symbol& o) const {
    Symbol r = *this;
    r += o;
    return r;
  }
  Symbol operator-(const Symbol& o) const {
    Symbol r = *this;
    r -= o;
    return r;
  }
  Symbol operator*(const Symbol& o) const {
    check_dim(o);
    Symbol r(dim_, combine(glob_, o.glob_));
    for (const auto& [ka, ca] : terms_)
      for (const auto& [kb, cb] : o.terms_) {
        TermKey k{mi_add(ka.freq, kb.freq), mi_add(ka.qpow, kb.qpow), mi_add(ka.ppow, kb.ppow)};
        r.add_term(std::move(k), ca * cb);
      }
    return r;
  }
  Symbol operator*(const TauScalar& s) const {
    Symbol r(dim_, glob_);
    for (const auto& [k, c] : terms_) r.add_term(k, c * s);
    return r;
  }
  // k -> -k and coefficient conjugation; q, p are real coordinates.
  Symbol conj() const {
    Symbol r(dim_, glob_);
    for (const auto& [k, c] : terms_)
      r.add_term(TermKey{mi_neg(k.freq), k.qpow, k.ppow}, c.conj());
    return r;
  }

  Symbol dq(int axis) const {
    Symbol r(dim_, glob_ == Globality::global ? Globality::global : Globality::chart);
    for (const auto& [k, c] : terms_) {
      if (k.qpow[axis] > 0) {
        TermKey key = k;
        key.qpow[axis] -= 1;
        r.add_term(std::move(key), c * TauScalar(k.qpow[axis]));
      }
      if (k.freq[axis] != 0) r.add_term(k, c * TauScalar::tau(1, GaussianRational(k.freq[axis])));
    }
    return r;
  }
  Symbol dp(int axis) const {
    Symbol r(dim_, glob_);
    for (const auto& [k, c] : terms_) {
      if (k.ppow[axis] > 0) {
        TermKey key = k;
        key.ppow[axis] -= 1;
        r.add_term(std::move(key), c * TauScalar(k.ppow[axis]));
      }
    }
    return r;
  }

  // Chart change q -> q + s for integral deck offsets; the trig factors are
  // untouched (e^{tau k.s} = 1 applies for integral s).
  Symbol substitute_offset(const MultiIndex& s) const;

  bool is_wave() const {
    for (const auto& [k, c] : terms_)
      if (mi_weight(k.ppow) != 0) return false;
    return true;
  }
  bool has_qpoly() const {
    for (const auto& [k, c] : terms_)
      if (mi_weight(k.qpow) != 0) return true;
    return false;
  }

  // iota^*: sets p = 0.
  Symbol zero_section_restrict() const {
    Symbol r(dim_, glob_);
    for (const auto& [k, c] : terms_)
      if (mi_weight(k.ppow) == 0) r.add_term(k, c);
    return r;
  }

  // Integral over T^n with normalized Lebesgue measure: the k = 0 Fourier
  // coefficient.  Requires a global wave function.
  TauScalar torus_integral() const {
    if (has_qpoly()) throw std::domain_error("torus_integral: non-global input");
    if (!is_wave()) throw std::domain_error("torus_integral: input depends on p");
    return coeff(TermKey{MultiIndex(dim_, 0), MultiIndex(dim_, 0), MultiIndex(dim_, 0)});
  }

  bool operator==(const Symbol& o) const { return dim_ == o.dim_ && terms_ == o.terms_; }

  std::string str() const;

 private:
  static Globality combine(Globality a, Globality b) {
    return (a == Globality::chart || b == Globality::chart) ? Globality::chart : Globality::global;
  }
  static MultiIndex mi_add(const MultiIndex& a, const MultiIndex& b) {
    MultiIndex r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
  }
  static MultiIndex mi_neg(const MultiIndex& a) {
    MultiIndex r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
  }
  void check_dim(const Symbol& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("Symbol: context (dimension) mismatch");
  }

  int dim_ = 1;
  Globality glob_ = Globality::global;
  std::map<TermKey, TauScalar> terms_;
};

inline Symbol operator*(const TauScalar& s, const Symbol& f) { return f * s; }

inline Symbol invert_element(const Symbol& f) {
  if (f.terms().size() != 1) throw std::domain_error("Symbol: only monomials are invertible");
  const auto& [key, c] = *f.terms().begin();
  if (mi_weight(key.qpow) != 0 || mi_weight(key.ppow) != 0)
    throw std::domain_error("Symbol: polynomial factors are not invertible");
  TermKey inv = key;
  for (auto& k : inv.freq) k = -k;
  return Symbol::monomial(std::move(inv), c.inverse(), f.globality());
}

inline TauScalar invert_element(const TauScalar& t) { return t.inverse(); }

// A wave function is a symbol without p-dependence (a function on T^n or on a
// chart of it); the alias documents intent at interfaces.
using WaveFunction = Symbol;

using SymbolSeries = FormalSeries<Symbol>;

inline SymbolSeries symbol_series(int order, Symbol value) {
  return series_constant(order, std::move(value));
}

// Entrywise conjugation; lambda is treated as a real formal parameter.
inline SymbolSeries series_conj(const SymbolSeries& f) {
  SymbolSeries out = f;
  for (int r = 0; r <= f.order(); ++r) out[r] = f[r].conj();
  return out;
}

std::string to_string(const Symbol& s);

}  // namespace starform
