#include "starform/random_symbols.hpp"

namespace starform {

Rational SymbolGen::rational() {
  int num = pick_range(-3, 3);
  if (num == 0) num = 1;
  int den = 1 + static_cast<int>(pick(2));
  return Rational(num, den);
}

TauScalar SymbolGen::coefficient() {
  GaussianRational g(rational());
  if (pick(2) == 0) g.im = rational();
  // Occasional tau factor keeps the conjugation path exercised.
  return pick(3) == 0 ? TauScalar::tau(1, g) : TauScalar(g);
}

Symbol SymbolGen::sample(int max_terms, int max_freq, int max_qpow, int max_ppow) {
  Symbol s(dim_, max_qpow > 0 ? Globality::chart : Globality::global);
  int terms = 1 + static_cast<int>(pick(max_terms));
  for (int t = 0; t < terms; ++t) {
    TermKey key{MultiIndex(dim_, 0), MultiIndex(dim_, 0), MultiIndex(dim_, 0)};
    for (int i = 0; i < dim_; ++i) {
      key.freq[i] = pick_range(-max_freq, max_freq);
      if (max_qpow > 0) key.qpow[i] = static_cast<int>(pick(max_qpow + 1));
      if (max_ppow > 0) key.ppow[i] = static_cast<int>(pick(max_ppow + 1));
    }
    s.add_term(std::move(key), coefficient());
  }
  return s;
}

Symbol SymbolGen::global_symbol(int max_terms, int max_freq, int max_ppow) {
  return sample(max_terms, max_freq, 0, max_ppow);
}

Symbol SymbolGen::wave(int max_terms, int max_freq) {
  return sample(max_terms, max_freq, 0, 0);
}

Symbol SymbolGen::chart_symbol(int max_terms, int max_freq, int max_pow) {
  return sample(max_terms, max_freq, max_pow, max_pow);
}

SymbolSeries SymbolGen::series(int order, bool chart) {
  SymbolSeries f(order, Symbol::zero(dim_, chart ? Globality::chart : Globality::global));
  for (int r = 0; r <= order; ++r) f[r] = chart ? chart_symbol() : global_symbol();
  return f;
}

SymbolSeries SymbolGen::wave_series(int order) {
  SymbolSeries f(order, Symbol::zero(dim_));
  for (int r = 0; r <= order; ++r) f[r] = wave();
  return f;
}

}  // namespace starform
