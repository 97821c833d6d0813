#pragma once

#include <random>

#include "starform/symbol.hpp"

namespace starform {

// Deterministic generator of bounded random symbols for property tests and
// the CLI suites.  Sampling avoids std::uniform_int_distribution so that a
// fixed seed reproduces the same stream everywhere.
class SymbolGen {
 public:
  SymbolGen(std::uint64_t seed, int dim) : rng_(seed), dim_(dim) {}

  std::uint64_t pick(std::uint64_t bound) { return rng_() % bound; }
  int pick_range(int lo, int hi) { return lo + static_cast<int>(pick(hi - lo + 1)); }

  Rational rational();
  TauScalar coefficient();

  // Global symbol: trig factors and p-powers, no q-polynomials.
  Symbol global_symbol(int max_terms = 3, int max_freq = 1, int max_ppow = 2);
  // Global wave function: trig polynomial on T^n.
  Symbol wave(int max_terms = 3, int max_freq = 1);
  // Chart symbol: adds q-powers.
  Symbol chart_symbol(int max_terms = 3, int max_freq = 1, int max_pow = 2);

  SymbolSeries series(int order, bool chart = false);
  SymbolSeries wave_series(int order);

 private:
  Symbol sample(int max_terms, int max_freq, int max_qpow, int max_ppow);

  std::mt19937_64 rng_;
  int dim_;
};

}  // namespace starform
